#ifndef RACG_PERIPHERAL_HPP
#define RACG_PERIPHERAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "racg/hyperplane.hpp"

namespace racg {

/// Position of the second hyperplane relative to the first, seen from 1.
enum class Relation : std::uint8_t {
  Equal,
  Transverse,
  FirstSeparates,   // first separates 1 from second
  SecondSeparates,  // second separates 1 from first
  Disjoint,         // neither crosses nor nests
};

Relation classify(const Hyperplane& a, const Hyperplane& b);

/// Ordered set of distinct hyperplanes with their pairwise relations cached.
class HyperplaneCollection {
 public:
  HyperplaneCollection() = default;
  /// Throws PreconditionError on repeated members and GraphMismatch when a
  /// member lives over another graph.
  HyperplaneCollection(GraphPtr graph, std::vector<Hyperplane> members);

  const GraphPtr& graph() const { return graph_; }
  const std::vector<Hyperplane>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Hyperplane& operator[](std::size_t i) const { return members_[i]; }

  Relation relation(std::size_t i, std::size_t j) const { return relations_[i * members_.size() + j]; }
  bool transverse(std::size_t i, std::size_t j) const { return relation(i, j) == Relation::Transverse; }
  /// Member i separates 1 from member j.
  bool separates(std::size_t i, std::size_t j) const { return relation(i, j) == Relation::FirstSeparates; }

  std::optional<std::size_t> index_of(const Hyperplane& h) const;

 private:
  GraphPtr graph_;
  std::vector<Hyperplane> members_;
  std::vector<Relation> relations_;
};

bool is_peripheral(const HyperplaneCollection& c);

/// Vertices are the members in order, named by their printed form; edges join
/// transverse members.
SimplicialGraph crossing_graph(const HyperplaneCollection& c);

struct Covolume {
  std::optional<std::size_t> value;  // empty means infinite
  bool finite() const { return value.has_value(); }
  friend bool operator==(const Covolume&, const Covolume&) = default;
};

/// Number of vertices on the 1-side of every member. Requires a peripheral
/// collection.
Covolume covolume(const HyperplaneCollection& c);

/// The reflection g u g^-1 along g J_u.
GroupElement reflection(const Hyperplane& j);

std::size_t total_carrier_distance(const HyperplaneCollection& c);

/// Hyperplanes dual to the edges leaving `region`, in order of discovery
/// (region order, then label order).
std::vector<Hyperplane> tangent_hyperplanes(const GraphPtr& graph, const std::vector<GroupElement>& region);

struct BasisCertificate {
  HyperplaneCollection collection;
  std::vector<GroupElement> reflections;
  SimplicialGraph crossing_graph;
};

/// Requires a peripheral collection; the reflections then freely generate a
/// copy of C(crossing graph).
BasisCertificate certify_basis(const HyperplaneCollection& c);

}  // namespace racg

#endif  // RACG_PERIPHERAL_HPP
