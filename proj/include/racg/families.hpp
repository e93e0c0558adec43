#ifndef RACG_FAMILIES_HPP
#define RACG_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "racg/peripheral.hpp"

namespace racg {

struct FamilyVerdict {
  bool yes = false;
  std::string reason;
  /// Explicit peripheral collection in the target, when one is built.
  std::optional<HyperplaneCollection> collection;
  /// Graph morphism source -> target, for the tree and forest criteria.
  std::optional<std::vector<VertexId>> map;
};

/// Whether C(C_m) embeds in C(C_n), m, n >= 5. Yes-verdicts carry a verified
/// peripheral collection in X(C_n) with crossing graph C_m.
FamilyVerdict cycle_embed(std::size_t m, std::size_t n);

/// Peripheral collection in X(C_n) tangent to a geodesic segment with k
/// vertices; its crossing graph is C_{k(n-4)+4} and its covolume is k.
HyperplaneCollection cycle_witness(const GraphPtr& cycle_n, std::size_t k);

/// Whether C(gamma) embeds in C(C_n), n >= 5.
FamilyVerdict graph_into_cycle(const SimplicialGraph& gamma, std::size_t n);

FamilyVerdict tree_embed(const SimplicialGraph& r, const SimplicialGraph& s);
/// The target must be a tree with at least three vertices.
FamilyVerdict forest_embed(const SimplicialGraph& f, const SimplicialGraph& t);

struct DoubleResult {
  GraphPtr psi;                     // two copies of gamma - {u} glued along link(u)
  HyperplaneCollection collection;  // in X(gamma); member i corresponds to vertex i of psi
};

/// Index-two copy of C(psi) in C(gamma); peripherality, the crossing graph and
/// covolume 2 are checked before returning.
DoubleResult double_graph(const GraphPtr& gamma, VertexId u);

}  // namespace racg

#endif  // RACG_FAMILIES_HPP
