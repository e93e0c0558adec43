#ifndef RACG_HYPERPLANE_HPP
#define RACG_HYPERPLANE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "racg/word.hpp"

namespace racg {

/// The hyperplane g J_u, always held in canonical form: no letter of tail(g)
/// lies in star(u), so g is the vertex of the carrier closest to 1.
class Hyperplane {
 public:
  Hyperplane() = default;

  const GroupElement& g() const { return g_; }
  VertexId label() const { return u_; }
  const GraphPtr& graph() const { return g_.graph(); }

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.u_ == b.u_ && a.g_ == b.g_;
  }
  friend bool operator!=(const Hyperplane& a, const Hyperplane& b) { return !(a == b); }
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    return a.g_ == b.g_ ? a.u_ < b.u_ : a.g_ < b.g_;
  }

 private:
  friend Hyperplane canonicalize(const GroupElement& g, VertexId u);
  Hyperplane(GroupElement g, VertexId u) : g_(std::move(g)), u_(u) {}

  GroupElement g_;
  VertexId u_ = 0;
};

Hyperplane canonicalize(const GroupElement& g, VertexId u);

bool hyperplanes_equal(const Hyperplane& j, const Hyperplane& h);
/// Equality decided from the coset description: same label and every letter
/// of g^-1 h in star(u). Accepts arbitrary representatives.
bool hyperplanes_equal_by_cosets(const GroupElement& g, VertexId u, const GroupElement& h, VertexId v);

/// Throws PreconditionError when j == h.
bool transverse(const Hyperplane& j, const Hyperplane& h);

/// Whether j separates 1 from x.
bool separates_point(const Hyperplane& j, const GroupElement& x);
/// Whether j separates 1 from h. Throws PreconditionError when j == h.
bool separates_hyperplane(const Hyperplane& j, const Hyperplane& h);

std::size_t carrier_distance(const Hyperplane& j);
/// The image x * j.
Hyperplane translate(const GroupElement& x, const Hyperplane& j);

/// Hyperplanes crossed by the canonical geodesic from 1 to x, in order.
std::vector<Hyperplane> separating_hyperplanes(const GroupElement& x);

/// d(x, N(j)).
std::size_t distance_to_carrier(const GroupElement& x, const Hyperplane& j);
/// The vertex of N(j) closest to x.
GroupElement project_to_carrier(const GroupElement& x, const Hyperplane& j);
bool in_carrier(const GroupElement& x, const Hyperplane& j);

}  // namespace racg

template <>
struct std::hash<racg::Hyperplane> {
  std::size_t operator()(const racg::Hyperplane& j) const noexcept {
    return std::hash<racg::GroupElement>{}(j.g()) * 31u + j.label();
  }
};

#endif  // RACG_HYPERPLANE_HPP
