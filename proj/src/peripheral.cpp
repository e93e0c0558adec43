#include "racg/peripheral.hpp"

#include <algorithm>
#include <unordered_set>

#include "racg/errors.hpp"
#include "racg/io.hpp"

namespace racg {

Relation classify(const Hyperplane& a, const Hyperplane& b) {
  if (a == b) return Relation::Equal;
  if (transverse(a, b)) return Relation::Transverse;
  if (separates_hyperplane(a, b)) return Relation::FirstSeparates;
  if (separates_hyperplane(b, a)) return Relation::SecondSeparates;
  return Relation::Disjoint;
}

HyperplaneCollection::HyperplaneCollection(GraphPtr graph, std::vector<Hyperplane> members)
    : graph_(std::move(graph)), members_(std::move(members)) {
  const std::size_t n = members_.size();
  for (const auto& m : members_) require_same_graph(graph_, m.graph(), "HyperplaneCollection");
  relations_.assign(n * n, Relation::Equal);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Relation r = classify(members_[i], members_[j]);
      if (r == Relation::Equal)
        throw PreconditionError("HyperplaneCollection",
                                "members are distinct (" + format_hyperplane(members_[i]) + " repeats)");
      relations_[i * n + j] = r;
      relations_[j * n + i] = r == Relation::FirstSeparates    ? Relation::SecondSeparates
                              : r == Relation::SecondSeparates ? Relation::FirstSeparates
                                                               : r;
    }
}

std::optional<std::size_t> HyperplaneCollection::index_of(const Hyperplane& h) const {
  auto it = std::find(members_.begin(), members_.end(), h);
  if (it == members_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool is_peripheral(const HyperplaneCollection& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c.separates(i, j)) return false;
  return true;
}

SimplicialGraph crossing_graph(const HyperplaneCollection& c) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < c.size(); ++i) {
    names.push_back(format_hyperplane(c[i]));
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c.transverse(i, j)) edges.emplace_back(i, j);
  }
  return SimplicialGraph(std::move(names), edges);
}

Covolume covolume(const HyperplaneCollection& c) {
  if (!is_peripheral(c)) throw PreconditionError("covolume", "collection is peripheral");
  const SimplicialGraph& graph = *c.graph();
  std::size_t cutoff = clique_number(graph) + 1;
  for (const auto& m : c.members()) cutoff += carrier_distance(m);

  // The kept region is convex and contains 1, so a neighbour xv farther from 1
  // lies in it exactly when x does and the hyperplane dual to (x, xv) is not a
  // member. Membership is decided edge by edge, so depth-first order is as good
  // as breadth-first and reaches the cutoff much sooner when the region is
  // infinite.
  std::unordered_set<Hyperplane> walls(c.members().begin(), c.members().end());
  std::unordered_set<GroupElement> seen;
  std::vector<GroupElement> stack;
  GroupElement one(c.graph());
  seen.insert(one);
  stack.push_back(one);
  while (!stack.empty()) {
    GroupElement x = std::move(stack.back());
    stack.pop_back();
    for (VertexId v = 0; v < graph.size(); ++v) {
      GroupElement y = multiply(x, v);
      if (y.length() < x.length() || seen.count(y)) continue;
      if (walls.count(canonicalize(x, v))) continue;
      if (y.length() >= cutoff) return Covolume{std::nullopt};
      seen.insert(y);
      stack.push_back(std::move(y));
    }
  }
  return Covolume{seen.size()};
}

GroupElement reflection(const Hyperplane& j) {
  return multiply(j.g(), j.label()) * inverse(j.g());
}

std::size_t total_carrier_distance(const HyperplaneCollection& c) {
  std::size_t total = 0;
  for (const auto& m : c.members()) total += carrier_distance(m);
  return total;
}

std::vector<Hyperplane> tangent_hyperplanes(const GraphPtr& graph, const std::vector<GroupElement>& region) {
  std::unordered_set<GroupElement> inside(region.begin(), region.end());
  std::vector<Hyperplane> out;
  for (const auto& y : region)
    for (VertexId v = 0; v < graph->size(); ++v) {
      if (inside.count(multiply(y, v))) continue;
      Hyperplane h = canonicalize(y, v);
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
  return out;
}

BasisCertificate certify_basis(const HyperplaneCollection& c) {
  if (!is_peripheral(c)) throw PreconditionError("certify_basis", "collection is peripheral");
  BasisCertificate out{c, {}, crossing_graph(c)};
  for (const auto& m : c.members()) out.reflections.push_back(reflection(m));
  return out;
}

}  // namespace racg
