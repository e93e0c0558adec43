#include "racg/hyperplane.hpp"

#include <algorithm>

#include "racg/errors.hpp"

namespace racg {

namespace {

bool in_star(const SimplicialGraph& g, VertexId u, VertexId v) { return u == v || g.adjacent(u, v); }

}  // namespace

Hyperplane canonicalize(const GroupElement& g, VertexId u) {
  const SimplicialGraph& graph = g.ambient();
  if (u >= graph.size()) throw std::out_of_range("hyperplane label is not a vertex");
  GroupElement x = g;
  for (bool moved = true; moved;) {
    moved = false;
    for (VertexId t : tail(x))
      if (in_star(graph, u, t)) {
        x = multiply(x, t);
        moved = true;
        break;
      }
  }
  return Hyperplane(std::move(x), u);
}

bool hyperplanes_equal(const Hyperplane& j, const Hyperplane& h) {
  require_same_graph(j.graph(), h.graph(), "hyperplanes_equal");
  return j == h;
}

bool hyperplanes_equal_by_cosets(const GroupElement& g, VertexId u, const GroupElement& h, VertexId v) {
  require_same_graph(g.graph(), h.graph(), "hyperplanes_equal_by_cosets");
  if (u != v) return false;
  GroupElement k = inverse(g) * h;
  return std::all_of(k.word().begin(), k.word().end(),
                     [&](VertexId t) { return in_star(g.ambient(), u, t); });
}

bool transverse(const Hyperplane& j, const Hyperplane& h) {
  require_same_graph(j.graph(), h.graph(), "transverse");
  if (j == h) throw PreconditionError("transverse", "hyperplanes are distinct");
  const SimplicialGraph& graph = j.g().ambient();
  const VertexId u = j.label(), v = h.label();
  if (!graph.adjacent(u, v)) return false;
  // Strip star(u) letters on the left and star(v) letters on the right until
  // neither applies; what remains is the shortest element of the double coset.
  GroupElement k = inverse(j.g()) * h.g();
  for (bool moved = true; moved && !k.is_identity();) {
    moved = false;
    for (VertexId t : head(k))
      if (in_star(graph, u, t)) {
        k = GroupElement::generator(k.graph(), t) * k;
        moved = true;
        break;
      }
    if (moved) continue;
    for (VertexId t : tail(k))
      if (in_star(graph, v, t)) {
        k = multiply(k, t);
        moved = true;
        break;
      }
  }
  return k.is_identity();
}

bool separates_point(const Hyperplane& j, const GroupElement& x) {
  return is_prefix(multiply(j.g(), j.label()), x);
}

bool separates_hyperplane(const Hyperplane& j, const Hyperplane& h) {
  require_same_graph(j.graph(), h.graph(), "separates_hyperplane");
  if (j == h) throw PreconditionError("separates_hyperplane", "hyperplanes are distinct");
  return is_prefix(multiply(j.g(), j.label()), h.g());
}

std::size_t carrier_distance(const Hyperplane& j) { return j.g().length(); }

Hyperplane translate(const GroupElement& x, const Hyperplane& j) {
  require_same_graph(x.graph(), j.graph(), "translate");
  return canonicalize(x * j.g(), j.label());
}

std::vector<Hyperplane> separating_hyperplanes(const GroupElement& x) {
  std::vector<Hyperplane> out;
  out.reserve(x.length());
  std::vector<VertexId> prefix;
  for (VertexId v : x.word()) {
    out.push_back(canonicalize(GroupElement::from_word(x.graph(), prefix), v));
    prefix.push_back(v);
  }
  return out;
}

std::size_t distance_to_carrier(const GroupElement& x, const Hyperplane& j) {
  return translate(inverse(x), j).g().length();
}

GroupElement project_to_carrier(const GroupElement& x, const Hyperplane& j) {
  return x * translate(inverse(x), j).g();
}

bool in_carrier(const GroupElement& x, const Hyperplane& j) { return distance_to_carrier(x, j) == 0; }

}  // namespace racg
