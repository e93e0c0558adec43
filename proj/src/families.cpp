#include "racg/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "racg/errors.hpp"

namespace racg {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

bool is_cycle_graph(const SimplicialGraph& g) {
  if (g.size() < 3 || g.edge_count() != g.size() || connected_components(g).size() != 1) return false;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_union_of_paths(const SimplicialGraph& g) {
  if (!is_forest(g)) return false;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

}  // namespace

HyperplaneCollection cycle_witness(const GraphPtr& cycle_n, std::size_t k) {
  if (k == 0) throw PreconditionError("cycle_witness", "segment has at least one vertex");
  // Alternating v1, v3 never commute, so the prefixes form a convex segment.
  std::vector<GroupElement> region{GroupElement(cycle_n)};
  for (std::size_t i = 1; i < k; ++i) region.push_back(multiply(region.back(), i % 2 ? 0 : 2));
  return HyperplaneCollection(cycle_n, tangent_hyperplanes(cycle_n, region));
}

FamilyVerdict cycle_embed(std::size_t m, std::size_t n) {
  if (m < 5 || n < 5) throw PreconditionError("cycle_embed", "m, n >= 5");
  FamilyVerdict out;
  if ((m - 4) % (n - 4) != 0) {
    out.reason = std::to_string(n - 4) + " does not divide " + std::to_string(m - 4);
    return out;
  }
  const std::size_t k = (m - 4) / (n - 4);
  GraphPtr target = share(graphs::cycle(n));
  HyperplaneCollection c = cycle_witness(target, k);
  check(is_peripheral(c), "cycle_embed: witness is not peripheral");
  check(graph_isomorphic(crossing_graph(c), graphs::cycle(m)).has_value(),
        "cycle_embed: witness crossing graph is not C_" + std::to_string(m));
  check(covolume(c).value == k, "cycle_embed: witness covolume differs from the segment length");
  out.yes = true;
  out.reason = "hyperplanes tangent to a segment of " + std::to_string(k) + " vertices in X(C_" +
               std::to_string(n) + "); index " + std::to_string(k);
  out.collection = std::move(c);
  return out;
}

FamilyVerdict graph_into_cycle(const SimplicialGraph& gamma, std::size_t n) {
  if (n < 5) throw PreconditionError("graph_into_cycle", "n >= 5");
  if (is_union_of_paths(gamma)) return FamilyVerdict{true, "disjoint union of segments", std::nullopt, std::nullopt};
  if (is_cycle_graph(gamma) && gamma.size() >= 5) {
    FamilyVerdict out = cycle_embed(gamma.size(), n);
    if (out.yes) {
      // Rename the witness crossing graph onto gamma's vertices.
      auto iso = graph_isomorphic(gamma, crossing_graph(*out.collection));
      std::vector<Hyperplane> members;
      for (VertexId v = 0; v < gamma.size(); ++v) members.push_back((*out.collection)[(*iso)[v]]);
      out.collection = HyperplaneCollection(out.collection->graph(), std::move(members));
    }
    return out;
  }
  FamilyVerdict out;
  out.reason = is_cycle_graph(gamma) ? "cycles of length 3 or 4 do not embed"
                                     : "not a disjoint union of segments or a single cycle";
  return out;
}

FamilyVerdict tree_embed(const SimplicialGraph& r, const SimplicialGraph& s) {
  if (!is_tree(r)) throw PreconditionError("tree_embed", "source is a tree");
  if (!is_tree(s)) throw PreconditionError("tree_embed", "target is a tree");
  FamilyVerdict out;
  out.map = tree_morphism_search(r, s);
  out.yes = out.map.has_value();
  out.reason = out.yes ? "graph morphism respecting degrees 2 and >= 3"
                       : "no graph morphism sends degree-2 vertices to degree >= 2 and degree >= 3 to degree >= 3";
  return out;
}

FamilyVerdict forest_embed(const SimplicialGraph& f, const SimplicialGraph& t) {
  if (!is_forest(f)) throw PreconditionError("forest_embed", "source is a forest");
  if (!is_tree(t)) throw PreconditionError("forest_embed", "target is a tree");
  if (t.size() < 3)
    throw PreconditionError("forest_embed",
                            "target has at least three vertices (the free product of components needs room)");
  FamilyVerdict out{true, "every component embeds", std::nullopt, std::vector<VertexId>(f.size(), 0)};
  for (const auto& comp : connected_components(f)) {
    auto verdict = tree_embed(induced_subgraph(f, comp), t);
    if (!verdict.yes) {
      out.yes = false;
      out.reason = "component containing '" + f.name(comp.front()) + "' does not embed";
      out.map.reset();
      return out;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) (*out.map)[comp[i]] = (*verdict.map)[i];
  }
  return out;
}

DoubleResult double_graph(const GraphPtr& gamma, VertexId u) {
  const SimplicialGraph& g = *gamma;
  if (u >= g.size()) throw PreconditionError("double", "u is a vertex");
  std::vector<VertexId> originals, copies;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (v != u) originals.push_back(v);
    if (v != u && !g.adjacent(u, v)) copies.push_back(v);
  }
  std::vector<std::string> names;
  for (VertexId v : originals) names.push_back(g.name(v));
  for (VertexId v : copies) {
    std::string fresh = g.name(v) + "'";
    while (std::find(names.begin(), names.end(), fresh) != names.end() || g.find(fresh)) fresh += "'";
    names.push_back(fresh);
  }
  // Psi vertex i stands for the Gamma vertex source[i]; copies are glued to
  // the originals only through link(u).
  std::vector<VertexId> source = originals;
  source.insert(source.end(), copies.begin(), copies.end());
  const std::size_t first_copy = originals.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = i + 1; j < source.size(); ++j) {
      if (!g.adjacent(source[i], source[j])) continue;
      const bool ci = i >= first_copy, cj = j >= first_copy;
      if (ci == cj || (ci ? g.adjacent(u, source[j]) : g.adjacent(u, source[i]))) edges.emplace_back(i, j);
    }
  GraphPtr psi = share(SimplicialGraph(std::move(names), edges));

  std::vector<Hyperplane> members;
  GroupElement one(gamma), ug = GroupElement::generator(gamma, u);
  for (VertexId v : originals) members.push_back(canonicalize(one, v));
  for (VertexId v : copies) members.push_back(canonicalize(ug, v));
  HyperplaneCollection c(gamma, std::move(members));

  check(is_peripheral(c), "double: collection is not peripheral");
  SimplicialGraph crossing = crossing_graph(c);
  for (VertexId i = 0; i < psi->size(); ++i)
    for (VertexId j = i + 1; j < psi->size(); ++j)
      check(crossing.adjacent(i, j) == psi->adjacent(i, j), "double: crossing graph differs from the glued graph");
  check(covolume(c).value == std::size_t{2}, "double: covolume is not 2");
  return DoubleResult{psi, std::move(c)};
}

}  // namespace racg
