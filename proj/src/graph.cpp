#include "racg/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace racg {

SimplicialGraph::SimplicialGraph(std::vector<std::string> names, const std::vector<Edge>& edges)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  {
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
      throw std::invalid_argument("duplicate vertex name '" + *it + "'");
  }
  adj_.assign(n * n, 0);
  nbrs_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop at vertex '" + names_[u] + "'");
    if (adj_[u * n + v])
      throw std::invalid_argument("duplicate edge " + names_[u] + " " + names_[v]);
    adj_[u * n + v] = adj_[v * n + u] = 1;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

std::optional<VertexId> SimplicialGraph::find(std::string_view name) const {
  for (VertexId v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

VertexId SimplicialGraph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

std::vector<Edge> SimplicialGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<VertexId> star(const SimplicialGraph& g, VertexId u) {
  std::vector<VertexId> out = g.neighbors(u);
  out.insert(std::upper_bound(out.begin(), out.end(), u), u);
  return out;
}

std::vector<VertexId> link(const SimplicialGraph& g, VertexId u) { return g.neighbors(u); }

namespace {

// Bron-Kerbosch with pivoting over plain vectors; graphs here are small.
void max_clique(const SimplicialGraph& g, std::size_t current, std::vector<VertexId> candidates,
                std::vector<VertexId> excluded, std::size_t& best) {
  if (candidates.empty() && excluded.empty()) {
    best = std::max(best, current);
    return;
  }
  if (current + candidates.size() <= best) return;
  VertexId pivot = candidates.empty() ? excluded.front() : candidates.front();
  std::size_t pivot_hits = 0;
  for (VertexId p : candidates) {
    std::size_t hits = 0;
    for (VertexId c : candidates) hits += g.adjacent(p, c);
    if (hits > pivot_hits) pivot_hits = hits, pivot = p;
  }
  std::vector<VertexId> branch;
  for (VertexId c : candidates)
    if (!g.adjacent(pivot, c)) branch.push_back(c);
  for (VertexId v : branch) {
    std::vector<VertexId> next_candidates, next_excluded;
    for (VertexId c : candidates)
      if (g.adjacent(v, c)) next_candidates.push_back(c);
    for (VertexId x : excluded)
      if (g.adjacent(v, x)) next_excluded.push_back(x);
    max_clique(g, current + 1, std::move(next_candidates), std::move(next_excluded), best);
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.push_back(v);
  }
}

}  // namespace

std::size_t clique_number(const SimplicialGraph& g) {
  if (g.empty()) return 0;
  std::vector<VertexId> all(g.size());
  std::iota(all.begin(), all.end(), VertexId{0});
  std::size_t best = 1;
  max_clique(g, 0, all, {}, best);
  return best;
}

bool is_triangle_free(const SimplicialGraph& g) {
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v : g.neighbors(u))
      if (v > u)
        for (VertexId w : g.neighbors(v))
          if (w > v && g.adjacent(u, w)) return false;
  return true;
}

namespace {

std::vector<std::vector<VertexId>> components_of(const SimplicialGraph& g,
                                                 const std::vector<bool>& allowed) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(g.size(), false);
  for (VertexId s = 0; s < g.size(); ++s) {
    if (!allowed[s] || seen[s]) continue;
    std::vector<VertexId> comp;
    std::vector<VertexId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v))
        if (allowed[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<std::vector<VertexId>> connected_components(const SimplicialGraph& g) {
  return components_of(g, std::vector<bool>(g.size(), true));
}

std::vector<std::vector<VertexId>> components_minus_star(const SimplicialGraph& g, VertexId u) {
  if (u >= g.size()) throw std::invalid_argument("vertex index out of range");
  std::vector<bool> allowed(g.size(), true);
  for (VertexId v : star(g, u)) allowed[v] = false;
  return components_of(g, allowed);
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const std::vector<VertexId>& vertices) {
  std::vector<std::string> names;
  names.reserve(vertices.size());
  for (VertexId v : vertices) names.push_back(g.name(v));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) edges.emplace_back(i, j);
  return SimplicialGraph(std::move(names), edges);
}

bool is_forest(const SimplicialGraph& g) {
  return g.edge_count() + connected_components(g).size() == g.size();
}

bool is_tree(const SimplicialGraph& g) { return !g.empty() && g.edge_count() + 1 == g.size() && is_forest(g); }

namespace {

// Backtracking isomorphism search; `pin` optionally forces pin->first to map
// to pin->second.
std::optional<std::vector<VertexId>> find_isomorphism(const SimplicialGraph& a,
                                                      const SimplicialGraph& b,
                                                      std::optional<Edge> pin) {
  const std::size_t n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  {
    std::vector<std::size_t> da(n), db(n);
    for (VertexId v = 0; v < n; ++v) da[v] = a.degree(v), db[v] = b.degree(v);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
  }
  // Search order: BFS within each component, components seeded by high degree.
  std::vector<VertexId> order;
  std::vector<bool> placed(n, false);
  auto seed_order = [&](VertexId s) {
    std::queue<VertexId> q;
    q.push(s);
    placed[s] = true;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      order.push_back(v);
      for (VertexId w : a.neighbors(v))
        if (!placed[w]) placed[w] = true, q.push(w);
    }
  };
  if (pin) seed_order(pin->first);
  while (order.size() < n) {
    VertexId best = n;
    for (VertexId v = 0; v < n; ++v)
      if (!placed[v] && (best == n || a.degree(v) > a.degree(best))) best = v;
    seed_order(best);
  }

  std::vector<VertexId> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    VertexId v = order[depth];
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      if (pin && pin->first == v && pin->second != w) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        VertexId x = order[k];
        ok = a.adjacent(v, x) == b.adjacent(w, image[x]);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
    }
    image[v] = n;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace

std::optional<std::vector<VertexId>> graph_isomorphic(const SimplicialGraph& a,
                                                      const SimplicialGraph& b) {
  return find_isomorphism(a, b, std::nullopt);
}

std::vector<VertexId> automorphism_orbit(const SimplicialGraph& g, VertexId v) {
  std::vector<VertexId> orbit;
  for (VertexId w = 0; w < g.size(); ++w)
    if (w == v || find_isomorphism(g, g, Edge{v, w})) orbit.push_back(w);
  return orbit;
}

bool is_graph_morphism(const SimplicialGraph& from, const SimplicialGraph& to,
                       const std::vector<VertexId>& map) {
  if (map.size() != from.size()) return false;
  for (VertexId v : map)
    if (v >= to.size()) return false;
  for (auto [u, v] : from.edges())
    if (!to.adjacent(map[u], map[v])) return false;
  return true;
}

namespace {

bool degree_allowed(std::size_t from_degree, std::size_t to_degree) {
  if (from_degree == 2) return to_degree >= 2;
  if (from_degree >= 3) return to_degree >= 3;
  return true;
}

}  // namespace

bool respects_tree_degrees(const SimplicialGraph& from, const SimplicialGraph& to,
                           const std::vector<VertexId>& map) {
  if (!is_graph_morphism(from, to, map)) return false;
  for (VertexId v = 0; v < from.size(); ++v)
    if (!degree_allowed(from.degree(v), to.degree(map[v]))) return false;
  return true;
}

std::optional<std::vector<VertexId>> tree_morphism_search(const SimplicialGraph& r,
                                                          const SimplicialGraph& s) {
  if (!is_tree(r)) throw std::invalid_argument("tree_morphism_search: source is not a tree");
  if (!is_tree(s)) throw std::invalid_argument("tree_morphism_search: target is not a tree");

  const std::size_t nr = r.size(), ns = s.size();
  std::vector<VertexId> order, parent(nr, nr);
  {
    std::vector<bool> seen(nr, false);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      order.push_back(v);
      for (VertexId w : r.neighbors(v))
        if (!seen[w]) seen[w] = true, parent[w] = v, q.push(w);
    }
  }
  // feasible[v][t]: the subtree below v admits a valid map with v -> t.
  std::vector<std::vector<char>> feasible(nr, std::vector<char>(ns, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    for (VertexId t = 0; t < ns; ++t) {
      if (!degree_allowed(r.degree(v), s.degree(t))) continue;
      bool ok = true;
      for (VertexId c : r.neighbors(v)) {
        if (c == parent[v]) continue;
        bool child_ok = false;
        for (VertexId t2 : s.neighbors(t)) child_ok = child_ok || feasible[c][t2];
        if (!child_ok) {
          ok = false;
          break;
        }
      }
      feasible[v][t] = ok;
    }
  }
  std::vector<VertexId> map(nr, ns);
  for (VertexId t = 0; t < ns && map[0] == ns; ++t)
    if (feasible[0][t]) map[0] = t;
  if (map[0] == ns) return std::nullopt;
  for (VertexId v : order) {
    if (v == 0) continue;
    for (VertexId t : s.neighbors(map[parent[v]]))
      if (feasible[v][t]) {
        map[v] = t;
        break;
      }
  }
  return map;
}

namespace graphs {

namespace {

std::vector<std::string> letter_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i + 1));
  return names;
}

std::vector<std::string> indexed_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  return names;
}

}  // namespace

SimplicialGraph path(std::size_t vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < vertices; ++i) edges.emplace_back(i, i + 1);
  return SimplicialGraph(letter_names(vertices), edges);
}

SimplicialGraph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SimplicialGraph(indexed_names(n), edges);
}

SimplicialGraph edgeless(std::size_t n) { return SimplicialGraph(letter_names(n), {}); }

SimplicialGraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return SimplicialGraph(letter_names(n), edges);
}

SimplicialGraph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return SimplicialGraph(letter_names(leaves + 1), edges);
}

SimplicialGraph double_star() {
  return SimplicialGraph({"a", "b", "c", "d", "e", "f"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

SimplicialGraph tpq(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("tpq needs p, q >= 1");
  const std::size_t spine = p + q + 1;
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spine; ++i) names.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  auto leaf = [&](std::size_t at) {
    names.push_back("l" + std::to_string(names.size() - spine));
    edges.emplace_back(at, names.size() - 1);
  };
  leaf(0), leaf(0), leaf(p), leaf(spine - 1), leaf(spine - 1);
  return SimplicialGraph(std::move(names), edges);
}

SimplicialGraph disjoint_union(const SimplicialGraph& a, const SimplicialGraph& b) {
  std::vector<std::string> names = a.names();
  for (const auto& name : b.names()) {
    std::string fresh = name;
    while (std::find(names.begin(), names.end(), fresh) != names.end()) fresh += "'";
    names.push_back(fresh);
  }
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.size(), v + a.size());
  return SimplicialGraph(std::move(names), edges);
}

}  // namespace graphs

}  // namespace racg
