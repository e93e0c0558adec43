#ifndef RACG_GRAPH_HPP
#define RACG_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace racg {

/// Index of a vertex in the declaration order of its graph.
using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

/**
 * Finite simplicial graph with named vertices.
 *
 * Vertex order is fixed at construction and is the order used by every
 * canonical form built on top of the graph. Instances are immutable.
 */
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Throws std::invalid_argument on duplicate names, loops, duplicate
  /// edges or out-of-range endpoints.
  SimplicialGraph(std::vector<std::string> names, const std::vector<Edge>& edges);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<VertexId> find(std::string_view name) const;
  /// Like find() but throws std::invalid_argument for unknown names.
  VertexId id(std::string_view name) const;

  bool adjacent(VertexId u, VertexId v) const { return adj_[u * names_.size() + v] != 0; }
  const std::vector<VertexId>& neighbors(VertexId u) const { return nbrs_.at(u); }
  std::size_t degree(VertexId u) const { return nbrs_.at(u).size(); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const { return edge_count_; }

  friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) {
    return a.names_ == b.names_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<VertexId>> nbrs_;
  std::size_t edge_count_ = 0;
};

using GraphPtr = std::shared_ptr<const SimplicialGraph>;

inline GraphPtr share(SimplicialGraph g) {
  return std::make_shared<const SimplicialGraph>(std::move(g));
}

/// {u} together with its neighbours, sorted.
std::vector<VertexId> star(const SimplicialGraph& g, VertexId u);
/// Neighbours of u, sorted.
std::vector<VertexId> link(const SimplicialGraph& g, VertexId u);

std::size_t clique_number(const SimplicialGraph& g);
bool is_triangle_free(const SimplicialGraph& g);

/// Connected components, each sorted, ordered by least vertex.
std::vector<std::vector<VertexId>> connected_components(const SimplicialGraph& g);

/// Components of the subgraph induced on V(g) minus star(u).
std::vector<std::vector<VertexId>> components_minus_star(const SimplicialGraph& g, VertexId u);

/// Subgraph induced on `vertices` (kept in the given order).
SimplicialGraph induced_subgraph(const SimplicialGraph& g, const std::vector<VertexId>& vertices);

bool is_forest(const SimplicialGraph& g);
bool is_tree(const SimplicialGraph& g);

/// Adjacency-preserving bijection a -> b (result[v] is the image of v), or
/// nullopt. Deterministic: the first bijection in backtracking order.
std::optional<std::vector<VertexId>> graph_isomorphic(const SimplicialGraph& a,
                                                      const SimplicialGraph& b);

/// Vertices w such that some automorphism of g sends v to w (sorted).
std::vector<VertexId> automorphism_orbit(const SimplicialGraph& g, VertexId v);

/// True when `map` sends edges of `from` to edges of `to`.
bool is_graph_morphism(const SimplicialGraph& from, const SimplicialGraph& to,
                       const std::vector<VertexId>& map);

/// Whether `map` also sends degree-2 vertices to vertices of degree >= 2 and
/// vertices of degree >= 3 to vertices of degree >= 3.
bool respects_tree_degrees(const SimplicialGraph& from, const SimplicialGraph& to,
                           const std::vector<VertexId>& map);

/// Graph morphism R -> S between trees that sends degree-2 vertices to
/// vertices of degree >= 2 and degree >= 3 vertices to degree >= 3 vertices.
/// Throws std::invalid_argument unless both inputs are trees.
std::optional<std::vector<VertexId>> tree_morphism_search(const SimplicialGraph& r,
                                                          const SimplicialGraph& s);

/// Named fixtures. Paths and stars use letter names (a, b, c, ...), cycles use
/// v1..vn.
namespace graphs {
SimplicialGraph path(std::size_t vertices);
SimplicialGraph cycle(std::size_t n);
SimplicialGraph edgeless(std::size_t n);
SimplicialGraph complete(std::size_t n);
/// One centre joined to `leaves` leaves.
SimplicialGraph star(std::size_t leaves);
/// Two adjacent vertices of degree 3, each with two pendant leaves.
SimplicialGraph double_star();
/// Branch vertices x, y, z on a path with d(x, y) = p and d(y, z) = q; x and z
/// carry two pendant leaves, y carries one, so all three have degree 3.
SimplicialGraph tpq(std::size_t p, std::size_t q);
/// Disjoint union, names of the second graph are suffixed until unique.
SimplicialGraph disjoint_union(const SimplicialGraph& a, const SimplicialGraph& b);
}  // namespace graphs

}  // namespace racg

#endif  // RACG_GRAPH_HPP
