#ifndef RACG_WORD_HPP
#define RACG_WORD_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

// Element of C(Γ) stored as its canonical reduced word: at each position the
// letter is the least vertex that can be shuffled to the front of the rest.
// Equal elements therefore have identical words.
class GroupElement {
 public:
  GroupElement() = default;
  /// Identity of C(graph).
  explicit GroupElement(GraphPtr graph) : graph_(std::move(graph)) {}

  /// Reduces and canonicalizes an arbitrary word. Throws std::out_of_range on
  /// a letter that is not a vertex.
  static GroupElement from_word(GraphPtr graph, const std::vector<VertexId>& raw);
  static GroupElement generator(GraphPtr graph, VertexId v) { return from_word(std::move(graph), {v}); }

  const GraphPtr& graph() const { return graph_; }
  const SimplicialGraph& ambient() const { return *graph_; }
  const std::vector<VertexId>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.word_ == b.word_; }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.word_.size() != b.word_.size() ? a.word_.size() < b.word_.size() : a.word_ < b.word_;
  }

 private:
  GraphPtr graph_;
  std::vector<VertexId> word_;
};

bool same_graph(const GraphPtr& a, const GraphPtr& b);
/// Throws GraphMismatch naming `where` unless a and b share a graph.
void require_same_graph(const GraphPtr& a, const GraphPtr& b, const char* where);

GroupElement reduce(GraphPtr graph, const std::vector<VertexId>& raw);
GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
inline GroupElement operator*(const GroupElement& g, const GroupElement& h) { return multiply(g, h); }
/// g * v for a single generator.
GroupElement multiply(const GroupElement& g, VertexId v);

/// Letters that can start a reduced word for g, sorted.
std::vector<VertexId> head(const GroupElement& g);
/// Letters that can end a reduced word for g, sorted.
std::vector<VertexId> tail(const GroupElement& g);

bool is_prefix(const GroupElement& g, const GroupElement& h);

struct CyclicReduction {
  GroupElement conjugator;
  GroupElement core;
};
/// g = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const GroupElement& g);

struct Reflection {
  GroupElement conjugator;
  VertexId label;
};
/// (c, u) with g = c u c^-1 when g is a conjugate of a generator.
std::optional<Reflection> as_reflection(const GroupElement& g);

}  // namespace racg

template <>
struct std::hash<racg::GroupElement> {
  std::size_t operator()(const racg::GroupElement& g) const noexcept {
    std::size_t h = g.length();
    for (auto v : g.word()) h = h * 1000003u ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    return h;
  }
};

#endif  // RACG_WORD_HPP
