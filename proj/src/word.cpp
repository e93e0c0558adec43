#include "racg/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "racg/errors.hpp"

namespace racg {

namespace {

// Appends v to the reduced word w, cancelling it against an earlier v when
// every letter after that earlier v commutes with it.
void append_letter(const SimplicialGraph& g, std::vector<VertexId>& w, VertexId v) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] == v) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
      return;
    }
    if (!g.adjacent(w[i], v)) break;
  }
  w.push_back(v);
}

// Repeatedly emits the least letter that can be shuffled to the front.
std::vector<VertexId> canonical_order(const SimplicialGraph& g, std::vector<VertexId> rest) {
  std::vector<VertexId> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (rest[i] >= rest[best]) continue;
      bool front = true;
      for (std::size_t j = 0; j < i && front; ++j) front = g.adjacent(rest[j], rest[i]);
      if (front) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

}  // namespace

GroupElement GroupElement::from_word(GraphPtr graph, const std::vector<VertexId>& raw) {
  GroupElement out(std::move(graph));
  const SimplicialGraph& g = *out.graph_;
  std::vector<VertexId> w;
  w.reserve(raw.size());
  for (VertexId v : raw) {
    if (v >= g.size()) throw std::out_of_range("letter " + std::to_string(v) + " is not a vertex");
    append_letter(g, w, v);
  }
  out.word_ = canonical_order(g, std::move(w));
  return out;
}

bool same_graph(const GraphPtr& a, const GraphPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_graph(const GraphPtr& a, const GraphPtr& b, const char* where) {
  if (!same_graph(a, b)) throw GraphMismatch(where);
}

GroupElement reduce(GraphPtr graph, const std::vector<VertexId>& raw) {
  return GroupElement::from_word(std::move(graph), raw);
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require_same_graph(g.graph(), h.graph(), "multiply");
  std::vector<VertexId> w = g.word();
  w.insert(w.end(), h.word().begin(), h.word().end());
  return GroupElement::from_word(g.graph(), w);
}

GroupElement multiply(const GroupElement& g, VertexId v) {
  std::vector<VertexId> w = g.word();
  w.push_back(v);
  return GroupElement::from_word(g.graph(), w);
}

GroupElement inverse(const GroupElement& g) {
  std::vector<VertexId> w(g.word().rbegin(), g.word().rend());
  return GroupElement::from_word(g.graph(), w);
}

std::vector<VertexId> head(const GroupElement& g) {
  const auto& w = g.word();
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool front = true;
    for (std::size_t j = 0; j < i && front; ++j) front = g.ambient().adjacent(w[j], w[i]);
    if (front) out.push_back(w[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> tail(const GroupElement& g) {
  const auto& w = g.word();
  std::vector<VertexId> out;
  for (std::size_t i = w.size(); i-- > 0;) {
    bool back = true;
    for (std::size_t j = i + 1; j < w.size() && back; ++j) back = g.ambient().adjacent(w[j], w[i]);
    if (back) out.push_back(w[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prefix(const GroupElement& g, const GroupElement& h) {
  require_same_graph(g.graph(), h.graph(), "is_prefix");
  if (g.length() > h.length()) return false;
  return g.length() + multiply(inverse(g), h).length() == h.length();
}

CyclicReduction cyclic_reduce(const GroupElement& g) {
  CyclicReduction out{GroupElement(g.graph()), g};
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    std::vector<VertexId> hd = head(out.core), tl = tail(out.core), both;
    std::set_intersection(hd.begin(), hd.end(), tl.begin(), tl.end(), std::back_inserter(both));
    for (VertexId t : both) {
      GroupElement letter = GroupElement::generator(g.graph(), t);
      GroupElement next = letter * out.core * letter;
      if (next.length() < out.core.length()) {
        out.core = std::move(next);
        out.conjugator = multiply(out.conjugator, t);
        shrunk = true;
        break;
      }
    }
  }
  return out;
}

std::optional<Reflection> as_reflection(const GroupElement& g) {
  CyclicReduction c = cyclic_reduce(g);
  if (c.core.length() != 1) return std::nullopt;
  return Reflection{std::move(c.conjugator), c.core.word().front()};
}

}  // namespace racg
