#include "racg/cut_paste.hpp"

#include <algorithm>
#include <stdexcept>

#include "racg/errors.hpp"
#include "racg/io.hpp"

namespace racg {

namespace {

std::optional<std::string> translation_violation(const Hyperplane& a, const Hyperplane& b) {
  if (a.label() != b.label()) return "A and B have the same label";
  if (a == b) return "A and B are distinct";
  if (transverse(a, b)) return "A and B are not transverse";
  if (!separates_hyperplane(a, b)) return "A separates 1 from B";
  return std::nullopt;
}

std::vector<std::size_t> transverse_members(const HyperplaneCollection& c, const Hyperplane& h) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != h && transverse(c[i], h)) out.push_back(i);
  return out;
}

}  // namespace

GroupElement translation(const Hyperplane& a, const Hyperplane& b) {
  require_same_graph(a.graph(), b.graph(), "translation");
  if (auto bad = translation_violation(a, b)) throw PreconditionError("translation", *bad);
  const SimplicialGraph& graph = a.g().ambient();
  const VertexId u = a.label();

  // The gate of N(B) in N(A) is convex and contains this seed, so walking
  // towards 1 inside it ends at the projection p of 1 onto the gate.
  GroupElement p = project_to_carrier(b.g(), a);
  const std::size_t gap = distance_to_carrier(p, b);
  for (bool moved = true; moved;) {
    moved = false;
    for (VertexId s : star(graph, u)) {
      GroupElement next = multiply(p, s);
      if (next.length() < p.length() && distance_to_carrier(next, b) == gap) {
        p = std::move(next);
        moved = true;
        break;
      }
    }
  }
  GroupElement q = project_to_carrier(p, b);
  GroupElement r = multiply(p, u);
  return r * inverse(q);
}

std::optional<std::string> cut_paste_violation(const HyperplaneCollection& c, const Hyperplane& a,
                                               const Hyperplane& b) {
  require_same_graph(c.graph(), a.graph(), "cut_and_paste");
  require_same_graph(c.graph(), b.graph(), "cut_and_paste");
  if (!is_peripheral(c)) return "collection is peripheral";
  if (auto bad = translation_violation(a, b)) return bad;
  if (transverse_members(c, a) != transverse_members(c, b))
    return "A and B are transverse to the same members";
  for (const auto& m : c.members()) {
    if (m == a || m == b) continue;
    if (separates_hyperplane(a, m) && !separates_hyperplane(b, m) && !transverse(a, m) && !transverse(b, m))
      return "no member lies between A and B";
  }
  return std::nullopt;
}

CutPasteMove plan_cut_and_paste(const HyperplaneCollection& c, const Hyperplane& a, const Hyperplane& b) {
  if (auto bad = cut_paste_violation(c, a, b)) throw PreconditionError("cut_and_paste", *bad);
  CutPasteMove move{a, b, translation(a, b), {}};
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != b && separates_hyperplane(b, c[i])) move.moved.push_back(i);
  return move;
}

HyperplaneCollection apply_move(const HyperplaneCollection& c, const CutPasteMove& move) {
  if (move.moved.empty()) return c;
  std::vector<Hyperplane> members = c.members();
  for (std::size_t i : move.moved) members[i] = translate(move.t, members[i]);
  HyperplaneCollection out(c.graph(), std::move(members));

  if (!is_peripheral(out)) throw std::logic_error("cut_and_paste: result is not peripheral");
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c.transverse(i, j) != out.transverse(i, j))
        throw std::logic_error("cut_and_paste: crossing pattern changed");
  if (total_carrier_distance(out) >= total_carrier_distance(c))
    throw std::logic_error("cut_and_paste: distance sum did not decrease");
  return out;
}

HyperplaneCollection cut_and_paste(const HyperplaneCollection& c, const Hyperplane& a, const Hyperplane& b) {
  return apply_move(c, plan_cut_and_paste(c, a, b));
}

std::size_t reduction_radius(std::size_t collection_size, std::size_t vertex_count) {
  return 2 * (1 + (1 + 2 * collection_size) * vertex_count);
}

namespace {

// Longest subsequence of pairwise non-transverse hyperplanes; along a
// geodesic such a subsequence is nested, each separating 1 from the next.
std::vector<Hyperplane> longest_nested_chain(const std::vector<Hyperplane>& seq) {
  const std::size_t n = seq.size();
  if (n == 0) return {};
  std::vector<std::size_t> best(n, 1), prev(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (best[i] + 1 > best[j] && !transverse(seq[i], seq[j])) best[j] = best[i] + 1, prev[j] = i;
  std::size_t end = static_cast<std::size_t>(std::max_element(best.begin(), best.end()) - best.begin());
  std::vector<Hyperplane> chain;
  for (std::size_t k = end; k != n; k = prev[k]) chain.push_back(seq[k]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

HyperplaneCollection reduce_collection(const HyperplaneCollection& c, std::vector<CutPasteMove>* log) {
  if (!is_peripheral(c)) throw PreconditionError("reduce_collection", "collection is peripheral");
  const std::size_t radius = reduction_radius(c.size(), c.graph()->size());
  HyperplaneCollection current = c;
  for (;;) {
    auto far = std::find_if(current.members().begin(), current.members().end(),
                            [&](const Hyperplane& m) { return carrier_distance(m) > radius; });
    if (far == current.members().end()) return current;

    // Every hyperplane on the geodesic from 1 to the carrier separates 1 from
    // the member, so any valid pair taken from the chain moves it closer.
    std::vector<Hyperplane> chain = longest_nested_chain(separating_hyperplanes(far->g()));
    std::optional<CutPasteMove> move;
    for (std::size_t s = 1; s < chain.size() && !move; ++s)
      for (std::size_t r = 0; r < s && !move; ++r)
        if (chain[r].label() == chain[s].label() && !cut_paste_violation(current, chain[r], chain[s]))
          move = plan_cut_and_paste(current, chain[r], chain[s]);
    if (!move)
      throw std::logic_error("reduce_collection: no cut-and-paste pair found below member " +
                             format_hyperplane(*far) + " (chain length " + std::to_string(chain.size()) + ")");
    current = apply_move(current, *move);
    if (log) log->push_back(std::move(*move));
  }
}

}  // namespace racg
