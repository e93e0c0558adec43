#ifndef RACG_CUT_PASTE_HPP
#define RACG_CUT_PASTE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "racg/peripheral.hpp"

namespace racg {

/// Element carrying B onto A and the 1-side of B onto the 1-side of A.
/// A, B must share a label, be distinct and non-transverse, and A must
/// separate 1 from B; each violation raises its own PreconditionError.
GroupElement translation(const Hyperplane& a, const Hyperplane& b);

struct CutPasteMove {
  Hyperplane a;
  Hyperplane b;
  GroupElement t;
  std::vector<std::size_t> moved;  // member indices separated from 1 by b
};

/// First failed cut-and-paste precondition, if any.
std::optional<std::string> cut_paste_violation(const HyperplaneCollection& c, const Hyperplane& a,
                                               const Hyperplane& b);

CutPasteMove plan_cut_and_paste(const HyperplaneCollection& c, const Hyperplane& a, const Hyperplane& b);
/// Applies a planned move and checks that the result is peripheral with the
/// same crossing pattern and, when something moved, a smaller distance sum.
HyperplaneCollection apply_move(const HyperplaneCollection& c, const CutPasteMove& move);
HyperplaneCollection cut_and_paste(const HyperplaneCollection& c, const Hyperplane& a, const Hyperplane& b);

/// 2(1 + (1 + 2|C|)|V|).
std::size_t reduction_radius(std::size_t collection_size, std::size_t vertex_count);

/// Cuts and pastes until every member's carrier meets the ball of radius
/// reduction_radius. Moves performed are appended to `log` when given.
HyperplaneCollection reduce_collection(const HyperplaneCollection& c, std::vector<CutPasteMove>* log = nullptr);

}  // namespace racg

#endif  // RACG_CUT_PASTE_HPP
