#ifndef RACG_EMBED_SEARCH_HPP
#define RACG_EMBED_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "racg/peripheral.hpp"

namespace racg {

/// Hyperplanes dual to edges of the ball B(1, r): every canonical (g, u) with
/// |g| <= r - 1, in order of first discovery by a breadth-first walk.
std::vector<Hyperplane> enumerate_hyperplanes(const GraphPtr& psi, std::size_t r);

/// 2(1 + (1 + 2|V(phi)|)|V(psi)|): witnesses, when they exist, can be found
/// among hyperplanes meeting this ball.
std::size_t embedding_bound(std::size_t phi_vertices, std::size_t psi_vertices);
/// Smallest max_radius at which a negative answer is reported as No.
std::size_t complete_search_radius(std::size_t phi_vertices, std::size_t psi_vertices);

struct SearchOptions {
  std::size_t max_radius = 4;
  bool deterministic = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SearchVerdict {
  enum class Kind { Yes, No, NoWithinRadius };
  Kind kind = Kind::NoWithinRadius;
  /// Yes only. Member i is the image of vertex i of phi.
  std::optional<BasisCertificate> certificate;
  std::optional<std::size_t> index;  // finite-index searches only
  std::size_t radius = 0;            // radius of the witness, or the last radius searched
  std::size_t nodes = 0;             // search tree nodes visited
};

/// Peripheral collection in X(psi) whose crossing graph is phi, by iterative
/// deepening over r = 1..max_radius. psi must be triangle-free.
SearchVerdict find_peripheral_collection(const GraphPtr& psi, const SimplicialGraph& phi,
                                         const SearchOptions& options = {});

/// As find_peripheral_collection, additionally requiring finite covolume.
/// phi must have no isolated vertex.
SearchVerdict find_finite_index(const GraphPtr& psi, const SimplicialGraph& phi,
                                const SearchOptions& options = {});

}  // namespace racg

#endif  // RACG_EMBED_SEARCH_HPP
