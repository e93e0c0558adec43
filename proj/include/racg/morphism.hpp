#ifndef RACG_MORPHISM_HPP
#define RACG_MORPHISM_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "racg/peripheral.hpp"

namespace racg {

/// Map C(domain) -> C(codomain) given on generators.
struct Morphism {
  GraphPtr domain;
  GraphPtr codomain;
  std::vector<GroupElement> images;  // indexed by domain vertex
  bool verified = false;
};

/// Whether the images satisfy the relations u^2 = 1 and (uv)^2 = 1 for
/// every vertex u and edge uv of the domain.
bool relations_hold(const Morphism& m);
/// relations_hold, recorded in m.verified.
bool verify(Morphism& m);

/// Builds and verifies; throws PreconditionError when the relations fail.
Morphism make_morphism(GraphPtr domain, GraphPtr codomain, std::vector<GroupElement> images);

Morphism identity_morphism(const GraphPtr& graph);

/// Codomain is the quotient graph with one vertex per class, named after the
/// class's first member; classes are adjacent when some members are.
Morphism folding(const GraphPtr& phi, const std::vector<std::vector<VertexId>>& partition);
/// Codomain is the subgraph induced on `kept`; other generators go to 1.
Morphism erasing(const GraphPtr& phi, const std::vector<VertexId>& kept);
/// a has exactly the two adjacent neighbours b, c; codomain drops a and a -> bc.
Morphism ingestion(const GraphPtr& phi, VertexId a, VertexId b, VertexId c);
/// u -> uv for adjacent u, v with link(u) minus v inside link(v).
Morphism transvection(const GraphPtr& gamma, VertexId u, VertexId v);
/// w -> uwu for w in `component`, a component of gamma minus star(u).
Morphism partial_conjugation(const GraphPtr& gamma, VertexId u, const std::vector<VertexId>& component);
/// Each generator of phi goes to the product of a clique of psi.
Morphism diagonal(const GraphPtr& phi, const GraphPtr& psi, const std::vector<std::vector<VertexId>>& cliques);

/// g after f.
Morphism compose(const Morphism& f, const Morphism& g);

bool morphisms_equal(const Morphism& f, const Morphism& g);

/// Hyperplane of the reflection image of generator v; throws
/// PreconditionError when that image is not a reflection.
Hyperplane image_hyperplane(const Morphism& m, VertexId v);

/// Sum of the carrier distances of the image hyperplanes.
std::size_t complexity(const Morphism& m);

struct DecompositionStep {
  enum class Kind { Folding, PartialConjugation } kind;
  Morphism map;
  std::vector<std::vector<VertexId>> partition;  // folding only
  VertexId center = 0;                           // partial conjugation only
  std::vector<VertexId> component;               // partial conjugation only
  std::size_t complexity_after = 0;
};

/// The input equals `terminal` after the steps, applied in order.
struct DecompositionTrace {
  std::vector<DecompositionStep> steps;
  Morphism terminal;
};

Morphism recompose(const DecompositionTrace& trace);

/// Thrown by peripheralize when no partial conjugation lowers the complexity.
/// This only happens when two non-adjacent domain vertices have distinct images
/// along crossing walls; `crossing` names one such pair of the stuck state,
/// which is `partial().terminal`.
class DecompositionStuck : public std::runtime_error {
 public:
  DecompositionStuck(DecompositionTrace partial, Edge crossing);
  const DecompositionTrace& partial() const { return partial_; }
  Edge crossing() const { return crossing_; }

 private:
  DecompositionTrace partial_;
  Edge crossing_;
};

/// Precomposes with foldings and partial conjugations until the images are
/// reflections along a peripheral collection of distinct hyperplanes. Among the
/// pairs (a, b) with J_a separating 1 from J_b, the first in generator order
/// whose component beyond star(a) has every other wall crossing J_a or beyond it
/// is used; throws DecompositionStuck when there is none.
DecompositionTrace peripheralize(const Morphism& m);

}  // namespace racg

#endif  // RACG_MORPHISM_HPP
