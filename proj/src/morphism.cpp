#include "racg/morphism.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "racg/errors.hpp"

namespace racg {

bool relations_hold(const Morphism& m) {
  if (!m.domain || !m.codomain || m.images.size() != m.domain->size()) return false;
  for (const auto& x : m.images)
    if (!same_graph(x.graph(), m.codomain) || !(x * x).is_identity()) return false;
  for (auto [u, v] : m.domain->edges()) {
    GroupElement uv = m.images[u] * m.images[v];
    if (!(uv * uv).is_identity()) return false;
  }
  return true;
}

bool verify(Morphism& m) { return m.verified = relations_hold(m); }

Morphism make_morphism(GraphPtr domain, GraphPtr codomain, std::vector<GroupElement> images) {
  Morphism m{std::move(domain), std::move(codomain), std::move(images), false};
  if (!verify(m)) throw PreconditionError("morphism", "images satisfy the defining relations");
  return m;
}

Morphism identity_morphism(const GraphPtr& graph) {
  std::vector<GroupElement> images;
  for (VertexId v = 0; v < graph->size(); ++v) images.push_back(GroupElement::generator(graph, v));
  return make_morphism(graph, graph, std::move(images));
}

Morphism folding(const GraphPtr& phi, const std::vector<std::vector<VertexId>>& partition) {
  std::vector<std::size_t> cls(phi->size(), partition.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].empty()) throw PreconditionError("folding", "classes are non-empty");
    for (VertexId v : partition[i]) {
      if (v >= phi->size()) throw PreconditionError("folding", "classes contain vertices of the domain");
      if (cls[v] != partition.size()) throw PreconditionError("folding", "classes are disjoint");
      cls[v] = i;
    }
    names.push_back(phi->name(partition[i].front()));
  }
  if (std::count(cls.begin(), cls.end(), partition.size()))
    throw PreconditionError("folding", "classes cover every vertex");
  std::vector<Edge> edges;
  for (auto [u, v] : phi->edges()) {
    Edge e = std::minmax(cls[u], cls[v]);
    if (e.first != e.second && std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  GraphPtr psi = share(SimplicialGraph(std::move(names), edges));
  std::vector<GroupElement> images;
  for (VertexId v = 0; v < phi->size(); ++v) images.push_back(GroupElement::generator(psi, cls[v]));
  return make_morphism(phi, psi, std::move(images));
}

Morphism erasing(const GraphPtr& phi, const std::vector<VertexId>& kept) {
  std::vector<std::size_t> index(phi->size(), kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] >= phi->size()) throw PreconditionError("erasing", "kept vertices belong to the domain");
    if (index[kept[i]] != kept.size()) throw PreconditionError("erasing", "kept vertices are distinct");
    index[kept[i]] = i;
  }
  GraphPtr psi = share(induced_subgraph(*phi, kept));
  std::vector<GroupElement> images;
  for (VertexId v = 0; v < phi->size(); ++v)
    images.push_back(index[v] == kept.size() ? GroupElement(psi) : GroupElement::generator(psi, index[v]));
  return make_morphism(phi, psi, std::move(images));
}

Morphism ingestion(const GraphPtr& phi, VertexId a, VertexId b, VertexId c) {
  const auto n = phi->size();
  if (a >= n || b >= n || c >= n) throw PreconditionError("ingestion", "a, b, c are vertices");
  if (b == c || phi->neighbors(a) != std::vector<VertexId>{std::min(b, c), std::max(b, c)})
    throw PreconditionError("ingestion", "a has exactly the two neighbours b and c");
  if (!phi->adjacent(b, c)) throw PreconditionError("ingestion", "b and c are adjacent");
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < n; ++v)
    if (v != a) rest.push_back(v);
  GraphPtr psi = share(induced_subgraph(*phi, rest));
  auto shifted = [a](VertexId v) { return v > a ? v - 1 : v; };
  std::vector<GroupElement> images;
  for (VertexId v = 0; v < n; ++v)
    images.push_back(v == a ? reduce(psi, {shifted(b), shifted(c)}) : GroupElement::generator(psi, shifted(v)));
  return make_morphism(phi, psi, std::move(images));
}

Morphism transvection(const GraphPtr& gamma, VertexId u, VertexId v) {
  if (u >= gamma->size() || v >= gamma->size()) throw PreconditionError("transvection", "u, v are vertices");
  if (!gamma->adjacent(u, v)) throw PreconditionError("transvection", "u and v are adjacent");
  for (VertexId w : gamma->neighbors(u))
    if (w != v && !gamma->adjacent(w, v))
      throw PreconditionError("transvection", "every neighbour of u other than v is a neighbour of v");
  std::vector<GroupElement> images;
  for (VertexId w = 0; w < gamma->size(); ++w)
    images.push_back(w == u ? reduce(gamma, {u, v}) : GroupElement::generator(gamma, w));
  return make_morphism(gamma, gamma, std::move(images));
}

Morphism partial_conjugation(const GraphPtr& gamma, VertexId u, const std::vector<VertexId>& component) {
  if (u >= gamma->size()) throw PreconditionError("partial_conjugation", "u is a vertex");
  std::vector<VertexId> sorted = component;
  std::sort(sorted.begin(), sorted.end());
  auto comps = components_minus_star(*gamma, u);
  if (std::find(comps.begin(), comps.end(), sorted) == comps.end())
    throw PreconditionError("partial_conjugation", "component is a component of the graph minus star(u)");
  std::vector<GroupElement> images;
  for (VertexId w = 0; w < gamma->size(); ++w)
    images.push_back(std::binary_search(sorted.begin(), sorted.end(), w) ? reduce(gamma, {u, w, u})
                                                                          : GroupElement::generator(gamma, w));
  return make_morphism(gamma, gamma, std::move(images));
}

Morphism diagonal(const GraphPtr& phi, const GraphPtr& psi, const std::vector<std::vector<VertexId>>& cliques) {
  if (cliques.size() != phi->size()) throw PreconditionError("diagonal", "one clique per domain vertex");
  std::vector<GroupElement> images;
  for (const auto& k : cliques) {
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] >= psi->size()) throw PreconditionError("diagonal", "clique vertices belong to the codomain");
      for (std::size_t j = i + 1; j < k.size(); ++j)
        if (!psi->adjacent(k[i], k[j])) throw PreconditionError("diagonal", "each image is a clique");
    }
    images.push_back(reduce(psi, k));
  }
  return make_morphism(phi, psi, std::move(images));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  require_same_graph(f.codomain, g.domain, "compose");
  std::vector<GroupElement> images;
  for (const auto& x : f.images) {
    GroupElement y(g.codomain);
    for (VertexId v : x.word()) y = y * g.images[v];
    images.push_back(std::move(y));
  }
  return Morphism{f.domain, g.codomain, std::move(images), f.verified && g.verified};
}

bool morphisms_equal(const Morphism& f, const Morphism& g) {
  return same_graph(f.domain, g.domain) && same_graph(f.codomain, g.codomain) && f.images == g.images;
}

Hyperplane image_hyperplane(const Morphism& m, VertexId v) {
  auto r = as_reflection(m.images.at(v));
  if (!r) throw PreconditionError("complexity", "image of '" + m.domain->name(v) + "' is a reflection");
  return canonicalize(r->conjugator, r->label);
}

std::size_t complexity(const Morphism& m) {
  std::size_t total = 0;
  for (VertexId v = 0; v < m.domain->size(); ++v) total += carrier_distance(image_hyperplane(m, v));
  return total;
}

Morphism recompose(const DecompositionTrace& trace) {
  if (trace.steps.empty()) return trace.terminal;
  Morphism out = trace.steps.front().map;
  for (std::size_t i = 1; i < trace.steps.size(); ++i) out = compose(out, trace.steps[i].map);
  return compose(out, trace.terminal);
}

DecompositionStuck::DecompositionStuck(DecompositionTrace partial, Edge crossing)
    : std::runtime_error("peripheralize: no partial conjugation lowers complexity; '" +
                         partial.terminal.domain->name(crossing.first) + "' and '" +
                         partial.terminal.domain->name(crossing.second) +
                         "' are not adjacent but their walls cross"),
      partial_(std::move(partial)),
      crossing_(crossing) {}

DecompositionTrace peripheralize(const Morphism& m) {
  if (!relations_hold(m)) throw PreconditionError("peripheralize", "images satisfy the defining relations");
  for (VertexId v = 0; v < m.domain->size(); ++v) image_hyperplane(m, v);

  DecompositionTrace trace;
  Morphism current = m;
  current.verified = true;
  for (;;) {
    const GraphPtr& lambda = current.domain;
    std::vector<Hyperplane> walls;
    for (VertexId v = 0; v < lambda->size(); ++v) walls.push_back(image_hyperplane(current, v));

    std::vector<std::vector<VertexId>> classes;
    std::vector<Hyperplane> distinct;
    for (VertexId v = 0; v < lambda->size(); ++v) {
      auto it = std::find(distinct.begin(), distinct.end(), walls[v]);
      if (it == distinct.end()) {
        distinct.push_back(walls[v]);
        classes.push_back({v});
      } else {
        classes[static_cast<std::size_t>(it - distinct.begin())].push_back(v);
      }
    }
    if (classes.size() < lambda->size()) {
      Morphism pi = folding(lambda, classes);
      std::vector<GroupElement> images;
      for (const auto& k : classes) images.push_back(current.images[k.front()]);
      current = make_morphism(pi.codomain, current.codomain, std::move(images));
      trace.steps.push_back({DecompositionStep::Kind::Folding, pi, classes, 0, {}, complexity(current)});
      continue;
    }

    HyperplaneCollection c(current.codomain, walls);
    if (is_peripheral(c)) break;
    // A separating pair alone is not enough: the component of b may reach walls
    // on the near side of J_a through vertices whose walls cross J_a without
    // being adjacent to a. Crossing walls are fixed by the conjugation, so the
    // pair is usable when every other wall of the component lies beyond J_a.
    std::optional<std::pair<VertexId, std::vector<VertexId>>> pick;
    for (VertexId a = 0; a < c.size() && !pick; ++a) {
      auto comps = components_minus_star(*lambda, a);
      for (VertexId b = 0; b < c.size() && !pick; ++b) {
        if (!c.separates(a, b)) continue;
        auto& k = *std::find_if(comps.begin(), comps.end(),
                                [b](const auto& k) { return std::binary_search(k.begin(), k.end(), b); });
        if (std::all_of(k.begin(), k.end(), [&](VertexId u) { return c.separates(a, u) || c.transverse(a, u); }))
          pick.emplace(a, k);
      }
    }
    if (!pick) {
      for (VertexId u = 0; u < c.size(); ++u)
        for (VertexId v = u + 1; v < c.size(); ++v)
          if (c.transverse(u, v) && !lambda->adjacent(u, v)) {
            trace.terminal = current;
            throw DecompositionStuck(std::move(trace), {u, v});
          }
      throw std::logic_error("peripheralize: no usable pair although crossing walls are adjacent");
    }
    const auto& [a, component] = *pick;
    Morphism alpha = partial_conjugation(lambda, a, component);
    const std::size_t before = complexity(current);
    current = compose(alpha, current);
    const std::size_t after = complexity(current);
    if (after >= before) throw std::logic_error("peripheralize: partial conjugation did not lower complexity");
    trace.steps.push_back({DecompositionStep::Kind::PartialConjugation, alpha, {}, a, component, after});
  }
  trace.terminal = current;
  if (!morphisms_equal(recompose(trace), m)) throw std::logic_error("peripheralize: trace does not recompose");
  return trace;
}

}  // namespace racg
