#include "orbit.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "racg/io.hpp"
#include "racg/peripheral.hpp"

namespace oracle {

using namespace racg;

namespace {

Morphism fold_equal(const Morphism& m) {
  std::vector<Hyperplane> distinct;
  std::vector<std::vector<VertexId>> classes;
  for (VertexId v = 0; v < m.domain->size(); ++v) {
    Hyperplane h = image_hyperplane(m, v);
    auto it = std::find(distinct.begin(), distinct.end(), h);
    if (it == distinct.end()) {
      distinct.push_back(h);
      classes.push_back({v});
    } else {
      classes[static_cast<std::size_t>(it - distinct.begin())].push_back(v);
    }
  }
  if (classes.size() == m.domain->size()) return m;
  Morphism pi = folding(m.domain, classes);
  std::vector<GroupElement> images;
  for (const auto& k : classes) images.push_back(m.images[k.front()]);
  return make_morphism(pi.codomain, m.codomain, std::move(images));
}

std::string key(const Morphism& m) {
  std::string out = format_graph(*m.domain);
  for (const auto& x : m.images) out += "|" + format_word(x);
  return out;
}

}  // namespace

OrbitResult search_peripheral_orbit(const Morphism& m, std::size_t complexity_cap, std::size_t state_cap) {
  OrbitResult out;
  std::set<std::string> seen;
  std::deque<Morphism> queue;
  Morphism start = fold_equal(m);
  seen.insert(key(start));
  queue.push_back(start);
  while (!queue.empty()) {
    if (out.states == state_cap) return out;
    Morphism x = std::move(queue.front());
    queue.pop_front();
    ++out.states;
    std::vector<Hyperplane> walls;
    for (VertexId v = 0; v < x.domain->size(); ++v) walls.push_back(image_hyperplane(x, v));
    if (is_peripheral(HyperplaneCollection(x.codomain, walls))) {
      out.peripheral_reached = true;
      return out;
    }
    for (VertexId a = 0; a < x.domain->size(); ++a)
      for (const auto& k : components_minus_star(*x.domain, a)) {
        Morphism y = fold_equal(compose(partial_conjugation(x.domain, a, k), x));
        if (complexity(y) > complexity_cap) continue;
        if (seen.insert(key(y)).second) queue.push_back(std::move(y));
      }
  }
  out.exhausted = true;
  return out;
}

}  // namespace oracle
