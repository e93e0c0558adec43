#include "racg/embed_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <deque>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "racg/errors.hpp"

namespace racg {

std::vector<Hyperplane> enumerate_hyperplanes(const GraphPtr& psi, std::size_t r) {
  std::vector<Hyperplane> out;
  if (r == 0) return out;
  std::unordered_set<Hyperplane> emitted;
  std::unordered_set<GroupElement> seen;
  std::deque<GroupElement> queue{GroupElement(psi)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    GroupElement x = std::move(queue.front());
    queue.pop_front();
    for (VertexId u = 0; u < psi->size(); ++u) {
      Hyperplane h = canonicalize(x, u);
      if (emitted.insert(h).second) out.push_back(std::move(h));
      GroupElement y = multiply(x, u);
      if (y.length() > x.length() && y.length() < r && seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return out;
}

std::size_t embedding_bound(std::size_t phi_vertices, std::size_t psi_vertices) {
  return 2 * (1 + (1 + 2 * phi_vertices) * psi_vertices);
}

std::size_t complete_search_radius(std::size_t phi_vertices, std::size_t psi_vertices) {
  return embedding_bound(phi_vertices, psi_vertices) + 1;
}

namespace {

using Word = std::uint64_t;

// Backtracking assignment of phi's vertices to the hyperplanes of one radius,
// with forward checking over bitset domains.
class RadiusSearch {
 public:
  RadiusSearch(const GraphPtr& psi, const SimplicialGraph& phi, std::size_t radius, bool finite_index)
      : psi_(psi), phi_(phi), n_(phi.size()), finite_index_(finite_index) {
    hyperplanes_ = enumerate_hyperplanes(psi, radius);
    m_ = hyperplanes_.size();
    words_ = (m_ + 63) / 64;
    crossing_.assign(m_ * words_, 0);
    apart_.assign(m_ * words_, 0);
    deep_.assign(words_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (carrier_distance(hyperplanes_[i]) + 1 == radius) set(deep_.data(), i);
      for (std::size_t j = i + 1; j < m_; ++j) {
        Relation rel = classify(hyperplanes_[i], hyperplanes_[j]);
        if (rel == Relation::Transverse) set(row(crossing_, i), j), set(row(crossing_, j), i);
        if (rel == Relation::Disjoint) set(row(apart_, i), j), set(row(apart_, j), i);
      }
    }
    root_ = 0;
    for (VertexId v = 1; v < n_; ++v)
      if (phi.degree(v) > phi.degree(root_)) root_ = v;
    for (VertexId w : automorphism_orbit(phi, root_))
      if (w != root_) orbit_.push_back(w);
  }

  std::size_t hyperplane_count() const { return m_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  /// Searches the subtree with the root vertex sent to hyperplane x.
  std::optional<std::vector<std::size_t>> solve_from(std::size_t x, const std::atomic<bool>& stop,
                                                     std::size_t& nodes) const {
    std::vector<Word> domains(n_ * words_, 0);
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t i = 0; i < m_; ++i) set(&domains[v * words_], i);
    std::vector<std::size_t> image(n_, m_);
    if (!assign(domains, image, root_, x)) return std::nullopt;
    if (extend(domains, image, 1, stop, nodes)) return image;
    return std::nullopt;
  }

 private:
  static void set(Word* bits, std::size_t i) { bits[i / 64] |= Word{1} << (i % 64); }
  static bool test(const Word* bits, std::size_t i) { return (bits[i / 64] >> (i % 64)) & 1; }
  Word* row(std::vector<Word>& m, std::size_t i) const { return &m[i * words_]; }
  const Word* row(const std::vector<Word>& m, std::size_t i) const { return &m[i * words_]; }

  std::size_t count(const Word* bits) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_; ++k) c += static_cast<std::size_t>(std::popcount(bits[k]));
    return c;
  }
  bool meets(const Word* a, const Word* b) const {
    for (std::size_t k = 0; k < words_; ++k)
      if (a[k] & b[k]) return true;
    return false;
  }

  // Sends v to x and narrows the other domains; false when one empties.
  bool assign(std::vector<Word>& domains, std::vector<std::size_t>& image, VertexId v, std::size_t x) const {
    image[v] = x;
    const bool on_orbit = std::find(orbit_.begin(), orbit_.end(), v) != orbit_.end();
    for (VertexId w = 0; w < n_; ++w) {
      if (image[w] != m_) continue;
      Word* d = &domains[w * words_];
      const Word* allowed = phi_.adjacent(v, w) ? row(crossing_, x) : row(apart_, x);
      bool any = false;
      for (std::size_t k = 0; k < words_; ++k) any |= (d[k] &= allowed[k]) != 0;
      // The root takes the least image on its orbit under Aut(phi).
      if (v == root_ && std::find(orbit_.begin(), orbit_.end(), w) != orbit_.end()) any = keep_range(d, x + 1, m_);
      if (on_orbit && w == root_) any = keep_range(d, 0, x);
      if (!any) return false;
    }
    return true;
  }

  bool keep_range(Word* d, std::size_t lo, std::size_t hi) const {
    bool any = false;
    for (std::size_t i = 0; i < m_; ++i)
      if (test(d, i)) {
        if (i < lo || i >= hi) d[i / 64] &= ~(Word{1} << (i % 64));
        else any = true;
      }
    return any;
  }

  bool has_deep(const std::vector<std::size_t>& image) const {
    for (std::size_t x : image)
      if (x != m_ && test(deep_.data(), x)) return true;
    return false;
  }

  bool accept(const std::vector<std::size_t>& image) const {
    if (!has_deep(image)) return false;
    if (!finite_index_) return true;
    std::vector<Hyperplane> members;
    for (std::size_t x : image) members.push_back(hyperplanes_[x]);
    return covolume(HyperplaneCollection(psi_, std::move(members))).finite();
  }

  bool extend(const std::vector<Word>& domains, std::vector<std::size_t>& image, std::size_t placed,
              const std::atomic<bool>& stop, std::size_t& nodes) const {
    ++nodes;
    if (stop.load(std::memory_order_relaxed)) return false;
    if (placed == n_) return accept(image);
    if (!has_deep(image)) {
      bool reachable = false;
      for (VertexId w = 0; w < n_ && !reachable; ++w)
        reachable = image[w] == m_ && meets(&domains[w * words_], deep_.data());
      if (!reachable) return false;
    }
    // Smallest domain first; ties go to the vertex with most placed neighbours.
    VertexId next = n_;
    std::size_t best_size = 0, best_links = 0;
    for (VertexId w = 0; w < n_; ++w) {
      if (image[w] != m_) continue;
      std::size_t size = count(&domains[w * words_]), links = 0;
      for (VertexId z : phi_.neighbors(w)) links += image[z] != m_;
      if (next == n_ || size < best_size || (size == best_size && links > best_links))
        next = w, best_size = size, best_links = links;
    }
    const Word* d = &domains[next * words_];
    for (std::size_t x = 0; x < m_; ++x) {
      if (!test(d, x)) continue;
      std::vector<Word> narrowed = domains;
      if (assign(narrowed, image, next, x) && extend(narrowed, image, placed + 1, stop, nodes)) return true;
      image[next] = m_;
    }
    return false;
  }

  GraphPtr psi_;
  const SimplicialGraph& phi_;
  std::size_t n_;
  bool finite_index_;
  std::vector<Hyperplane> hyperplanes_;
  std::size_t m_ = 0, words_ = 0;
  std::vector<Word> crossing_, apart_, deep_;
  VertexId root_ = 0;
  std::vector<VertexId> orbit_;
};

unsigned worker_count(const SearchOptions& options, std::size_t tasks) {
  if (options.deterministic) return 1;
  unsigned t = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(tasks, 1)));
}

std::optional<std::vector<std::size_t>> search_radius(const RadiusSearch& search, const SearchOptions& options,
                                                      std::size_t& nodes) {
  const std::size_t m = search.hyperplane_count();
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next{0}, total_nodes{0};
  std::mutex found_lock;
  std::optional<std::pair<std::size_t, std::vector<std::size_t>>> found;
  auto worker = [&] {
    std::size_t local = 0;
    for (std::size_t x; !stop.load() && (x = next.fetch_add(1)) < m;) {
      if (auto image = search.solve_from(x, stop, local)) {
        std::lock_guard<std::mutex> guard(found_lock);
        if (!found || x < found->first) found.emplace(x, std::move(*image));
        stop = true;
      }
    }
    total_nodes += local;
  };
  const unsigned workers = worker_count(options, m);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  nodes += total_nodes;
  if (!found) return std::nullopt;
  return std::move(found->second);
}

SearchVerdict run_search(const GraphPtr& psi, const SimplicialGraph& phi, const SearchOptions& options,
                         bool finite_index, const char* operation) {
  if (!is_triangle_free(*psi)) throw PreconditionError(operation, "target graph is triangle-free");
  SearchVerdict verdict;
  auto finish_yes = [&](std::vector<Hyperplane> members, std::size_t radius) {
    HyperplaneCollection c(psi, std::move(members));
    BasisCertificate cert = certify_basis(c);
    for (VertexId u = 0; u < phi.size(); ++u)
      for (VertexId v = 0; v < phi.size(); ++v)
        if (u != v && cert.crossing_graph.adjacent(u, v) != phi.adjacent(u, v))
          throw std::logic_error(std::string(operation) + ": witness has the wrong crossing graph");
    verdict.kind = SearchVerdict::Kind::Yes;
    verdict.radius = radius;
    if (finite_index) verdict.index = covolume(c).value;
    verdict.certificate = std::move(cert);
    return verdict;
  };

  if (phi.empty()) {
    if (!finite_index || covolume(HyperplaneCollection(psi, {})).finite()) return finish_yes({}, 0);
    verdict.kind = SearchVerdict::Kind::No;
    return verdict;
  }
  for (std::size_t r = 1; r <= options.max_radius; ++r) {
    RadiusSearch search(psi, phi, r, finite_index);
    verdict.radius = r;
    if (auto image = search_radius(search, options, verdict.nodes)) {
      std::vector<Hyperplane> members;
      for (std::size_t x : *image) members.push_back(search.hyperplanes()[x]);
      return finish_yes(std::move(members), r);
    }
  }
  verdict.kind = options.max_radius >= complete_search_radius(phi.size(), psi->size())
                     ? SearchVerdict::Kind::No
                     : SearchVerdict::Kind::NoWithinRadius;
  return verdict;
}

}  // namespace

SearchVerdict find_peripheral_collection(const GraphPtr& psi, const SimplicialGraph& phi,
                                         const SearchOptions& options) {
  return run_search(psi, phi, options, false, "find_peripheral_collection");
}

SearchVerdict find_finite_index(const GraphPtr& psi, const SimplicialGraph& phi, const SearchOptions& options) {
  for (VertexId v = 0; v < phi.size(); ++v)
    if (phi.degree(v) == 0) throw PreconditionError("find_finite_index", "source graph has no isolated vertex");
  return run_search(psi, phi, options, true, "find_finite_index");
}

}  // namespace racg
