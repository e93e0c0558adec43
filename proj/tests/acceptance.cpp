// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include <unistd.h>

#include <chrono>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "agreement.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "orbit.hpp"
#include "racg/cli.hpp"
#include "racg/cut_paste.hpp"
#include "racg/embed_search.hpp"
#include "racg/families.hpp"
#include "racg/io.hpp"
#include "racg/morphism.hpp"

using namespace racg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > budget_seconds) {
    o.pass = false;
    o.detail += "; over the " + std::to_string(static_cast<int>(budget_seconds)) + " s budget";
  }
  failures += !o.pass;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << number << "] " << title << ": " << o.detail << " ("
            << std::fixed << std::setprecision(1) << seconds << " s)" << std::endl;
}

std::string tally(const agreement::Tally& t) {
  return std::to_string(t.disagreements) + "/" + std::to_string(t.checked);
}

// Peripheral, crossing graph equal to phi in vertex order, certify_basis, and
// every non-trivial reduced phi-word of length <= 6 maps to a non-trivial element.
bool witness_ok(const SearchVerdict& v, const SimplicialGraph& phi, std::string& why) {
  if (v.kind != SearchVerdict::Kind::Yes || !v.certificate) return why = "no witness", false;
  const auto& c = v.certificate->collection;
  if (!is_peripheral(c)) return why = "not peripheral", false;
  auto cert = certify_basis(c);
  if (cert.crossing_graph.edges() != phi.edges() || !graph_isomorphic(cert.crossing_graph, phi))
    return why = "crossing graph differs", false;
  auto dom = share(phi);
  std::set<GroupElement> seen{GroupElement(dom)};
  std::deque<GroupElement> queue{GroupElement(dom)};
  std::size_t words = 0;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    if (x.length() > 0) {
      GroupElement image(c.graph());
      for (VertexId s : x.word()) image = image * cert.reflections[s];
      if (image.is_identity()) return why = "word " + format_word(x) + " dies", false;
      ++words;
    }
    if (x.length() == 6) continue;
    for (VertexId s = 0; s < dom->size(); ++s) {
      auto y = multiply(x, s);
      if (y.length() > x.length() && seen.insert(y).second) queue.push_back(y);
    }
  }
  why = std::to_string(words) + " words checked";
  return true;
}

// T_{p,q} -> T_{r,s} parity table. Mixed-parity trees are normalised with the
// odd distance first. `max_rule` reads the two-odd-source threshold as
// max(p, q); otherwise min(p, q) is used.
bool tpq_table(std::size_t p, std::size_t q, std::size_t r, std::size_t s, bool max_rule) {
  auto odd = [](std::size_t x) { return x % 2 == 1; };
  if (!odd(p) && !odd(q)) return true;
  if (!odd(r) && !odd(s)) return false;
  if (odd(q) && !odd(p)) std::swap(p, q);
  if (odd(s) && !odd(r)) std::swap(r, s);
  std::size_t reach = !odd(q) ? p : (max_rule ? std::max(p, q) : std::min(p, q));
  return reach >= (!odd(s) ? r : std::min(r, s));
}

struct Tool {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / ("racg-acceptance-" + std::to_string(::getpid()));
  Tool() { std::filesystem::create_directories(dir); }
  ~Tool() { std::filesystem::remove_all(dir); }
  std::string graph(const std::string& name, const SimplicialGraph& g) const {
    auto p = dir / name;
    std::ofstream(p) << format_graph(g);
    return p.string();
  }
  std::pair<int, std::string> run(std::vector<std::string> args) const {
    args.insert(args.begin(), "racg");
    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    std::ostringstream out, err;
    int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str()};
  }
};

}  // namespace

int main() {
  criterion(1, "word engine matches the rewriting closure of all words of length <= 6", 60, [] {
    Outcome o;
    for (const auto& f : oracle::fixtures()) {
      auto t = agreement::words(f.graph, 6);
      o.pass = o.pass && t.disagreements == 0 && t.checked > 0;
      o.detail += (o.detail.empty() ? "" : ", ") + f.name + " " + tally(t);
    }
    o.detail = "disagreements " + o.detail;
    return o;
  });

  criterion(2, "hyperplane predicates match the explicit ball of radius 6", 120, [] {
    Outcome o;
    for (const auto& f : oracle::fixtures()) {
      auto t = agreement::hyperplanes(f.graph, 6);
      for (const auto* x : {&t.equal, &t.transverse, &t.separates_point, &t.separates_hyperplane, &t.separating_sets})
        o.pass = o.pass && x->disagreements == 0 && x->checked > 0;
      o.detail += (o.detail.empty() ? "" : "; ") + f.name + " equal " + tally(t.equal) + " transverse " +
                  tally(t.transverse) + " point " + tally(t.separates_point) + " nested " +
                  tally(t.separates_hyperplane);
    }
    return o;
  });

  criterion(3, "double construction is peripheral, crosses like the glued graph, covolume 2", 300, [] {
    Outcome o;
    std::vector<SimplicialGraph> graphs_;
    for (const auto& f : oracle::fixtures()) graphs_.push_back(f.graph);
    for (std::size_t n = 3; n <= 7; ++n) graphs_.push_back(graphs::cycle(n));
    for (std::size_t n = 1; n <= 7; ++n) graphs_.push_back(graphs::path(n));
    graphs_.push_back(graphs::star(4));
    graphs_.push_back(graphs::complete(3));
    for (std::size_t n = 2; n <= 7; ++n)
      for (int trial = 0; trial < 8; ++trial) graphs_.push_back(oracle::random_graph(n, 0.35));
    std::size_t pairs = 0, bad = 0;
    for (const auto& g : graphs_) {
      auto gp = share(g);
      for (VertexId u = 0; u < g.size(); ++u) {
        auto d = double_graph(gp, u);
        bool ok = is_peripheral(d.collection) && crossing_graph(d.collection).edges() == d.psi->edges() &&
                  graph_isomorphic(crossing_graph(d.collection), *d.psi) &&
                  covolume(d.collection).value == std::size_t{2};
        bad += !ok;
        ++pairs;
      }
    }
    auto c5 = double_graph(share(graphs::cycle(5)), 0);
    bool c6 = graph_isomorphic(*c5.psi, graphs::cycle(6)).has_value() && covolume(c5.collection).value == std::size_t{2};
    o.pass = bad == 0 && c6;
    o.detail = std::to_string(pairs) + " (graph, vertex) pairs, " + std::to_string(bad) + " failed; C_5 doubles to C_6 " +
               (c6 ? "with covolume 2" : "INCORRECTLY");
    return o;
  });

  criterion(4, "embedding search finds verified witnesses", 300, [] {
    Outcome o;
    SearchOptions two;
    two.max_radius = 2;
    SearchOptions four;
    four.max_radius = 4;
    std::string why;
    auto p = find_peripheral_collection(share(graphs::path(3)), graphs::path(3), two);
    bool p_ok = witness_ok(p, graphs::path(3), why);
    o.detail = "path3 in path3 " + std::string(p_ok ? "Yes at radius " + std::to_string(p.radius) : "FAILED") + " (" + why + ")";
    auto c = find_peripheral_collection(share(graphs::cycle(5)), graphs::cycle(6), four);
    bool c_ok = witness_ok(c, graphs::cycle(6), why);
    o.detail += "; C6 in C5 " + std::string(c_ok ? "Yes at radius " + std::to_string(c.radius) : "FAILED") + " (" + why + ")";

    // Positive search verdicts never contradict the closed-form deciders.
    std::size_t contradictions = 0, cross_checked = 0;
    for (std::size_t n = 5; n <= 9; ++n)
      for (std::size_t m = 5; m <= 9; ++m) {
        auto v = find_peripheral_collection(share(graphs::cycle(n)), graphs::cycle(m), four);
        contradictions += v.kind == SearchVerdict::Kind::Yes && !cycle_embed(m, n).yes;
        ++cross_checked;
      }
    std::vector<SimplicialGraph> trees;
    for (std::size_t n = 2; n <= 6; ++n)
      for (auto& t : oracle::all_trees(n)) trees.push_back(t);
    for (const auto& s : trees)
      for (const auto& r : trees) {
        auto v = find_peripheral_collection(share(s), r, four);
        contradictions += v.kind == SearchVerdict::Kind::Yes && !tree_embed(r, s).yes;
        ++cross_checked;
      }
    o.pass = p_ok && c_ok && p.radius <= 2 && c.radius <= 4 && contradictions == 0;
    o.detail += "; " + std::to_string(contradictions) + " contradictions with the family deciders over " +
                std::to_string(cross_checked) + " cycle and tree pairs";
    return o;
  });

  criterion(5, "family tables", 120, [] {
    Outcome o;
    std::size_t cycle_cases = 0, cycle_bad = 0;
    for (std::size_t m = 5; m <= 12; ++m)
      for (std::size_t n = 5; n <= 12; ++n) {
        auto v = cycle_embed(m, n);
        bool ok = v.yes == ((m - 4) % (n - 4) == 0);
        if (ok && v.yes)
          ok = v.collection && is_peripheral(*v.collection) &&
               graph_isomorphic(crossing_graph(*v.collection), graphs::cycle(m)).has_value();
        cycle_bad += !ok;
        ++cycle_cases;
      }
    std::size_t tpq_cases = 0, table_bad = 0, oracle_bad = 0, literal_max = 0;
    for (std::size_t p = 1; p <= 4; ++p)
      for (std::size_t q = 1; q <= 4; ++q)
        for (std::size_t r = 1; r <= 4; ++r)
          for (std::size_t s = 1; s <= 4; ++s) {
            auto src = graphs::tpq(p, q), dst = graphs::tpq(r, s);
            bool yes = tree_embed(src, dst).yes;
            table_bad += yes != tpq_table(p, q, r, s, false);
            oracle_bad += yes != oracle::tree_morphism_exists(src, dst);
            literal_max += yes != tpq_table(p, q, r, s, true);
            ++tpq_cases;
          }
    std::size_t forests = 0, forest_bad = 0;
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& f : oracle::all_forests(n)) {
        auto v = forest_embed(f, graphs::double_star());
        forest_bad += !(v.yes && v.map && is_graph_morphism(f, graphs::double_star(), *v.map));
        ++forests;
      }
    o.pass = cycle_cases == 64 && cycle_bad == 0 && table_bad == 0 && oracle_bad == 0 && forest_bad == 0;
    o.detail = "cycles " + std::to_string(cycle_cases - cycle_bad) + "/" + std::to_string(cycle_cases) + "; T_pq " +
               std::to_string(tpq_cases - table_bad) + "/" + std::to_string(tpq_cases) +
               " match the parity table and " + std::to_string(tpq_cases - oracle_bad) + "/" +
               std::to_string(tpq_cases) + " the exhaustive search (reading both-odd thresholds as max(p,q) would miss " +
               std::to_string(literal_max) + "); forests into the double-star " + std::to_string(forests - forest_bad) +
               "/" + std::to_string(forests);
    return o;
  });

  criterion(6, "cut-and-paste laws and collection reduction", 300, [] {
    Outcome o;
    std::size_t instances = 0, moved = 0, bad = 0, finite = 0;
    for (bool c5 : {false, true}) {
      auto g = share(c5 ? graphs::cycle(5) : graphs::edgeless(2));
      std::size_t target = c5 ? 80 : 40;
      for (int trial = 0; trial < 2000 && (c5 ? instances - 40 : instances) < target; ++trial) {
        auto inst = gen::random_cut_paste_instance(g, c5 ? 3 : 2, c5 ? 5 : 8);
        if (!inst) continue;
        auto move = plan_cut_and_paste(inst->c, inst->a, inst->b);
        auto out = apply_move(inst->c, move);
        bool ok = is_peripheral(out) && graph_isomorphic(crossing_graph(inst->c), crossing_graph(out)).has_value();
        if (!move.moved.empty()) {
          ++moved;
          ok = ok && total_carrier_distance(out) < total_carrier_distance(inst->c);
        }
        auto before = covolume(inst->c), after = covolume(out);
        if (before.finite()) {
          ++finite;
          ok = ok && after.finite() && *after.value <= *before.value;
        } else {
          ok = ok && !after.finite();
        }
        bad += !ok;
        ++instances;
      }
    }
    std::size_t reduced = 0, reduce_bad = 0;
    auto two = share(graphs::edgeless(2));
    for (std::size_t k = 8; k <= 14; ++k) {
      std::vector<VertexId> word;
      for (std::size_t i = 0; i < k; ++i) word.insert(word.end(), {0, 1});
      HyperplaneCollection c(two, {canonicalize(GroupElement::from_word(two, word), 0)});
      auto r = reduce_collection(c);
      reduce_bad += carrier_distance(r[0]) > reduction_radius(1, 2);
      ++reduced;
    }
    auto c5 = share(graphs::cycle(5));
    for (int trial = 0; trial < 200 && reduced < 17; ++trial) {
      auto c = gen::random_peripheral(c5, 2, 70);
      std::size_t radius = reduction_radius(c.size(), 5);
      bool far = false;
      for (const auto& m : c.members()) far = far || carrier_distance(m) > radius;
      if (!far) continue;
      auto r = reduce_collection(c);
      bool ok = is_peripheral(r) && graph_isomorphic(crossing_graph(c), crossing_graph(r)).has_value();
      for (const auto& m : r.members()) ok = ok && carrier_distance(m) <= radius;
      reduce_bad += !ok;
      ++reduced;
    }
    o.pass = instances >= 100 && bad == 0 && reduced >= 12 && reduce_bad == 0;
    o.detail = std::to_string(instances) + " instances (" + std::to_string(moved) + " moved something, " +
               std::to_string(finite) + " of finite covolume), " + std::to_string(bad) + " violations; " +
               std::to_string(reduced) + " far collections reduced, " + std::to_string(reduce_bad) + " failures";
    return o;
  });

  criterion(7, "peripheralization of reflection-image morphisms", 300, [] {
    Outcome o;
    std::size_t runs = 0, bad = 0, stuck = 0, confirmed = 0, conjugations = 0, foldings = 0;
    auto steps_ok = [&](const Morphism& m, const DecompositionTrace& trace) {
      bool ok = morphisms_equal(recompose(trace), m);
      std::size_t level = complexity(m);
      for (const auto& step : trace.steps) {
        if (step.kind == DecompositionStep::Kind::PartialConjugation) {
          ok = ok && step.complexity_after < level;
          ++conjugations;
        } else {
          ok = ok && step.complexity_after <= level;
          ++foldings;
        }
        level = step.complexity_after;
      }
      return ok;
    };
    auto walls = [](const Morphism& m) {
      std::vector<Hyperplane> out;
      for (VertexId v = 0; v < m.domain->size(); ++v) out.push_back(image_hyperplane(m, v));
      return out;
    };
    for (int round = 0; round < 20; ++round)
      for (const auto& f : oracle::fixtures()) {
        auto psi = share(f.graph);
        auto m = gen::random_reflection_morphism(psi, 2 + round % 5, 4);
        ++runs;
        try {
          auto trace = peripheralize(m);
          bad += !(steps_ok(m, trace) && is_peripheral(HyperplaneCollection(psi, walls(trace.terminal))));
        } catch (const DecompositionStuck& e) {
          ++stuck;
          bad += !steps_ok(m, e.partial());
          // Independent check that no other order of partial conjugations
          // reaches a peripheral collection at modest complexity.
          auto orbit = oracle::search_peripheral_orbit(m, complexity(m) + 4, 5000);
          confirmed += orbit.exhausted && !orbit.peripheral_reached;
        }
      }
    o.pass = runs >= 100 && bad == 0 && stuck == 0 && conjugations > 0;
    o.detail = std::to_string(runs) + " morphisms, " + std::to_string(runs - stuck) + " peripheralized (" +
               std::to_string(conjugations) + " partial conjugations, " + std::to_string(foldings) +
               " foldings); " + std::to_string(stuck) +
               " stuck with non-adjacent vertices on crossing walls, of which " + std::to_string(confirmed) +
               " have no peripheral state within complexity +4 by orbit search; " + std::to_string(bad) +
               " trace violations";
    return o;
  });

  criterion(8, "negative searches below the radius bound report NoWithinRadius with exit 2", 120, [] {
    Outcome o;
    Tool tool;
    struct Case {
      std::string phi, psi;
      std::size_t radius;
      int expected_status;
      std::string expected_verdict;
    };
    auto edge = tool.graph("edge.sg", graphs::path(2));
    auto two = tool.graph("two.sg", graphs::edgeless(2));
    auto c4 = tool.graph("c4.sg", graphs::cycle(4));
    auto c5 = tool.graph("c5.sg", graphs::cycle(5));
    auto tri = tool.graph("tri.sg", graphs::complete(3));
    auto point = tool.graph("point.sg", graphs::edgeless(1));
    std::vector<Case> cases;
    for (std::size_t r = 1; r <= 6; ++r) cases.push_back({edge, two, r, 2, "NoWithinRadius"});
    cases.push_back({edge, two, complete_search_radius(2, 2) - 1, 2, "NoWithinRadius"});
    cases.push_back({edge, two, complete_search_radius(2, 2), 0, "No"});
    cases.push_back({c4, c5, 3, 2, "NoWithinRadius"});
    cases.push_back({tri, point, complete_search_radius(3, 1) - 1, 2, "NoWithinRadius"});
    cases.push_back({tri, point, complete_search_radius(3, 1), 0, "No"});
    std::size_t bad = 0;
    for (const auto& k : cases) {
      auto [status, out] = tool.run({"embed", k.phi, k.psi, "--max-radius", std::to_string(k.radius)});
      std::string verdict = out.substr(0, out.find_first_of(" \n"));
      bad += status != k.expected_status || verdict != k.expected_verdict;
    }
    o.pass = bad == 0;
    o.detail = std::to_string(cases.size()) + " CLI runs, " + std::to_string(bad) +
               " wrong; No appears only at the complete radius (" + std::to_string(complete_search_radius(2, 2)) +
               " for an edge into two points)";
    return o;
  });

  return failures == 0 ? 0 : 1;
}
