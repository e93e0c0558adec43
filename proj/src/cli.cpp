#include "racg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "racg/cut_paste.hpp"
#include "racg/embed_search.hpp"
#include "racg/errors.hpp"
#include "racg/families.hpp"
#include "racg/io.hpp"
#include "racg/morphism.hpp"

namespace racg::cli {

namespace {

using nlohmann::json;

constexpr int kDecided = 0;
constexpr int kInputError = 1;
constexpr int kUndecided = 2;

GraphPtr load_graph(const std::string& path) { return share(parse_graph(read_file(path), path)); }

HyperplaneCollection load_collection(const GraphPtr& graph, const std::string& path) {
  return HyperplaneCollection(graph, parse_collection(graph, read_file(path), path));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

json edges_json(const SimplicialGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return edges;
}

json graph_json(const SimplicialGraph& g) { return {{"vertices", g.names()}, {"edges", edges_json(g)}}; }

json collection_json(const HyperplaneCollection& c) {
  json out = json::array();
  for (const auto& h : c.members()) out.push_back(format_hyperplane(h));
  return out;
}

json certificate_json(const BasisCertificate& cert, const SimplicialGraph* phi) {
  json reflections = json::array(), crossing = json::array();
  for (const auto& r : cert.reflections) reflections.push_back(format_word(r));
  for (auto [u, v] : cert.crossing_graph.edges()) crossing.push_back({u, v});
  json out{{"collection", collection_json(cert.collection)}, {"reflections", reflections}, {"crossing_edges", crossing}};
  if (phi) {
    json bijection = json::object();
    for (VertexId v = 0; v < phi->size(); ++v) bijection[phi->name(v)] = format_hyperplane(cert.collection[v]);
    out["bijection"] = bijection;
  }
  return out;
}

std::string covolume_text(const Covolume& c) { return c.finite() ? std::to_string(*c.value) : "infinite"; }
json covolume_json(const Covolume& c) { return c.finite() ? json(*c.value) : json("infinite"); }

std::string dot(const SimplicialGraph& g) {
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  std::string out = "graph crossing {\n";
  for (const auto& n : g.names()) out += "  " + quote(n) + ";\n";
  for (auto [u, v] : g.edges()) out += "  " + quote(g.name(u)) + " -- " + quote(g.name(v)) + ";\n";
  return out + "}\n";
}

unsigned default_threads() {
  if (const char* env = std::getenv("RACG_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("RACG_THREADS is not a number: ") + env);
    }
  }
  return 0;
}

const char* verdict_name(SearchVerdict::Kind k) {
  switch (k) {
    case SearchVerdict::Kind::Yes: return "Yes";
    case SearchVerdict::Kind::No: return "No";
    case SearchVerdict::Kind::NoWithinRadius: return "NoWithinRadius";
  }
  return "?";
}

// Subcommand arguments, filled by CLI11 before the chosen action runs.
struct Args {
  bool json = false;
  std::string graph, graph2, file;
  std::vector<std::string> words;
  std::string vertex;
  bool dot = false;
  std::size_t max_radius = 4;
  bool deterministic = false;
  unsigned threads = 0;
  bool threads_given = false;
  std::size_t m = 0, n = 0;
};

int embed_command(const Args& a, std::ostream& out, bool finite_index) {
  GraphPtr phi = load_graph(a.graph), psi = load_graph(a.graph2);
  SearchOptions options{a.max_radius, a.deterministic, a.threads_given ? a.threads : default_threads()};
  SearchVerdict v = finite_index ? find_finite_index(psi, *phi, options) : find_peripheral_collection(psi, *phi, options);
  json j{{"verdict", verdict_name(v.kind)}, {"radius", v.radius}, {"nodes", v.nodes}};
  if (v.kind == SearchVerdict::Kind::NoWithinRadius)
    j["complete_radius"] = complete_search_radius(phi->size(), psi->size());
  if (v.certificate) j["certificate"] = certificate_json(*v.certificate, phi.get());
  if (v.index) j["index"] = *v.index;
  if (a.json) {
    out << j.dump(2) << "\n";
  } else {
    out << verdict_name(v.kind);
    if (v.kind == SearchVerdict::Kind::NoWithinRadius)
      out << " " << v.radius << " (complete search needs radius "
          << complete_search_radius(phi->size(), psi->size()) << ")";
    if (v.kind == SearchVerdict::Kind::Yes) out << " at radius " << v.radius;
    if (v.index) out << ", index " << *v.index;
    out << "\n";
    if (v.certificate) {
      std::vector<std::string> basis;
      for (const auto& r : v.certificate->reflections) basis.push_back(format_word(r));
      out << "basis: " << join(basis, ", ") << "\n";
      out << j["certificate"].dump() << "\n";
    }
  }
  return v.kind == SearchVerdict::Kind::NoWithinRadius ? kUndecided : kDecided;
}

int peripheral_check(const Args& a, std::ostream& out) {
  GraphPtr graph = load_graph(a.graph);
  std::string text = read_file(a.file);
  std::vector<Hyperplane> members;
  json cert;
  const bool is_json = text.find_first_not_of(" \t\r\n") != std::string::npos && text[text.find_first_not_of(" \t\r\n")] == '{';
  if (is_json) {
    try {
      cert = json::parse(text);
      if (cert.contains("certificate")) cert = cert["certificate"];
      for (const auto& s : cert.at("collection")) members.push_back(parse_hyperplane(graph, s.get<std::string>()));
    } catch (const json::exception& e) {
      throw ParseError(a.file, 0, std::string("bad certificate: ") + e.what());
    }
  } else {
    members = parse_collection(graph, text, a.file);
  }
  HyperplaneCollection c(graph, std::move(members));
  bool ok = is_peripheral(c);
  std::vector<std::string> problems;
  if (!ok) problems.push_back("collection is not peripheral");
  if (ok && is_json) {
    BasisCertificate fresh = certify_basis(c);
    if (cert.contains("reflections")) {
      std::vector<std::string> given = cert["reflections"].get<std::vector<std::string>>();
      for (std::size_t i = 0; i < given.size() || i < fresh.reflections.size(); ++i)
        if (i >= given.size() || i >= fresh.reflections.size() ||
            !(parse_word(graph, given[i]) == fresh.reflections[i]))
          problems.push_back("reflection " + std::to_string(i) + " does not match its hyperplane");
    }
    if (cert.contains("crossing_edges")) {
      std::vector<Edge> given;
      for (const auto& e : cert["crossing_edges"]) given.emplace_back(std::minmax(e.at(0).get<VertexId>(), e.at(1).get<VertexId>()));
      std::sort(given.begin(), given.end());
      if (given != fresh.crossing_graph.edges()) problems.push_back("crossing edges do not match");
    }
  }
  ok = problems.empty();
  if (a.json) {
    out << json{{"peripheral", is_peripheral(c)}, {"valid", ok}, {"problems", problems}}.dump(2) << "\n";
  } else {
    out << (ok ? "valid" : "invalid") << "\n";
    for (const auto& p : problems) out << "  " << p << "\n";
  }
  return kDecided;
}

int reduce_collection_command(const Args& a, std::ostream& out) {
  GraphPtr graph = load_graph(a.graph);
  HyperplaneCollection c = load_collection(graph, a.file);
  std::vector<CutPasteMove> log;
  HyperplaneCollection reduced = reduce_collection(c, &log);
  const std::size_t radius = reduction_radius(c.size(), graph->size());
  if (a.json) {
    json moves = json::array();
    for (const auto& m : log)
      moves.push_back({{"A", format_hyperplane(m.a)}, {"B", format_hyperplane(m.b)}, {"t", format_word(m.t)}, {"moved", m.moved}});
    out << json{{"radius", radius}, {"moves", moves}, {"collection", collection_json(reduced)}}.dump(2) << "\n";
  } else {
    out << "# radius " << radius << ", " << log.size() << " move(s)\n";
    for (const auto& m : log) {
      std::vector<std::string> idx;
      for (auto i : m.moved) idx.push_back(std::to_string(i));
      out << "# cut A=" << format_hyperplane(m.a) << " B=" << format_hyperplane(m.b) << " t=" << format_word(m.t)
          << " moved=" << join(idx, ",") << "\n";
    }
    out << format_collection(reduced.members());
  }
  return kDecided;
}

int decompose_command(const Args& a, std::ostream& out) {
  GraphPtr dom = load_graph(a.graph), cod = load_graph(a.graph2);
  auto images = parse_morphism_images(*dom, cod, read_file(a.file), a.file);
  Morphism m{dom, cod, std::move(images), false};
  DecompositionTrace trace;
  std::optional<std::string> stuck;
  try {
    trace = peripheralize(m);
  } catch (const DecompositionStuck& e) {
    trace = e.partial();
    stuck = e.what();
  }
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json step;
    if (s.kind == DecompositionStep::Kind::Folding) {
      json classes = json::array();
      for (const auto& k : s.partition) {
        std::vector<std::string> names;
        for (VertexId v : k) names.push_back(s.map.domain->name(v));
        classes.push_back(names);
      }
      step = {{"kind", "folding"}, {"classes", classes}};
    } else {
      std::vector<std::string> comp;
      for (VertexId v : s.component) comp.push_back(s.map.domain->name(v));
      step = {{"kind", "partial-conjugation"}, {"center", s.map.domain->name(s.center)}, {"component", comp}};
    }
    step["complexity"] = s.complexity_after;
    steps.push_back(step);
  }
  std::vector<std::string> terminal;
  for (VertexId v = 0; v < trace.terminal.domain->size(); ++v)
    terminal.push_back(trace.terminal.domain->name(v) + " -> " + format_word(trace.terminal.images[v]));
  if (a.json) {
    json j{{"complexity", complexity(m)}, {"steps", steps}, {"terminal", terminal},
           {"terminal_domain", graph_json(*trace.terminal.domain)}, {"stuck", stuck ? json(*stuck) : json()}};
    out << j.dump(2) << "\n";
  } else {
    out << "complexity " << complexity(m) << "\n";
    for (const auto& s : steps) {
      if (s["kind"] == "folding") out << "fold " << s["classes"].dump();
      else out << "partial-conjugation by " << s["center"].get<std::string>() << " on " << s["component"].dump();
      out << " -> complexity " << s["complexity"] << "\n";
    }
    out << (stuck ? "stuck at:\n" : "terminal:\n");
    for (const auto& t : terminal) out << "  " << t << "\n";
    if (stuck) out << *stuck << "\n";
  }
  // The morphism is fine; only the folding/partial-conjugation route is blocked.
  return stuck ? kUndecided : kDecided;
}

void print_family(const FamilyVerdict& v, bool as_json, const SimplicialGraph* source, const SimplicialGraph* target,
                  std::ostream& out) {
  json j{{"verdict", v.yes ? "Yes" : "No"}, {"reason", v.reason}};
  if (v.collection) j["collection"] = collection_json(*v.collection);
  if (v.map && source && target) {
    json map = json::object();
    for (VertexId x = 0; x < source->size(); ++x) map[source->name(x)] = target->name((*v.map)[x]);
    j["map"] = map;
  }
  if (as_json) {
    out << j.dump(2) << "\n";
    return;
  }
  out << (v.yes ? "Yes" : "No") << ": " << v.reason << "\n";
  if (j.contains("map"))
    for (auto& [k, val] : j["map"].items()) out << "  " << k << " -> " << val.get<std::string>() << "\n";
  if (v.collection) out << format_collection(v.collection->members());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Args a;
  std::function<int()> action;
  CLI::App app{"Embeddings between right-angled Coxeter groups", "racg"};
  app.require_subcommand(1);
  app.add_flag("--json", a.json, "Emit JSON");

  auto* reduce_cmd = app.add_subcommand("reduce", "Canonical form of a word");
  reduce_cmd->add_option("graph", a.graph)->required();
  reduce_cmd->add_option("word", a.words);
  reduce_cmd->callback([&] {
    action = [&] {
      GraphPtr g = load_graph(a.graph);
      GroupElement x = parse_word(g, join(a.words, " "));
      if (a.json) out << json{{"word", format_word(x)}, {"length", x.length()}}.dump(2) << "\n";
      else out << format_word(x) << "\n";
      return kDecided;
    };
  });

  auto* cross_cmd = app.add_subcommand("crossing-graph", "Crossing graph of a collection");
  cross_cmd->add_option("graph", a.graph)->required();
  cross_cmd->add_option("collection", a.file)->required();
  cross_cmd->add_flag("--dot", a.dot, "Emit Graphviz DOT");
  cross_cmd->callback([&] {
    action = [&] {
      SimplicialGraph cg = crossing_graph(load_collection(load_graph(a.graph), a.file));
      if (a.dot) out << dot(cg);
      else if (a.json) out << graph_json(cg).dump(2) << "\n";
      else out << format_graph(cg);
      return kDecided;
    };
  });

  auto* check_cmd = app.add_subcommand("peripheral-check", "Check a collection or JSON certificate");
  check_cmd->add_option("graph", a.graph)->required();
  check_cmd->add_option("collection", a.file)->required();
  check_cmd->callback([&] { action = [&] { return peripheral_check(a, out); }; });

  auto* covol_cmd = app.add_subcommand("covolume", "Covolume of a peripheral collection");
  covol_cmd->add_option("graph", a.graph)->required();
  covol_cmd->add_option("collection", a.file)->required();
  covol_cmd->callback([&] {
    action = [&] {
      Covolume c = covolume(load_collection(load_graph(a.graph), a.file));
      if (a.json) out << json{{"covolume", covolume_json(c)}}.dump(2) << "\n";
      else out << covolume_text(c) << "\n";
      return kDecided;
    };
  });

  for (bool index : {false, true}) {
    auto* cmd = app.add_subcommand(index ? "embed-index" : "embed",
                                   index ? "Search for a finite-index embedding" : "Search for an embedding");
    cmd->add_option("phi", a.graph)->required();
    cmd->add_option("psi", a.graph2)->required();
    cmd->add_option("--max-radius", a.max_radius, "Largest ball radius searched")->capture_default_str();
    cmd->add_flag("--deterministic", a.deterministic, "Sequential search in canonical order");
    cmd->add_option("--threads", a.threads, "Worker threads (default: RACG_THREADS or all cores)")
        ->each([&](const std::string&) { a.threads_given = true; });
    cmd->callback([&, index] { action = [&, index] { return embed_command(a, out, index); }; });
  }

  auto* rc_cmd = app.add_subcommand("reduce-collection", "Cut and paste a collection into the bounded ball");
  rc_cmd->add_option("graph", a.graph)->required();
  rc_cmd->add_option("collection", a.file)->required();
  rc_cmd->callback([&] { action = [&] { return reduce_collection_command(a, out); }; });

  auto* dec_cmd = app.add_subcommand("decompose", "Decompose a morphism with reflection images (exit 2 when no partial conjugation lowers complexity)");
  dec_cmd->add_option("domain", a.graph)->required();
  dec_cmd->add_option("codomain", a.graph2)->required();
  dec_cmd->add_option("morphism", a.file)->required();
  dec_cmd->callback([&] { action = [&] { return decompose_command(a, out); }; });

  auto* dbl_cmd = app.add_subcommand("double", "Index-two double along a vertex");
  dbl_cmd->add_option("graph", a.graph)->required();
  dbl_cmd->add_option("vertex", a.vertex)->required();
  dbl_cmd->callback([&] {
    action = [&] {
      GraphPtr g = load_graph(a.graph);
      DoubleResult d = double_graph(g, g->id(a.vertex));
      if (a.json) {
        out << json{{"graph", graph_json(*d.psi)}, {"collection", collection_json(d.collection)}, {"covolume", 2}}.dump(2)
            << "\n";
      } else {
        out << format_graph(*d.psi) << "---\n" << format_collection(d.collection.members());
      }
      return kDecided;
    };
  });

  auto* fam = app.add_subcommand("family", "Closed-form deciders");
  fam->require_subcommand(1);
  auto* fam_cycle = fam->add_subcommand("cycle", "C(C_m) into C(C_n)");
  fam_cycle->add_option("m", a.m)->required();
  fam_cycle->add_option("n", a.n)->required();
  fam_cycle->callback([&] {
    action = [&] {
      print_family(cycle_embed(a.m, a.n), a.json, nullptr, nullptr, out);
      return kDecided;
    };
  });
  auto* fam_into = fam->add_subcommand("into-cycle", "C(graph) into C(C_n)");
  fam_into->add_option("graph", a.graph)->required();
  fam_into->add_option("n", a.n)->required();
  fam_into->callback([&] {
    action = [&] {
      print_family(graph_into_cycle(*load_graph(a.graph), a.n), a.json, nullptr, nullptr, out);
      return kDecided;
    };
  });
  for (bool forest : {false, true}) {
    auto* cmd = fam->add_subcommand(forest ? "forest" : "tree", forest ? "C(forest) into C(tree)" : "C(tree) into C(tree)");
    cmd->add_option("source", a.graph)->required();
    cmd->add_option("target", a.graph2)->required();
    cmd->callback([&, forest] {
      action = [&, forest] {
        GraphPtr r = load_graph(a.graph), s = load_graph(a.graph2);
        print_family(forest ? forest_embed(*r, *s) : tree_embed(*r, *s), a.json, r.get(), s.get(), out);
        return kDecided;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kDecided : kInputError;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace racg::cli
