#include "racg/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "racg/errors.hpp"

namespace racg {

namespace {

constexpr std::string_view kIdentity = "ε";

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    auto nl = text.find('\n');
    out.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

bool single_char_names(const SimplicialGraph& g) {
  return std::all_of(g.names().begin(), g.names().end(), [](const std::string& n) { return n.size() == 1; });
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SimplicialGraph parse_graph(std::string_view text, const std::string& source) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  auto lookup = [&](const std::string& name, std::size_t line) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError(source, line, "unknown vertex '" + name + "'");
    return static_cast<VertexId>(it - names.begin());
  };
  std::size_t lineno = 0;
  for (std::string_view raw : lines_of(text)) {
    ++lineno;
    auto tokens = split_ws(strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens[0] == "vertex") {
      if (tokens.size() != 2) throw ParseError(source, lineno, "expected 'vertex <name>'");
      if (tokens[1] == kIdentity || tokens[1].find('|') != std::string::npos)
        throw ParseError(source, lineno, "reserved vertex name '" + tokens[1] + "'");
      if (std::find(names.begin(), names.end(), tokens[1]) != names.end())
        throw ParseError(source, lineno, "duplicate vertex '" + tokens[1] + "'");
      names.push_back(tokens[1]);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 3) throw ParseError(source, lineno, "expected 'edge <name> <name>'");
      VertexId a = lookup(tokens[1], lineno), b = lookup(tokens[2], lineno);
      if (a == b) throw ParseError(source, lineno, "loop at vertex '" + tokens[1] + "'");
      Edge e = std::minmax(a, b);
      if (!seen_edges.insert(e).second)
        throw ParseError(source, lineno, "duplicate edge " + tokens[1] + " " + tokens[2]);
      edges.push_back(e);
    } else {
      throw ParseError(source, lineno, "unknown directive '" + tokens[0] + "'");
    }
  }
  return SimplicialGraph(std::move(names), edges);
}

std::string format_graph(const SimplicialGraph& g) {
  std::string out;
  for (const auto& n : g.names()) out += "vertex " + n + "\n";
  for (auto [u, v] : g.edges()) out += "edge " + g.name(u) + " " + g.name(v) + "\n";
  return out;
}

GroupElement parse_word(const GraphPtr& graph, std::string_view text) {
  std::vector<VertexId> letters;
  const bool compact = single_char_names(*graph);
  for (const auto& tok : split_ws(text)) {
    if (tok == kIdentity) continue;
    if (auto v = graph->find(tok)) {
      letters.push_back(*v);
    } else if (compact) {
      for (char ch : tok) {
        auto c = graph->find(std::string_view(&ch, 1));
        if (!c) throw std::invalid_argument("unknown vertex '" + std::string(1, ch) + "' in word '" + tok + "'");
        letters.push_back(*c);
      }
    } else {
      throw std::invalid_argument("unknown vertex '" + tok + "'");
    }
  }
  return reduce(graph, letters);
}

std::string format_word(const GroupElement& g) {
  if (g.is_identity()) return std::string(kIdentity);
  const bool compact = single_char_names(g.ambient());
  std::string out;
  for (VertexId v : g.word()) {
    if (!compact && !out.empty()) out += ' ';
    out += g.ambient().name(v);
  }
  return out;
}

Hyperplane parse_hyperplane(const GraphPtr& graph, std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("expected '<word>|<label>', got '" + std::string(text) + "'");
  std::string label(trim(text.substr(bar + 1)));
  auto u = graph->find(label);
  if (!u) throw std::invalid_argument("unknown label '" + label + "'");
  return canonicalize(parse_word(graph, text.substr(0, bar)), *u);
}

std::string format_hyperplane(const Hyperplane& h) {
  return format_word(h.g()) + "|" + h.g().ambient().name(h.label());
}

std::vector<Hyperplane> parse_collection(const GraphPtr& graph, std::string_view text,
                                         const std::string& source) {
  std::vector<Hyperplane> out;
  std::size_t lineno = 0;
  for (std::string_view raw : lines_of(text)) {
    ++lineno;
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    Hyperplane h;
    try {
      h = parse_hyperplane(graph, line);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, lineno, e.what());
    }
    if (std::find(out.begin(), out.end(), h) != out.end())
      throw ParseError(source, lineno, "hyperplane " + format_hyperplane(h) + " listed twice");
    out.push_back(std::move(h));
  }
  return out;
}

std::string format_collection(const std::vector<Hyperplane>& members) {
  std::string out;
  for (const auto& h : members) out += format_hyperplane(h) + "\n";
  return out;
}

std::vector<GroupElement> parse_morphism_images(const SimplicialGraph& domain, const GraphPtr& codomain,
                                                std::string_view text, const std::string& source) {
  std::vector<std::optional<GroupElement>> images(domain.size());
  std::size_t lineno = 0;
  for (std::string_view raw : lines_of(text)) {
    ++lineno;
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError(source, lineno, "expected '<vertex> -> <word>'");
    std::string name(trim(line.substr(0, arrow)));
    auto v = domain.find(name);
    if (!v) throw ParseError(source, lineno, "unknown domain vertex '" + name + "'");
    if (images[*v]) throw ParseError(source, lineno, "vertex '" + name + "' mapped twice");
    try {
      images[*v] = parse_word(codomain, line.substr(arrow + 2));
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  std::vector<GroupElement> out;
  for (VertexId v = 0; v < domain.size(); ++v) {
    if (!images[v]) throw ParseError(source, 0, "no image given for vertex '" + domain.name(v) + "'");
    out.push_back(std::move(*images[v]));
  }
  return out;
}

std::string format_morphism_images(const SimplicialGraph& domain, const std::vector<GroupElement>& images) {
  std::string out;
  for (VertexId v = 0; v < domain.size(); ++v) out += domain.name(v) + " -> " + format_word(images.at(v)) + "\n";
  return out;
}

}  // namespace racg
