#ifndef RACG_IO_HPP
#define RACG_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "racg/graph.hpp"
#include "racg/hyperplane.hpp"
#include "racg/word.hpp"

namespace racg {

// Text formats.
//
//   graph (.sg):   `vertex <name>` and `edge <name> <name>` lines, `#` comments
//   word:          whitespace-separated vertex names, `ε` for the identity; when
//                  every vertex name is one character, letters may be run together
//   hyperplane:    `<word>|<label>`, e.g. `ab|a` or `ε|b`
//   collection:    one hyperplane per line
//   morphism:      `<domain vertex> -> <codomain word>` per line

std::string read_file(const std::string& path);

SimplicialGraph parse_graph(std::string_view text, const std::string& source = "<graph>");
std::string format_graph(const SimplicialGraph& g);

GroupElement parse_word(const GraphPtr& graph, std::string_view text);
std::string format_word(const GroupElement& g);

Hyperplane parse_hyperplane(const GraphPtr& graph, std::string_view text);
std::string format_hyperplane(const Hyperplane& h);

/// Hyperplanes in file order, canonicalized. Throws ParseError on repeats.
std::vector<Hyperplane> parse_collection(const GraphPtr& graph, std::string_view text,
                                         const std::string& source = "<collection>");
std::string format_collection(const std::vector<Hyperplane>& members);

/// Images indexed by domain vertex; every domain vertex must appear once.
std::vector<GroupElement> parse_morphism_images(const SimplicialGraph& domain, const GraphPtr& codomain,
                                                std::string_view text,
                                                const std::string& source = "<morphism>");
std::string format_morphism_images(const SimplicialGraph& domain, const std::vector<GroupElement>& images);

}  // namespace racg

#endif  // RACG_IO_HPP
