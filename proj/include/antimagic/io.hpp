#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "antimagic/labelers.hpp"

namespace antimagic {

enum class OutputFormat { json, tsv, dot, text };

std::optional<OutputFormat> parse_format(std::string_view name);

// Labeling documents.
//   json: {"family","m","n","edges":[{"u":[r,c],"v":[r,c],"label":l}],"sums":{"r,c":s}}
//   tsv:  one edge per line, columns u_row u_col v_row v_col label
//   dot:  undirected graph, vertices pinned to their position along each
//         axis' traversal, labels as edge attributes
void write_json(const Labeling& lab, std::ostream& out);
void write_tsv(const Labeling& lab, std::ostream& out);
void write_dot(const Labeling& lab, std::ostream& out);

/// Parses a JSON labeling document or a TSV edge list (detected by a leading
/// '{'). Throws ParseError on malformed input and InvalidParameter when the
/// edges do not form a simple graph.
Labeling read_labeling(std::string_view text);

}  // namespace antimagic
