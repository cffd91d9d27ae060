#include "antimagic/io.hpp"

#include <ostream>
#include <sstream>
#include <string>

#include "antimagic/error.hpp"
#include "antimagic/verifier.hpp"
#include "json.hpp"

namespace antimagic {

using ordered_json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "tsv") return OutputFormat::tsv;
  if (name == "dot") return OutputFormat::dot;
  if (name == "text") return OutputFormat::text;
  return std::nullopt;
}

void write_json(const Labeling& lab, std::ostream& out) {
  const Graph& g = lab.graph();
  ordered_json doc;
  if (const auto& spec = g.spec()) {
    doc["family"] = std::string(to_string(spec->family));
    doc["m"] = spec->m;
    doc["n"] = spec->n;
  } else {
    doc["family"] = nullptr;
    doc["m"] = nullptr;
    doc["n"] = nullptr;
  }
  auto& edges = doc["edges"] = ordered_json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    edges.push_back({{"u", {edge.a.row, edge.a.col}}, {"v", {edge.b.row, edge.b.col}}, {"label", lab[e]}});
  }
  const SumReport sums = vertex_sums(lab);
  auto& sum_doc = doc["sums"] = ordered_json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) sum_doc[to_string(g.vertex(v))] = sums.total[v];
  out << doc.dump(2) << '\n';
}

void write_tsv(const Labeling& lab, std::ostream& out) {
  const Graph& g = lab.graph();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out << edge.a.row << '\t' << edge.a.col << '\t' << edge.b.row << '\t' << edge.b.col << '\t' << lab[e] << '\n';
  }
}

namespace {

// Position of every index along an axis' traversal (0-based), or the index
// itself for graphs read from files.
std::vector<Index> axis_positions(const AxisLayout& axis) {
  if (axis.size < 2 || (axis.kind == ArrangementKind::skip_cycle && axis.size < 3)) {
    return std::vector<Index>(static_cast<std::size_t>(axis.size), 0);
  }
  return make_arrangement(axis.kind, axis.size).position;
}

}  // namespace

void write_dot(const Labeling& lab, std::ostream& out) {
  const Graph& g = lab.graph();
  const SumReport sums = vertex_sums(lab);
  std::vector<Index> row_pos;
  std::vector<Index> col_pos;
  bool one_dimensional = false;
  if (g.shape()) {
    row_pos = axis_positions(g.shape()->rows);
    col_pos = axis_positions(g.shape()->cols);
    one_dimensional = g.shape()->cols.size == 1;
  }
  auto place = [&](const Vertex& v) {
    Index x = v.col - 1;
    Index y = v.row - 1;
    if (g.shape()) {
      x = col_pos[static_cast<std::size_t>(v.col - 1)];
      y = row_pos[static_cast<std::size_t>(v.row - 1)];
    }
    if (one_dimensional) return std::pair{y, Index{0}};
    return std::pair{x, -y};
  };

  out << "graph antimagic {\n";
  if (const auto& spec = g.spec()) out << "  label=\"" << to_string(*spec) << "\";\n";
  out << "  node [shape=circle, fontsize=10];\n";
  out << "  edge [fontsize=10];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Vertex& vx = g.vertex(v);
    const auto [x, y] = place(vx);
    out << "  \"" << to_string(vx) << "\" [pos=\"" << x << ',' << y << "!\", xlabel=\"" << sums.total[v]
        << "\"];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out << "  \"" << to_string(edge.a) << "\" -- \"" << to_string(edge.b) << "\" [label=\"" << lab[e] << "\"];\n";
  }
  out << "}\n";
}

namespace {

struct RawEdge {
  Edge edge;
  Label label;
};

Labeling assemble(const std::vector<RawEdge>& raw) {
  if (raw.empty()) throw ParseError("labeling has no edges");
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& r : raw) edges.push_back(r.edge);
  auto graph = std::make_shared<const Graph>(Graph::from_edges(std::move(edges)));
  std::vector<Label> labels(graph->edge_count());
  for (const auto& r : raw) labels[*graph->find_edge(r.edge.a, r.edge.b)] = r.label;
  return Labeling(std::move(graph), std::move(labels));
}

Vertex parse_vertex(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw ParseError("vertex must be a [row, col] pair of integers");
  }
  return {j[0].get<Index>(), j[1].get<Index>()};
}

Labeling read_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("JSON labeling needs an \"edges\" array");
  }
  std::vector<RawEdge> raw;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("label") ||
        !e["label"].is_number_integer()) {
      throw ParseError("each edge needs \"u\", \"v\" and an integer \"label\"");
    }
    const Vertex u = parse_vertex(e["u"]);
    const Vertex v = parse_vertex(e["v"]);
    if (u == v) throw InvalidParameter("loop at " + to_string(u));
    raw.push_back({make_edge(u, v), e["label"].get<Label>()});
  }
  return assemble(raw);
}

Labeling read_tsv(std::string_view text) {
  std::vector<RawEdge> raw;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    Index r1 = 0, c1 = 0, r2 = 0, c2 = 0;
    Label l = 0;
    std::string rest;
    if (!(fields >> r1 >> c1 >> r2 >> c2 >> l) || (fields >> rest)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected u_row u_col v_row v_col label");
    }
    if (Vertex{r1, c1} == Vertex{r2, c2}) throw InvalidParameter("loop on line " + std::to_string(line_no));
    raw.push_back({make_edge({r1, c1}, {r2, c2}), l});
  }
  return assemble(raw);
}

}  // namespace

Labeling read_labeling(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return read_json(text);
  return read_tsv(text);
}

}  // namespace antimagic
