#include "antimagic/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "antimagic/error.hpp"

namespace antimagic {

SumReport vertex_sums(const Labeling& lab) {
  const Graph& g = lab.graph();
  SumReport report;
  report.total.assign(g.vertex_count(), 0);
  report.first.assign(g.vertex_count(), 0);
  report.second.assign(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoint_ids(e);
    auto& part = factor_of(g.edge(e)) == Factor::first ? report.first : report.second;
    part[a] += lab[e];
    part[b] += lab[e];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) report.total[v] = report.first[v] + report.second[v];
  return report;
}

namespace {

// Labels outside 1..edge_count plus in-range labels whose count != 1.
std::vector<Label> label_problems(std::span<const Label> labels) {
  const auto count = static_cast<Label>(labels.size());
  std::vector<std::uint32_t> seen(labels.size() + 1, 0);
  std::set<Label> out_of_range;
  for (Label l : labels) {
    if (l < 1 || l > count) {
      out_of_range.insert(l);
    } else {
      ++seen[static_cast<std::size_t>(l)];
    }
  }
  std::vector<Label> problems(out_of_range.begin(), out_of_range.end());
  for (Label l = 1; l <= count; ++l) {
    if (seen[static_cast<std::size_t>(l)] != 1) problems.push_back(l);
  }
  std::sort(problems.begin(), problems.end());
  if (problems.size() > kMaxReportedLabels) problems.resize(kMaxReportedLabels);
  return problems;
}

// Lexicographically first pair (by VertexId, i.e. by vertex order) among
// `ids` whose values coincide.
std::optional<std::pair<VertexId, VertexId>> first_equal_pair(std::vector<VertexId> ids,
                                                              const std::vector<Label>& value) {
  std::sort(ids.begin(), ids.end(), [&](VertexId x, VertexId y) {
    return value[x] != value[y] ? value[x] < value[y] : x < y;
  });
  std::optional<std::pair<VertexId, VertexId>> best;
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    if (value[ids[i]] != value[ids[i + 1]]) continue;
    if (!best || ids[i] < best->first) best = std::pair{ids[i], ids[i + 1]};
  }
  return best;
}

}  // namespace

Verdict check_antimagic(const Labeling& lab) {
  Verdict verdict;
  verdict.missing_or_repeated_labels = label_problems(lab.labels());
  verdict.bijection_ok = verdict.missing_or_repeated_labels.empty();
  if (!verdict.bijection_ok) return verdict;

  const Graph& g = lab.graph();
  const SumReport sums = vertex_sums(lab);
  std::vector<VertexId> ids(g.vertex_count());
  std::iota(ids.begin(), ids.end(), VertexId{0});
  if (auto pair = first_equal_pair(std::move(ids), sums.total)) {
    verdict.duplicate = VertexPair{g.vertex(pair->first), g.vertex(pair->second)};
  }
  verdict.antimagic = !verdict.duplicate;
  return verdict;
}

// ---------------------------------------------------------------------------

bool PropertyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

const PropertyResult* PropertyReport::find(std::string_view name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

// Sum lookup in the orientation the construction was written in. For a
// lattice with m > n the labeling is the transpose of the (n, m) one, so
// (i, j) here is vertex (j, i) of the graph.
class SumView {
 public:
  SumView(const Graph& g, const SumReport& sums, bool transposed)
      : g_(g), sums_(sums), transposed_(transposed) {}

  Vertex vertex(Index i, Index j) const { return transposed_ ? Vertex{j, i} : Vertex{i, j}; }
  Label total(Index i, Index j) const { return sums_.total[id(i, j)]; }
  Label total(const Vertex& v) const { return sums_.total[*g_.find_vertex(v)]; }

 private:
  VertexId id(Index i, Index j) const { return *g_.find_vertex(vertex(i, j)); }

  const Graph& g_;
  const SumReport& sums_;
  bool transposed_;
};

PropertyResult strictly_increasing(std::string name, std::string description, const SumView& view,
                                   const std::vector<Vertex>& chain) {
  PropertyResult result{std::move(name), std::move(description), true, std::nullopt};
  for (std::size_t p = 0; p + 1 < chain.size(); ++p) {
    const Label lo = view.total(chain[p]);
    const Label hi = view.total(chain[p + 1]);
    if (lo >= hi) {
      result.passed = false;
      result.certificate = Certificate{{chain[p], chain[p + 1]}, {lo, hi}, "sums not strictly increasing"};
      break;
    }
  }
  return result;
}

void require_parity(PropertyResult& result, const SumView& view, const std::vector<Vertex>& vertices,
                    int parity) {
  if (!result.passed) return;
  for (const auto& v : vertices) {
    const Label sum = view.total(v);
    if (((sum % 2) + 2) % 2 != parity) {
      result.passed = false;
      result.certificate = Certificate{{v}, {sum}, parity == 0 ? "odd sum" : "even sum"};
      return;
    }
  }
}

void require_distinct(PropertyResult& result, const SumView& view, std::vector<Vertex> vertices) {
  if (!result.passed) return;
  std::sort(vertices.begin(), vertices.end());
  std::vector<Label> values;
  for (const auto& v : vertices) values.push_back(view.total(v));
  std::vector<VertexId> ids(vertices.size());
  std::iota(ids.begin(), ids.end(), VertexId{0});
  if (auto pair = first_equal_pair(std::move(ids), values)) {
    result.passed = false;
    result.certificate = Certificate{{vertices[pair->first], vertices[pair->second]},
                                     {values[pair->first], values[pair->second]},
                                     "equal sums"};
  }
}

void require_value(PropertyResult& result, const SumView& view, const Vertex& v, Label expected) {
  if (!result.passed) return;
  const Label sum = view.total(v);
  if (sum != expected) {
    result.passed = false;
    result.certificate = Certificate{{v}, {sum, expected}, "sum differs from the expected value"};
  }
}

void lattice_general_properties(PropertyReport& report, const SumView& view, Index m, Index n) {
  const Index t = (n - m) / 2;

  // Degree-4-ish interior: rows 1..m over columns 2..n, then row m+1 over
  // columns 2..n-2t. These carry exactly two odd labels each.
  std::vector<Vertex> even_chain;
  std::vector<bool> in_chain(static_cast<std::size_t>((m + 1) * (n + 1)), false);
  for (Index i = 1; i <= m + 1; ++i) {
    const Index last = i <= m ? n : n - 2 * t;
    for (Index j = 2; j <= last; ++j) {
      even_chain.push_back(view.vertex(i, j));
      in_chain[static_cast<std::size_t>((i - 1) * (n + 1) + (j - 1))] = true;
    }
  }
  PropertyResult even = strictly_increasing(
      "lattice_even_chain",
      "interior sums, row by row (last row truncated at column n-2t), are even and strictly increasing",
      view, even_chain);
  require_parity(even, view, even_chain, 0);
  report.results.push_back(std::move(even));

  std::vector<Vertex> rest;
  for (Index i = 1; i <= m + 1; ++i) {
    for (Index j = 1; j <= n + 1; ++j) {
      if (!in_chain[static_cast<std::size_t>((i - 1) * (n + 1) + (j - 1))]) rest.push_back(view.vertex(i, j));
    }
  }
  PropertyResult odd{"lattice_odd_distinct",
                     "remaining end-column and last-row sums are odd and pairwise distinct; "
                     "for even m, f+(u2,v_{n+1}) = 6n+3 and f+(u2,v1) = 6n+5",
                     true, std::nullopt};
  require_parity(odd, view, rest, 1);
  require_distinct(odd, view, rest);
  if (m % 2 == 0) {
    require_value(odd, view, view.vertex(2, n + 1), 6 * n + 3);
    require_value(odd, view, view.vertex(2, 1), 6 * n + 5);
  }
  report.results.push_back(std::move(odd));
}

}  // namespace

PropertyReport check_construction_properties(const FamilySpec& spec, const Labeling& lab) {
  validate(spec);
  const Graph& g = lab.graph();
  if (!g.spec() || *g.spec() != spec) {
    throw InvalidParameter("labeling does not belong to " + to_string(spec));
  }
  const SumReport sums = vertex_sums(lab);
  PropertyReport report{spec, {}};
  const Index m = spec.m;
  const Index n = spec.n;

  switch (spec.family) {
    case Family::path:
    case Family::cycle: {
      const SumView view(g, sums, false);
      std::vector<Vertex> chain;
      for (Index i = 1; i <= vertex_count(spec); ++i) chain.push_back({i, 1});
      const bool is_path = spec.family == Family::path;
      report.results.push_back(strictly_increasing(is_path ? "path_chain" : "cycle_chain",
                                                   "f+(v1) < f+(v2) < ... in index order", view, chain));
      break;
    }
    case Family::lattice: {
      const bool transposed = m > n;
      const Index lo = std::min(m, n);
      const Index hi = std::max(m, n);
      const SumView view(g, sums, transposed);
      if (lo >= 2) {
        lattice_general_properties(report, view, lo, hi);
      } else if (hi >= 2) {
        std::vector<Vertex> chain;
        for (Index j = 1; j <= hi + 1; ++j) {
          chain.push_back(view.vertex(1, j));
          chain.push_back(view.vertex(2, j));
        }
        report.results.push_back(strictly_increasing(
            "thin_lattice_chain", "f+(u1,v1) < f+(u2,v1) < f+(u1,v2) < ... < f+(u2,v_{n+1})", view, chain));
      } else {
        // Vertices in the order of the 4-cycle they are identified with.
        report.results.push_back(strictly_increasing("square_chain", "4-cycle sums increase along v1..v4", view,
                                                     {{1, 1}, {2, 1}, {1, 2}, {2, 2}}));
      }
      break;
    }
    case Family::prism: {
      const SumView view(g, sums, false);
      if (n >= 2) {
        PropertyResult order{"prism_column_order",
                             "column-sorted sums concatenate to a strictly increasing sequence; each column "
                             "increases in i except column 2 for even n, which decreases",
                             true, std::nullopt};
        Label previous_max = 0;
        std::vector<Vertex> previous_argmax;
        for (Index j = 1; j <= n + 1 && order.passed; ++j) {
          const bool decreasing = j == 2 && n % 2 == 0;
          for (Index i = 1; i < m; ++i) {
            const Label a = view.total(i, j);
            const Label b = view.total(i + 1, j);
            if (decreasing ? a <= b : a >= b) {
              order.passed = false;
              order.certificate = Certificate{{{i, j}, {i + 1, j}}, {a, b},
                                              decreasing ? "column 2 not strictly decreasing"
                                                         : "column not strictly increasing"};
              break;
            }
          }
          if (!order.passed) break;
          Index arg_min = 1;
          Index arg_max = 1;
          for (Index i = 2; i <= m; ++i) {
            if (view.total(i, j) < view.total(arg_min, j)) arg_min = i;
            if (view.total(i, j) > view.total(arg_max, j)) arg_max = i;
          }
          if (j > 1 && view.total(arg_min, j) <= previous_max) {
            order.passed = false;
            order.certificate = Certificate{{previous_argmax.front(), {arg_min, j}},
                                            {previous_max, view.total(arg_min, j)},
                                            "column minimum does not exceed previous column maximum"};
          }
          previous_max = view.total(arg_max, j);
          previous_argmax = {{arg_max, j}};
        }
        report.results.push_back(std::move(order));
      } else {
        std::vector<Vertex> chain;
        for (Index i = 1; i <= m; ++i) {
          chain.push_back({i, 1});
          chain.push_back({i, 2});
        }
        report.results.push_back(strictly_increasing(
            "prism_two_layer_chain", "f+(u1,v1) < f+(u1,v2) < f+(u2,v1) < ... < f+(u_m,v2)", view, chain));
      }
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json vertex_json(const Vertex& v) { return nlohmann::ordered_json::array({v.row, v.col}); }

std::string join_labels(const std::vector<Label>& labels) {
  std::ostringstream out;
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
  return out.str();
}

}  // namespace

nlohmann::ordered_json to_json(const Verdict& verdict) {
  nlohmann::ordered_json j;
  j["antimagic"] = verdict.antimagic;
  j["bijection_ok"] = verdict.bijection_ok;
  if (verdict.duplicate) {
    j["duplicate"] = {{"u", vertex_json(verdict.duplicate->first)}, {"v", vertex_json(verdict.duplicate->second)}};
  } else {
    j["duplicate"] = nullptr;
  }
  j["missing_or_repeated_labels"] = verdict.missing_or_repeated_labels;
  return j;
}

nlohmann::ordered_json to_json(const PropertyReport& report) {
  nlohmann::ordered_json j;
  j["family"] = std::string(to_string(report.spec.family));
  j["m"] = report.spec.m;
  j["n"] = report.spec.n;
  j["all_passed"] = report.all_passed();
  auto& props = j["properties"] = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json p;
    p["name"] = r.name;
    p["passed"] = r.passed;
    p["description"] = r.description;
    if (r.certificate) {
      auto& c = p["certificate"];
      c["reason"] = r.certificate->reason;
      c["vertices"] = nlohmann::ordered_json::array();
      for (const auto& v : r.certificate->vertices) c["vertices"].push_back(vertex_json(v));
      c["values"] = r.certificate->values;
    } else {
      p["certificate"] = nullptr;
    }
    props.push_back(std::move(p));
  }
  return j;
}

std::string to_text(const Verdict& verdict) {
  std::ostringstream out;
  out << "antimagic\t" << (verdict.antimagic ? "yes" : "no") << '\n';
  out << "bijection\t" << (verdict.bijection_ok ? "ok" : "broken") << '\n';
  if (!verdict.missing_or_repeated_labels.empty()) {
    out << "bad_labels\t" << join_labels(verdict.missing_or_repeated_labels) << '\n';
  }
  if (verdict.duplicate) {
    out << "duplicate\t" << to_string(verdict.duplicate->first) << '\t' << to_string(verdict.duplicate->second)
        << '\n';
  }
  return out.str();
}

std::string to_text(const PropertyReport& report) {
  std::ostringstream out;
  out << "# " << to_string(report.spec) << '\n';
  for (const auto& r : report.results) {
    out << (r.passed ? "PASS" : "FAIL") << '\t' << r.name;
    if (r.certificate) {
      out << '\t' << r.certificate->reason << " at";
      for (const auto& v : r.certificate->vertices) out << ' ' << to_string(v);
      out << " values " << join_labels(r.certificate->values);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace antimagic
