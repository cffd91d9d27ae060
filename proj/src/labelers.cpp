#include "antimagic/labelers.hpp"

#include <algorithm>

#include "antimagic/error.hpp"

namespace antimagic {

Labeling::Labeling(std::shared_ptr<const Graph> graph, std::vector<Label> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (!graph_) throw InvalidParameter("labeling needs a graph");
  if (labels_.size() != graph_->edge_count()) {
    throw InvalidParameter("labeling has " + std::to_string(labels_.size()) + " labels for " +
                           std::to_string(graph_->edge_count()) + " edges");
  }
}

bool Labeling::operator==(const Labeling& other) const {
  return labels_ == other.labels_ &&
         std::equal(graph_->edges().begin(), graph_->edges().end(), other.graph_->edges().begin(),
                    other.graph_->edges().end());
}

URColoring ur_coloring(const Arrangement& arr) {
  if (arr.kind != ArrangementKind::skip_path) {
    throw InvalidParameter("U/R coloring is defined on skip-paths, got " + std::string(to_string(arr.kind)));
  }
  // incident[i] lists (neighbor, edge index) for vertex i.
  std::vector<std::vector<std::pair<Index, Index>>> incident(static_cast<std::size_t>(arr.size + 1));
  for (std::size_t pos = 0; pos < arr.edges.size(); ++pos) {
    const auto [lo, hi] = arr.edges[pos];
    incident[lo].emplace_back(hi, arr.edge_index(pos));
    incident[hi].emplace_back(lo, arr.edge_index(pos));
  }
  URColoring coloring;
  coloring.first_edge = arr.first_edge_index;
  coloring.colors.assign(arr.edges.size(), Letter::U);
  Letter next = Letter::U;
  for (std::size_t p = 0; p + 1 < arr.traversal.size(); ++p) {
    const Index from = arr.traversal[p];
    const Index to = arr.traversal[p + 1];
    auto it = std::find_if(incident[from].begin(), incident[from].end(),
                           [&](const auto& nb) { return nb.first == to; });
    coloring.colors[static_cast<std::size_t>(it->second - arr.first_edge_index)] = next;
    next = next == Letter::U ? Letter::R : Letter::U;
  }
  return coloring;
}

MergeSequence merge_sequence(Index m, Index n) {
  if (m < 2 || n < m) {
    throw InvalidParameter("merge sequence needs n >= m >= 2, got m=" + std::to_string(m) +
                           " n=" + std::to_string(n));
  }
  const Label total = 2 * m * n + m + n;
  const Label phase_one_top = 2 * m * n + 2 * m;
  MergeSequence seq;
  for (Label x = 1; x <= total; x += 2) seq.odds.push_back(x);
  for (Label x = phase_one_top + 1; x <= total; ++x) {
    if (x % 2 == 0) seq.leftover_evens.push_back(x);
  }
  seq.s = static_cast<Index>(seq.odds.size());
  seq.t = static_cast<Index>(seq.leftover_evens.size());
  const auto head = static_cast<std::size_t>(seq.s - seq.t);
  seq.merged.assign(seq.odds.begin(), seq.odds.begin() + static_cast<std::ptrdiff_t>(head));
  for (std::size_t y = 0; y < seq.leftover_evens.size(); ++y) {
    seq.merged.push_back(seq.leftover_evens[y]);
    seq.merged.push_back(seq.odds[head + y]);
  }
  return seq;
}

namespace {

std::shared_ptr<const Graph> shared_graph(const FamilySpec& spec) {
  return std::make_shared<const Graph>(build_graph(spec));
}

// Relabels a labeling of the transposed lattice onto `spec`'s own graph.
Labeling transpose_onto(const FamilySpec& spec, const Labeling& transposed) {
  auto graph = shared_graph(spec);
  std::vector<Label> labels(graph->edge_count());
  for (EdgeId e = 0; e < graph->edge_count(); ++e) {
    const Edge& edge = graph->edge(e);
    labels[e] = transposed.label_of({edge.a.col, edge.a.row}, {edge.b.col, edge.b.row});
  }
  return Labeling(std::move(graph), std::move(labels));
}

}  // namespace

Labeling label_path(Index m) {
  auto graph = shared_graph(make_spec(Family::path, m));
  const Arrangement arr = make_arrangement(ArrangementKind::skip_path, m + 1);
  std::vector<Label> labels(graph->edge_count());
  // f(v_i v_{i+2}) = i, f(v_m v_{m+1}) = m: the k-th listed edge gets k.
  for (std::size_t pos = 0; pos < arr.edges.size(); ++pos) {
    const auto [lo, hi] = arr.edges[pos];
    labels[graph->edge_id({lo, 1}, {hi, 1})] = arr.edge_index(pos);
  }
  return Labeling(std::move(graph), std::move(labels));
}

Labeling label_cycle(Index m) {
  auto graph = shared_graph(make_spec(Family::cycle, m));
  const Arrangement arr = make_arrangement(ArrangementKind::skip_cycle, m);
  std::vector<Label> labels(graph->edge_count());
  // f(v_1 v_2) = 1, f(v_i v_{i+2}) = i + 1, f(v_{m-1} v_m) = m.
  for (std::size_t pos = 0; pos < arr.edges.size(); ++pos) {
    const auto [lo, hi] = arr.edges[pos];
    labels[graph->edge_id({lo, 1}, {hi, 1})] = static_cast<Label>(pos) + 1;
  }
  return Labeling(std::move(graph), std::move(labels));
}

Labeling label_lattice_general(Index m, Index n) {
  if (m < 2 || n < m) {
    throw InvalidParameter("general lattice labeling needs n >= m >= 2, got m=" + std::to_string(m) +
                           " n=" + std::to_string(n));
  }
  auto graph = shared_graph(make_spec(Family::lattice, m, n));
  std::vector<Label> labels(graph->edge_count(), 0);

  // Phase 1: the copy of P_1-edge k at column j takes an even label from the
  // k-th block of n+1 evens; U edges fill columns in order, R edges reversed.
  const Arrangement rows = make_arrangement(ArrangementKind::skip_path, m + 1);
  const URColoring colors = ur_coloring(rows);
  for (Index k = 1; k <= m; ++k) {
    const auto [lo, hi] = rows.edge(k);
    const Label base = 2 * (k - 1) * (n + 1);
    for (Index j = 1; j <= n + 1; ++j) {
      const Index slot = colors.at(k) == Letter::U ? j : n + 2 - j;
      labels[graph->edge_id({lo, j}, {hi, j})] = base + 2 * slot;
    }
  }

  // Phase 2: row i's path edges take c_{(i-1)n+1} .. c_{in} in order.
  const MergeSequence seq = merge_sequence(m, n);
  for (Index i = 1; i <= m + 1; ++i) {
    for (Index j = 1; j <= n; ++j) {
      labels[graph->edge_id({i, j}, {i, j + 1})] = seq.c((i - 1) * n + j);
    }
  }
  return Labeling(std::move(graph), std::move(labels));
}

Labeling label_lattice_thin(Index n) {
  if (n < 2) throw InvalidParameter("thin lattice labeling needs n >= 2, got " + std::to_string(n));
  auto graph = shared_graph(make_spec(Family::lattice, 1, n));
  std::vector<Label> labels(graph->edge_count(), 0);
  const Arrangement cols = make_arrangement(ArrangementKind::skip_path, n + 1);
  for (Index k = 1; k <= n; ++k) {
    const auto [lo, hi] = cols.edge(k);
    labels[graph->edge_id({1, lo}, {1, hi})] = 2 * k - 1;
    labels[graph->edge_id({2, lo}, {2, hi})] = 2 * k;
  }
  for (Index j = 1; j <= n + 1; ++j) labels[graph->edge_id({1, j}, {2, j})] = 2 * n + j;
  return Labeling(std::move(graph), std::move(labels));
}

Labeling label_prism_general(Index m, Index n) {
  if (m < 3 || n < 2) {
    throw InvalidParameter("general prism labeling needs m >= 3 and n >= 2, got m=" + std::to_string(m) +
                           " n=" + std::to_string(n));
  }
  auto graph = shared_graph(make_spec(Family::prism, m, n));
  std::vector<Label> labels(graph->edge_count(), 0);

  // Phase 1: cycle copy j is labeled like C[m], shifted by (j-1)m.
  const Arrangement cycle = make_arrangement(ArrangementKind::skip_cycle, m);
  for (Index j = 1; j <= n + 1; ++j) {
    for (std::size_t pos = 0; pos < cycle.edges.size(); ++pos) {
      const auto [lo, hi] = cycle.edges[pos];
      labels[graph->edge_id({lo, j}, {hi, j})] = (j - 1) * m + static_cast<Label>(pos) + 1;
    }
  }

  // Phase 2: P-edge k's copies take block mn+km+1 .. mn+(k+1)m over rows
  // 1..m, reversed for R edges.
  const Arrangement path = make_arrangement(ArrangementKind::skip_path, n + 1);
  const URColoring colors = ur_coloring(path);
  for (Index k = 1; k <= n; ++k) {
    const auto [lo, hi] = path.edge(k);
    const Label base = m * n + k * m;
    for (Index i = 1; i <= m; ++i) {
      const Index slot = colors.at(k) == Letter::U ? i : m + 1 - i;
      labels[graph->edge_id({i, lo}, {i, hi})] = base + slot;
    }
  }

  // Modification: when v_2's only P-edge is R, reverse copy 2's labels.
  // The accompanying renaming of copy-2 vertices is only notation.
  if (colors.at(2) == Letter::R) {
    for (const auto& [lo, hi] : cycle.edges) {
      Label& l0 = labels[graph->edge_id({lo, 2}, {hi, 2})];
      l0 = (3 * m + 1) - l0;
    }
  }
  return Labeling(std::move(graph), std::move(labels));
}

Labeling label_prism_two_layers(Index m) {
  if (m < 3) throw InvalidParameter("two-layer prism labeling needs m >= 3, got " + std::to_string(m));
  auto graph = shared_graph(make_spec(Family::prism, m, 1));
  std::vector<Label> labels(graph->edge_count(), 0);
  const Arrangement cycle = make_arrangement(ArrangementKind::skip_cycle, m);
  for (std::size_t pos = 0; pos < cycle.edges.size(); ++pos) {
    const auto [lo, hi] = cycle.edges[pos];
    const auto odd = 2 * static_cast<Label>(pos) + 1;
    labels[graph->edge_id({lo, 1}, {hi, 1})] = odd;
    labels[graph->edge_id({lo, 2}, {hi, 2})] = odd + 1;
  }
  for (Index i = 1; i <= m; ++i) labels[graph->edge_id({i, 1}, {i, 2})] = 2 * m + i;
  return Labeling(std::move(graph), std::move(labels));
}

Labeling label(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::path:
      return label_path(spec.m);
    case Family::cycle:
      return label_cycle(spec.m);
    case Family::prism:
      return spec.n >= 2 ? label_prism_general(spec.m, spec.n) : label_prism_two_layers(spec.m);
    case Family::lattice:
      break;
  }

  const Index m = spec.m;
  const Index n = spec.n;
  if (m == 1 && n == 1) {
    // (u1,v1), (u2,v1), (u1,v2), (u2,v2) play v1, v2, v3, v4 of C[4].
    const Labeling square = label_cycle(4);
    const Vertex as_cycle[3][3] = {{}, {{}, {1, 1}, {3, 1}}, {{}, {2, 1}, {4, 1}}};
    auto graph = shared_graph(spec);
    std::vector<Label> labels(graph->edge_count());
    for (EdgeId e = 0; e < graph->edge_count(); ++e) {
      const Edge& edge = graph->edge(e);
      labels[e] = square.label_of(as_cycle[edge.a.row][edge.a.col], as_cycle[edge.b.row][edge.b.col]);
    }
    return Labeling(std::move(graph), std::move(labels));
  }
  if (m > n) return transpose_onto(spec, label(make_spec(Family::lattice, n, m)));
  if (m == 1) return label_lattice_thin(n);
  return label_lattice_general(m, n);
}

}  // namespace antimagic
