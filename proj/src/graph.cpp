#include "antimagic/graph.hpp"

#include <algorithm>
#include <sstream>

#include "antimagic/error.hpp"

namespace antimagic {

std::string to_string(const Vertex& v) {
  return std::to_string(v.row) + "," + std::to_string(v.col);
}

Edge make_edge(Vertex x, Vertex y) {
  if (x == y) throw InvalidParameter("edge endpoints coincide at " + to_string(x));
  if (y < x) std::swap(x, y);
  return Edge{x, y};
}

std::string_view to_string(ArrangementKind kind) {
  switch (kind) {
    case ArrangementKind::consecutive_path: return "consecutive-path";
    case ArrangementKind::skip_path: return "skip-path";
    case ArrangementKind::skip_cycle: return "skip-cycle";
  }
  return "?";
}

Index AxisLayout::edge_count() const {
  return kind == ArrangementKind::skip_cycle ? size : size - 1;
}

IndexPair AxisLayout::edge(Index k) const {
  if (!has_edge(k)) {
    throw InvalidParameter("edge index " + std::to_string(k) + " outside " +
                           std::string(to_string(kind)) + " of size " + std::to_string(size));
  }
  switch (kind) {
    case ArrangementKind::consecutive_path:
      return {k, k + 1};
    case ArrangementKind::skip_path:
      return k == size - 1 ? IndexPair{size - 1, size} : IndexPair{k, k + 2};
    case ArrangementKind::skip_cycle:
      if (k == 0) return {1, 2};
      return k == size - 1 ? IndexPair{size - 1, size} : IndexPair{k, k + 2};
  }
  return {};
}

Index AxisLayout::edge_traversal_position(Index k) const {
  if (!has_edge(k)) throw InvalidParameter("edge index out of range");
  if (kind == ArrangementKind::consecutive_path) return k;
  // Skip arrangements walk the odd indices upwards, cross over on the
  // v_{size-1} v_size edge, then walk the even indices back down.
  const Index odd_count = (size + 1) / 2;
  const Index top_even = size % 2 == 0 ? size : size - 1;
  if (kind == ArrangementKind::skip_cycle && k == 0) return size;
  if (k == size - 1) return odd_count;
  if (k % 2 == 1) return (k + 1) / 2;
  return odd_count + 1 + (top_even - 2 - k) / 2;
}

Arrangement make_arrangement(ArrangementKind kind, Index size) {
  const Index minimum = kind == ArrangementKind::skip_cycle ? 3 : 2;
  if (size < minimum) {
    throw InvalidParameter(std::string(to_string(kind)) + " needs at least " +
                           std::to_string(minimum) + " vertices, got " + std::to_string(size));
  }
  Arrangement arr;
  arr.kind = kind;
  arr.size = size;
  const AxisLayout layout{kind, size};
  arr.first_edge_index = layout.first_edge();
  for (Index k = layout.first_edge(); k <= layout.last_edge(); ++k) arr.edges.push_back(layout.edge(k));

  // Walk the edge list from v_1. For cycles the first step avoids v_1 v_2 so
  // that edge closes the tour.
  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(size + 1));
  for (const auto& [lo, hi] : arr.edges) {
    adj[lo].push_back(hi);
    adj[hi].push_back(lo);
  }
  std::vector<bool> seen(static_cast<std::size_t>(size + 1), false);
  Index current = 1;
  seen[1] = true;
  arr.traversal.push_back(1);
  while (static_cast<Index>(arr.traversal.size()) < size) {
    Index next = 0;
    for (Index nb : adj[current]) {
      if (seen[nb]) continue;
      if (kind == ArrangementKind::skip_cycle && current == 1 && nb == 2) continue;
      next = nb;
      break;
    }
    if (next == 0) throw std::logic_error("arrangement is not traceable");
    seen[next] = true;
    arr.traversal.push_back(next);
    current = next;
  }
  arr.position.assign(static_cast<std::size_t>(size), 0);
  for (std::size_t p = 0; p < arr.traversal.size(); ++p) {
    arr.position[static_cast<std::size_t>(arr.traversal[p] - 1)] = static_cast<Index>(p);
  }
  return arr;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::lattice: return "lattice";
    case Family::prism: return "prism";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "lattice") return Family::lattice;
  if (name == "prism") return Family::prism;
  return std::nullopt;
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream out;
  out << to_string(spec.family) << " m=" << spec.m;
  if (spec.family == Family::lattice || spec.family == Family::prism) out << " n=" << spec.n;
  return out.str();
}

void validate(const FamilySpec& spec) {
  auto fail = [&](const std::string& why) {
    throw InvalidParameter(to_string(spec) + ": " + why);
  };
  switch (spec.family) {
    case Family::path:
      if (spec.m < 2) fail("path needs m >= 2 (P[2] is K_2)");
      break;
    case Family::cycle:
      if (spec.m < 3) fail("cycle needs m >= 3");
      break;
    case Family::lattice:
      if (spec.m < 1 || spec.n < 1) fail("lattice needs m, n >= 1");
      break;
    case Family::prism:
      if (spec.m < 3 || spec.n < 1) fail("prism needs m >= 3 and n >= 1");
      break;
  }
  if (spec.m > kMaxStreamDimension || spec.n > kMaxStreamDimension) fail("dimension above 2^30");
}

FamilySpec make_spec(Family family, Index m, Index n) {
  FamilySpec spec{family, m, n};
  if (family == Family::path || family == Family::cycle) spec.n = 0;
  validate(spec);
  return spec;
}

Index vertex_count(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path: return spec.m + 1;
    case Family::cycle: return spec.m;
    case Family::lattice: return (spec.m + 1) * (spec.n + 1);
    case Family::prism: return spec.m * (spec.n + 1);
  }
  return 0;
}

Index edge_count(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path: return spec.m;
    case Family::cycle: return spec.m;
    case Family::lattice: return 2 * spec.m * spec.n + spec.m + spec.n;
    case Family::prism: return 2 * spec.m * spec.n + spec.m;
  }
  return 0;
}

GridShape grid_shape(const FamilySpec& spec) {
  using K = ArrangementKind;
  const Index m = spec.m;
  const Index n = spec.n;
  switch (spec.family) {
    case Family::path:
      return {{K::skip_path, m + 1}, {K::consecutive_path, 1}};
    case Family::cycle:
      return {{K::skip_cycle, m}, {K::consecutive_path, 1}};
    case Family::prism:
      return {{K::skip_cycle, m}, {K::skip_path, n + 1}};
    case Family::lattice:
      if (m == 1 && n == 1) return {{K::consecutive_path, 2}, {K::consecutive_path, 2}};
      // General case: the shorter factor is skip-named, the longer consecutive.
      // Thin case: the long factor is skip-named.
      if (n >= m && m >= 2) return {{K::skip_path, m + 1}, {K::consecutive_path, n + 1}};
      if (m > n && n >= 2) return {{K::consecutive_path, m + 1}, {K::skip_path, n + 1}};
      if (m == 1) return {{K::consecutive_path, 2}, {K::skip_path, n + 1}};
      return {{K::skip_path, m + 1}, {K::consecutive_path, 2}};
  }
  return {};
}

// ---------------------------------------------------------------------------

void Graph::index_structure() {
  endpoint_ids_.resize(edges_.size());
  std::vector<std::size_t> degree(vertices_.size(), 0);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto a = find_vertex(edges_[e].a);
    const auto b = find_vertex(edges_[e].b);
    endpoint_ids_[e] = {*a, *b};
    ++degree[*a];
    ++degree[*b];
  }
  offsets_.assign(vertices_.size() + 1, 0);
  for (VertexId v = 0; v < vertices_.size(); ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  incidence_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    incidence_[fill[endpoint_ids_[e].first]++] = e;
    incidence_[fill[endpoint_ids_[e].second]++] = e;
  }
}

Graph Graph::from_edges(std::vector<Edge> edges) {
  Graph g;
  for (auto& e : edges) e = make_edge(e.a, e.b);
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidParameter("repeated edge " + to_string(dup->a) + " -- " + to_string(dup->b));
  }
  for (const auto& e : edges) {
    g.vertices_.push_back(e.a);
    g.vertices_.push_back(e.b);
  }
  std::sort(g.vertices_.begin(), g.vertices_.end());
  g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());
  g.edges_ = std::move(edges);
  g.index_structure();
  return g;
}

std::span<const EdgeId> Graph::incident(VertexId id) const {
  return std::span<const EdgeId>(incidence_).subspan(offsets_[id], offsets_[id + 1] - offsets_[id]);
}

std::optional<VertexId> Graph::find_vertex(const Vertex& v) const {
  if (shape_) {
    if (v.row < 1 || v.row > shape_->rows.size || v.col < 1 || v.col > shape_->cols.size) return std::nullopt;
    return static_cast<VertexId>((v.row - 1) * shape_->cols.size + (v.col - 1));
  }
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<EdgeId> Graph::find_edge(const Vertex& x, const Vertex& y) const {
  if (x == y) return std::nullopt;
  const Edge key = make_edge(x, y);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

EdgeId Graph::edge_id(const Vertex& x, const Vertex& y) const {
  auto id = find_edge(x, y);
  if (!id) throw InvalidParameter("no edge " + to_string(x) + " -- " + to_string(y));
  return *id;
}

Graph build_graph(const FamilySpec& spec) {
  validate(spec);
  if (edge_count(spec) > kMaxMaterializedEdges) {
    throw SizeLimitExceeded(to_string(spec) + " has " + std::to_string(edge_count(spec)) +
                            " edges; materialized graphs are limited to " +
                            std::to_string(kMaxMaterializedEdges) + " (use the streaming path)");
  }
  Graph g;
  g.spec_ = spec;
  g.shape_ = grid_shape(spec);
  const AxisLayout& rows = g.shape_->rows;
  const AxisLayout& cols = g.shape_->cols;

  g.vertices_.reserve(static_cast<std::size_t>(rows.size * cols.size));
  for (Index i = 1; i <= rows.size; ++i) {
    for (Index j = 1; j <= cols.size; ++j) g.vertices_.push_back({i, j});
  }
  g.edges_.reserve(static_cast<std::size_t>(edge_count(spec)));
  for (Index i = 1; i <= rows.size; ++i) {
    for (Index j = 1; j <= cols.size; ++j) {
      cols.for_each_neighbor(j, [&](Index j2, Index) {
        if (j2 > j) g.edges_.push_back({{i, j}, {i, j2}});
      });
      rows.for_each_neighbor(i, [&](Index i2, Index) {
        if (i2 > i) g.edges_.push_back({{i, j}, {i2, j}});
      });
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.index_structure();
  return g;
}

Graph complete_graph_k2() {
  return Graph::from_edges({Edge{{1, 1}, {2, 1}}});
}

}  // namespace antimagic
