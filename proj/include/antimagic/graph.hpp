#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antimagic {

using Index = std::int64_t;
using Label = std::int64_t;
using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Vertex (u_row, v_col) of a product graph, 1-based in both coordinates.
/// Path and cycle vertices live in column 1.
struct Vertex {
  Index row = 0;
  Index col = 0;

  auto operator<=>(const Vertex&) const = default;
};

std::string to_string(const Vertex& v);

/// Undirected edge with endpoints in canonical order (a < b lexicographically).
struct Edge {
  Vertex a;
  Vertex b;

  auto operator<=>(const Edge&) const = default;
};

/// Builds the canonical edge between two distinct vertices.
Edge make_edge(Vertex x, Vertex y);

/// Which Cartesian factor an edge belongs to: edges that change the row index
/// lie in copies of the first factor, edges that change the column index in
/// copies of the second.
enum class Factor { first, second };

inline Factor factor_of(const Edge& e) {
  return e.a.row != e.b.row ? Factor::first : Factor::second;
}

// ---------------------------------------------------------------------------
// Arrangements: the vertex naming of a path or cycle.

enum class ArrangementKind { consecutive_path, skip_path, skip_cycle };

std::string_view to_string(ArrangementKind kind);

struct IndexPair {
  Index lo = 0;
  Index hi = 0;

  bool operator==(const IndexPair&) const = default;
};

/// Constant-time view of an arrangement of `size` vertices.
///
/// Edge indices follow the listing order used by the labelings:
///   consecutive-path: k = 1..size-1 joins v_k v_{k+1};
///   skip-path:        k = 1..size-2 joins v_k v_{k+2}, k = size-1 joins v_{size-1} v_size;
///   skip-cycle:       k = 0 joins v_1 v_2, k = 1..size-2 joins v_k v_{k+2},
///                     k = size-1 joins v_{size-1} v_size.
/// A consecutive path of size 1 is the trivial axis of path and cycle graphs.
struct AxisLayout {
  ArrangementKind kind = ArrangementKind::consecutive_path;
  Index size = 1;

  Index edge_count() const;
  Index first_edge() const { return kind == ArrangementKind::skip_cycle ? 0 : 1; }
  Index last_edge() const { return first_edge() + edge_count() - 1; }
  bool has_edge(Index k) const { return k >= first_edge() && k <= last_edge(); }

  /// Endpoints of edge k, lo < hi.
  IndexPair edge(Index k) const;

  /// 1-based position of edge k along the Hamiltonian traversal that starts
  /// at v_1 (for cycles the closing edge v_1 v_2 comes last).
  Index edge_traversal_position(Index k) const;

  /// Calls f(neighbor_index, edge_index) for every neighbor of vertex i.
  template <class F>
  void for_each_neighbor(Index i, F&& f) const {
    switch (kind) {
      case ArrangementKind::consecutive_path:
        if (i > 1) f(i - 1, i - 1);
        if (i < size) f(i + 1, i);
        break;
      case ArrangementKind::skip_path:
        if (i >= 3) f(i - 2, i - 2);
        if (i + 2 <= size) f(i + 2, i);
        if (i == size - 1) f(size, size - 1);
        if (i == size && size >= 2) f(size - 1, size - 1);
        break;
      case ArrangementKind::skip_cycle:
        if (i >= 3) f(i - 2, i - 2);
        if (i + 2 <= size) f(i + 2, i);
        if (i == 1) f(2, 0);
        if (i == 2) f(1, 0);
        if (i == size - 1) f(size, size - 1);
        if (i == size) f(size - 1, size - 1);
        break;
    }
  }
};

/// Materialized arrangement: edge list in listing order plus the Hamiltonian
/// traversal starting at v_1.
struct Arrangement {
  ArrangementKind kind = ArrangementKind::consecutive_path;
  Index size = 0;
  Index first_edge_index = 1;
  std::vector<IndexPair> edges;   // edges[k - first_edge_index]
  std::vector<Index> traversal;   // traversal[p] = index visited at position p (0-based)
  std::vector<Index> position;    // position[i - 1] = p such that traversal[p] == i

  IndexPair edge(Index k) const { return edges.at(static_cast<std::size_t>(k - first_edge_index)); }
  Index edge_index(std::size_t listing_pos) const { return first_edge_index + static_cast<Index>(listing_pos); }
};

/// Throws InvalidParameter when size is below 2 (paths) or 3 (cycles).
Arrangement make_arrangement(ArrangementKind kind, Index size);

// ---------------------------------------------------------------------------
// Families

enum class Family { path, cycle, lattice, prism };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

/// path: P[m+1]; cycle: C[m]; lattice: P[m+1] x P[n+1]; prism: C[m] x P[n+1].
struct FamilySpec {
  Family family = Family::path;
  Index m = 0;
  Index n = 0;

  bool operator==(const FamilySpec&) const = default;
};

std::string to_string(const FamilySpec& spec);

/// Validated spec; n is normalized to 0 for paths and cycles.
FamilySpec make_spec(Family family, Index m, Index n = 0);
void validate(const FamilySpec& spec);

inline constexpr Index kMaxStreamDimension = Index{1} << 30;
inline constexpr Index kMaxMaterializedEdges = 100'000'000;

Index vertex_count(const FamilySpec& spec);
Index edge_count(const FamilySpec& spec);

/// Arrangements used on each axis. They are chosen to match the labeling the
/// family is dispatched to, so the same index names are used throughout.
struct GridShape {
  AxisLayout rows;
  AxisLayout cols;
};

GridShape grid_shape(const FamilySpec& spec);

// ---------------------------------------------------------------------------

/// Immutable undirected graph with sorted vertex and edge lists.
class Graph {
 public:
  /// Graph over the given edges; vertices are the union of endpoints.
  /// Throws InvalidParameter on loops or repeated edges.
  static Graph from_edges(std::vector<Edge> edges);

  const std::optional<FamilySpec>& spec() const { return spec_; }
  const std::optional<GridShape>& shape() const { return shape_; }

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Vertex& vertex(VertexId id) const { return vertices_[id]; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  /// Edge ids incident to a vertex, ascending.
  std::span<const EdgeId> incident(VertexId id) const;
  std::size_t degree(VertexId id) const { return incident(id).size(); }

  /// Endpoint ids of an edge.
  std::pair<VertexId, VertexId> endpoint_ids(EdgeId id) const { return endpoint_ids_[id]; }

  std::optional<VertexId> find_vertex(const Vertex& v) const;
  std::optional<EdgeId> find_edge(const Vertex& x, const Vertex& y) const;
  /// Like find_edge but throws InvalidParameter when absent.
  EdgeId edge_id(const Vertex& x, const Vertex& y) const;

 private:
  friend Graph build_graph(const FamilySpec& spec);

  Graph() = default;
  void index_structure();

  std::optional<FamilySpec> spec_;
  std::optional<GridShape> shape_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<VertexId, VertexId>> endpoint_ids_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> incidence_;
};

/// Cartesian-product graph of a family. Throws InvalidParameter on an invalid
/// spec and SizeLimitExceeded above kMaxMaterializedEdges.
Graph build_graph(const FamilySpec& spec);

/// Single-edge graph K_2 on (1,1)-(2,1).
Graph complete_graph_k2();

}  // namespace antimagic
