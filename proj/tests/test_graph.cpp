#include <algorithm>
#include <set>

#include "antimagic/error.hpp"
#include "antimagic/graph.hpp"
#include "doctest.h"

using namespace antimagic;

namespace {

std::vector<IndexPair> edges_of(const Arrangement& a) { return a.edges; }

std::vector<Index> one_based(std::initializer_list<Index> xs) { return xs; }

}  // namespace

TEST_CASE("skip-path on six vertices") {
  const Arrangement a = make_arrangement(ArrangementKind::skip_path, 6);
  CHECK(edges_of(a) == std::vector<IndexPair>{{1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 6}});
  CHECK(a.traversal == one_based({1, 3, 5, 6, 4, 2}));
}

TEST_CASE("skip-cycle on five vertices closes through v1v2") {
  const Arrangement a = make_arrangement(ArrangementKind::skip_cycle, 5);
  CHECK(a.first_edge_index == 0);
  CHECK(edges_of(a) == std::vector<IndexPair>{{1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}});
  CHECK(a.traversal == one_based({1, 3, 5, 4, 2}));
}

TEST_CASE("consecutive path keeps the identity traversal") {
  const Arrangement a = make_arrangement(ArrangementKind::consecutive_path, 4);
  CHECK(edges_of(a) == std::vector<IndexPair>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(a.traversal == one_based({1, 2, 3, 4}));
}

TEST_CASE("arrangements reject degenerate sizes") {
  CHECK_THROWS_AS(make_arrangement(ArrangementKind::skip_path, 1), InvalidParameter);
  CHECK_THROWS_AS(make_arrangement(ArrangementKind::skip_cycle, 2), InvalidParameter);
}

TEST_CASE("traversals are Hamiltonian and follow listed edges") {
  for (auto kind : {ArrangementKind::consecutive_path, ArrangementKind::skip_path, ArrangementKind::skip_cycle}) {
    const Index lo = kind == ArrangementKind::skip_cycle ? 3 : 2;
    for (Index size = lo; size <= 40; ++size) {
      CAPTURE(size);
      const Arrangement a = make_arrangement(kind, size);
      std::set<Index> seen(a.traversal.begin(), a.traversal.end());
      CHECK(seen.size() == static_cast<std::size_t>(size));
      auto listed = [&](Index x, Index y) {
        const IndexPair p{std::min(x, y), std::max(x, y)};
        return std::find(a.edges.begin(), a.edges.end(), p) != a.edges.end();
      };
      for (std::size_t p = 0; p + 1 < a.traversal.size(); ++p) CHECK(listed(a.traversal[p], a.traversal[p + 1]));
      if (kind == ArrangementKind::skip_cycle) CHECK(listed(a.traversal.back(), a.traversal.front()));
    }
  }
}

TEST_CASE("axis layout agrees with the materialized arrangement") {
  for (auto kind : {ArrangementKind::consecutive_path, ArrangementKind::skip_path, ArrangementKind::skip_cycle}) {
    const Index lo = kind == ArrangementKind::skip_cycle ? 3 : 2;
    for (Index size = lo; size <= 30; ++size) {
      CAPTURE(size);
      const AxisLayout axis{kind, size};
      const Arrangement a = make_arrangement(kind, size);
      REQUIRE(axis.edge_count() == static_cast<Index>(a.edges.size()));
      for (Index k = axis.first_edge(); k <= axis.last_edge(); ++k) {
        CHECK(axis.edge(k) == a.edge(k));
        // position of the edge = min traversal position of its endpoints, +1,
        // except a cycle's closing edge which is last
        const IndexPair e = a.edge(k);
        const Index pa = a.position[static_cast<std::size_t>(e.lo - 1)];
        const Index pb = a.position[static_cast<std::size_t>(e.hi - 1)];
        const Index expected = std::abs(pa - pb) == 1 ? std::min(pa, pb) + 1 : size;
        CHECK(axis.edge_traversal_position(k) == expected);
      }
      for (Index i = 1; i <= size; ++i) {
        axis.for_each_neighbor(i, [&](Index nb, Index k) {
          const IndexPair e = axis.edge(k);
          CHECK(((e.lo == i && e.hi == nb) || (e.hi == i && e.lo == nb)));
        });
      }
    }
  }
}

TEST_CASE("product sizes") {
  CHECK(vertex_count(make_spec(Family::lattice, 3, 7)) == 32);
  CHECK(edge_count(make_spec(Family::lattice, 3, 7)) == 52);
  CHECK(vertex_count(make_spec(Family::prism, 5, 3)) == 20);
  CHECK(edge_count(make_spec(Family::prism, 5, 3)) == 35);
  const Graph square = build_graph(make_spec(Family::lattice, 1, 1));
  CHECK(square.vertex_count() == 4);
  CHECK(square.edge_count() == 4);
  for (VertexId v = 0; v < 4; ++v) CHECK(square.degree(v) == 2);
}

TEST_CASE("edge counts match the closed forms by counting") {
  for (Index m = 1; m <= 12; ++m) {
    for (Index n = 1; n <= 12; ++n) {
      const FamilySpec lat = make_spec(Family::lattice, m, n);
      const Graph g = build_graph(lat);
      CHECK(static_cast<Index>(g.edge_count()) == 2 * m * n + m + n);
      CHECK(static_cast<Index>(g.vertex_count()) == (m + 1) * (n + 1));
      if (m >= 3) {
        const Graph p = build_graph(make_spec(Family::prism, m, n));
        CHECK(static_cast<Index>(p.edge_count()) == 2 * m * n + m);
        for (VertexId v = 0; v < p.vertex_count(); ++v) {
          const Index col = p.vertex(v).col;
          // skip naming: the path ends are v1 and v2
          CHECK(p.degree(v) == (col <= 2 ? 3u : 4u));
        }
      }
    }
  }
}

TEST_CASE("build_graph is deterministic") {
  const FamilySpec spec = make_spec(Family::prism, 7, 4);
  const Graph a = build_graph(spec);
  const Graph b = build_graph(spec);
  CHECK(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
}

TEST_CASE("product edges join vertices differing in one coordinate") {
  const Graph g = build_graph(make_spec(Family::lattice, 4, 5));
  for (const Edge& e : g.edges()) {
    CHECK(e.a < e.b);
    CHECK(((e.a.row == e.b.row) != (e.a.col == e.b.col)));
  }
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(make_spec(Family::path, 1), InvalidParameter);
  CHECK_THROWS_AS(make_spec(Family::cycle, 2), InvalidParameter);
  CHECK_THROWS_AS(make_spec(Family::lattice, 0, 3), InvalidParameter);
  CHECK_THROWS_AS(make_spec(Family::prism, 2, 3), InvalidParameter);
  CHECK_THROWS_AS(make_spec(Family::prism, 3, 0), InvalidParameter);
  CHECK_THROWS_AS(build_graph(make_spec(Family::lattice, 20000, 20000)), SizeLimitExceeded);
}

TEST_CASE("from_edges rejects loops and repeats") {
  CHECK_THROWS_AS(Graph::from_edges({{{1, 1}, {1, 1}}}), InvalidParameter);
  CHECK_THROWS_AS(Graph::from_edges({make_edge({1, 1}, {2, 1}), make_edge({2, 1}, {1, 1})}), InvalidParameter);
}

TEST_CASE("lookups") {
  const Graph g = build_graph(make_spec(Family::prism, 5, 3));
  CHECK(g.find_edge({1, 1}, {1, 3}).has_value());
  CHECK(g.find_edge({1, 3}, {1, 1}) == g.find_edge({1, 1}, {1, 3}));
  CHECK_FALSE(g.find_edge({1, 1}, {1, 2}).has_value());
  CHECK_FALSE(g.find_vertex({6, 1}).has_value());
  CHECK_THROWS_AS(g.edge_id({1, 1}, {1, 2}), InvalidParameter);
  const Graph k2 = complete_graph_k2();
  CHECK(k2.edge_count() == 1);
  CHECK(k2.vertex_count() == 2);
}
