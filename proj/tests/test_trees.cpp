#include <gtest/gtest.h>

#include <random>

#include "support/graphs.hpp"
#include "support/oracles.hpp"
#include "trinity/random_graphs.hpp"
#include "trinity/trees.hpp"

using namespace trinity;

namespace {

// Kirchhoff: any cofactor of the graph Laplacian.
Integer kirchhoff(const PlanarMap& m) {
  const std::size_t n = m.vertex_count();
  oracle::IntMat lap(n, std::vector<long>(n, 0));
  for (auto [a, b] : m.edge_list()) {
    ++lap[a][a], ++lap[b][b];
    --lap[a][b], --lap[b][a];
  }
  oracle::IntMat minor;
  for (std::size_t i = 1; i < n; ++i) minor.emplace_back(lap[i].begin() + 1, lap[i].end());
  return oracle::laplace_det(minor);
}

std::vector<IntVec> oracle_hypertrees(const Trinity& t, Hypergraph h) {
  ColourGraph g = colour_graph(t, h.graph_colour());
  std::vector<std::pair<int, int>> xy;
  for (auto [a, b] : g.map.edge_list()) {
    VertexRef ra = g.vertex_ref(a), rb = g.vertex_ref(b);
    if (ra.colour != h.vertices) std::swap(ra, rb);
    xy.emplace_back(ra.index, rb.index);
  }
  auto s = oracle::hypertrees(t.count(h.vertices), t.count(h.hyperedges), xy);
  return {s.begin(), s.end()};
}

void check_trees(const Trinity& t) {
  const PlanarMap& m = t.source();
  auto trees = enumerate_spanning_trees(m);
  ASSERT_EQ(Integer(static_cast<unsigned long>(trees.size())), kirchhoff(m));
  ASSERT_TRUE(std::is_sorted(trees.begin(), trees.end()));
  ASSERT_TRUE(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
  PlanarMap dual = planar_dual(m);
  for (auto& tr : trees) {
    ASSERT_TRUE(is_spanning_tree(m.vertex_count(), m.edge_list(), tr));
    ASSERT_TRUE(is_spanning_tree(dual.vertex_count(), dual.edge_list(), dual_tree(m, tr)));
  }
  for (const auto& h : all_hypergraphs()) {
    ASSERT_EQ(hypertree_set(t, h).points(), oracle_hypertrees(t, h)) << h.name();
  }
  for (Colour c : {Colour::Violet, Colour::Emerald, Colour::Red}) {
    DirectedDual d = directed_dual(t, c);
    for (int r = 0; r < static_cast<int>(d.vertex_count); ++r) {
      auto arbs = enumerate_arborescences(d, r);
      ASSERT_EQ(Integer(static_cast<unsigned long>(arbs.size())), count_arborescences(d, r));
      for (auto& a : arbs) ASSERT_EQ(a.arcs.size() + 1, d.vertex_count);
    }
  }
}

}  // namespace

TEST(SpanningTrees, G1WorkedHypertrees) {
  Trinity t = fixtures::g1().trinity();
  EXPECT_EQ(hypertree_set(t, {Colour::Violet, Colour::Emerald}).points(), (std::vector<IntVec>{{1, 1}, {2, 0}}));
  EXPECT_EQ(hypertree_set(t, {Colour::Emerald, Colour::Violet}).points(), (std::vector<IntVec>{{0, 0, 1}, {0, 1, 0}}));
  EXPECT_EQ(enumerate_spanning_trees(t.source()).size(), 4u);  // one 4-cycle
}

TEST(SpanningTrees, LexicographicOrderOnSquare) {
  auto trees = enumerate_spanning_trees(fixtures::square().map());
  ASSERT_EQ(trees.size(), 4u);
  EXPECT_EQ(trees.front().edges, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(trees.back().edges, (std::vector<int>{1, 2, 3}));
}

TEST(SpanningTrees, FixturesAgainstOracles) {
  for (auto g : {fixtures::g1(), fixtures::eleven_edge(), fixtures::square(), fixtures::single_edge(), fixtures::path3()})
    check_trees(g.trinity());
}

TEST(SpanningTrees, RandomGraphsAgainstOracles) {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 80; ++i) {
    SCOPED_TRACE(i);
    check_trees(load_trinity(random_plane_bipartite(rng)));
  }
}

TEST(Arborescences, MapToHypertreesBijectively) {
  Trinity t = fixtures::eleven_edge().trinity();
  for (Colour c : {Colour::Violet, Colour::Emerald, Colour::Red}) {
    DirectedDual d = directed_dual(t, c);
    auto arbs = enumerate_arborescences(d, t.root_vertex(c).index);
    auto [x, y] = colour_classes(c);
    for (Colour side : {x, y}) {
      std::set<IntVec> image;
      for (auto& a : arbs) image.insert(arborescence_to_hypertree(t, c, a, side));
      EXPECT_EQ(image.size(), arbs.size());
      LatticeSet expect = hypertree_set(t, {side == x ? y : x, side});
      EXPECT_EQ(std::vector<IntVec>(image.begin(), image.end()), expect.points());
    }
  }
}

TEST(Arborescences, BadRootIsRejected) {
  Trinity t = fixtures::g1().trinity();
  EXPECT_THROW(count_arborescences(directed_dual(t, Colour::Red), 7), Error);
  EXPECT_THROW(enumerate_arborescences(directed_dual(t, Colour::Red), -1), Error);
}
