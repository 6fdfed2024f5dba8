#include <gtest/gtest.h>

#include <random>

#include "support/graphs.hpp"
#include "support/oracles.hpp"
#include "trinity/polytopes.hpp"
#include "trinity/random_graphs.hpp"

using namespace trinity;

namespace {

const Hypergraph VE{Colour::Violet, Colour::Emerald}, EV{Colour::Emerald, Colour::Violet};

std::vector<IntVec> pts(std::initializer_list<IntVec> xs) {
  std::vector<IntVec> v(xs);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::vector<long>> int_vertices(const VPolytope& p) {
  std::vector<std::vector<long>> out;
  for (auto& v : p.vertices()) out.push_back(to_int(v));
  return out;
}

std::vector<RatVec> scaled(const VPolytope& p, long k) {
  std::vector<RatVec> out;
  for (auto v : p.vertices()) {
    for (auto& x : v) x *= k;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// (d+1) * barycentre of simplex s, and (d+1) * the vertices of simplex t
bool barycentre_inside(const std::vector<std::vector<long>>& s, const std::vector<std::vector<long>>& t) {
  const long k = static_cast<long>(s.size());
  std::vector<long> c(s[0].size(), 0);
  for (auto& v : s)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += v[i];
  std::vector<std::vector<long>> tt = t;
  for (auto& v : tt)
    for (auto& x : v) x *= k;
  return oracle::in_simplex(tt, c);
}

void check_polytopes(const Trinity& t, const Integer& magic) {
  for (const auto& h : all_hypergraphs()) {
    LatticePolytope gp = gp_polytope(t, h);
    HypergraphData hd = hypergraph_data(t, h);
    auto want = oracle::gp_lattice(hd.vertex_count, hd.hyperedges);
    ASSERT_EQ(gp.lattice.points(), std::vector<IntVec>(want.begin(), want.end())) << h.name();
    LatticePolytope tr = trimmed_gp(t, h);
    ASSERT_EQ(tr.lattice, hypertree_set(t, transpose(h))) << h.name();
  }
  for (Colour c : {Colour::Violet, Colour::Emerald, Colour::Red}) {
    ColourGraph g = colour_graph(t, c);
    Colour u = default_hyperedge_class(c), x = other_class(g, u);
    RootPolytope r = root_polytope(g, u);
    ASSERT_EQ(r.polytope.affine_dim(), static_cast<int>(r.m + r.n) - 2);
    ASSERT_EQ(placing_volume(r), magic);
    ASSERT_EQ(scaled(cayley_slice(r, SliceSide::U), -static_cast<long>(r.m)), gp_polytope(t, {x, u}).polytope.vertices());
    ASSERT_EQ(scaled(cayley_slice(r, SliceSide::V), static_cast<long>(r.n)), gp_polytope(t, {u, x}).polytope.vertices());
    std::optional<Laurent1> h0;
    for (int root = 0; root < static_cast<int>(t.count(c)); ++root) {
      Triangulation tri = arborescence_triangulation(t, c, root);
      ASSERT_EQ(Integer(static_cast<unsigned long>(tri.simplices.size())), magic);
      std::vector<std::vector<std::vector<long>>> simp;
      for (auto& s : tri.simplices) {
        std::vector<std::vector<long>> vs;
        for (int e : s.tree.edges) vs.push_back(to_int(r.edge_points[e]));
        ASSERT_EQ(oracle::simplex_volume(vs), 1);
        simp.push_back(vs);
      }
      // interiors are pairwise disjoint
      for (std::size_t i = 0; i < simp.size(); ++i)
        for (std::size_t j = 0; j < simp.size(); ++j)
          if (i != j) {
            ASSERT_FALSE(barycentre_inside(simp[i], simp[j]));
          }
      Laurent1 h = h_vector(tri);
      ASSERT_EQ(h.evaluate_at_one(), magic);
      ASSERT_EQ(h.coeff(0), 0);  // a triangulated ball has reduced Euler characteristic 0
      for (auto& [e, k] : h.terms()) ASSERT_GT(k, 0);
      if (h0) {
        ASSERT_EQ(*h0, h);
      }
      h0 = h;
    }
  }
}

}  // namespace

TEST(Polytopes, G1GeneralizedPermutohedra) {
  Trinity t = fixtures::g1().trinity();
  LatticePolytope gp = gp_polytope(t, VE);
  EXPECT_EQ(int_vertices(gp.polytope), (std::vector<std::vector<long>>{{0, 0, 2}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(gp.lattice.points(), pts({{1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}));
  EXPECT_EQ(gp.polytope.affine_dim(), 2);
  EXPECT_EQ(trimmed_gp(t, VE).lattice.points(), pts({{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(hypertree_set(t, VE).points(), pts({{2, 0}, {1, 1}}));
  EXPECT_EQ(gp_polytope(t, EV).lattice.points(), pts({{3, 0}, {2, 1}, {1, 2}}));
  EXPECT_EQ(trimmed_gp(t, EV).lattice.points(), pts({{2, 0}, {1, 1}}));
  EXPECT_EQ(gp_polytope(t, {Colour::Emerald, Colour::Red}).lattice.points(), pts({{2, 0}, {1, 1}, {0, 2}}));
}

TEST(Polytopes, G1LatticePointsByCaratheodory) {
  Trinity t = fixtures::g1().trinity();
  for (const auto& h : all_hypergraphs()) {
    LatticePolytope gp = gp_polytope(t, h);
    auto want = oracle::lattice_points(int_vertices(gp.polytope));
    EXPECT_EQ(gp.lattice.points(), std::vector<IntVec>(want.begin(), want.end())) << h.name();
  }
}

TEST(Polytopes, G1RootPolytope) {
  Trinity t = fixtures::g1().trinity();
  RootPolytope r = root_polytope(colour_graph(t, Colour::Red), Colour::Emerald);
  EXPECT_EQ(r.polytope.vertices().size(), 5u);
  EXPECT_EQ(r.polytope.affine_dim(), 3);
  EXPECT_EQ(r.lattice.size(), 5u);  // only the vertices
  EXPECT_EQ(placing_volume(r), 2);
  // slices are -1/2 P(V,E) and 1/3 P(E,V)
  EXPECT_EQ(scaled(cayley_slice(r, SliceSide::U), -2), gp_polytope(t, VE).polytope.vertices());
  EXPECT_EQ(scaled(cayley_slice(r, SliceSide::V), 3), gp_polytope(t, EV).polytope.vertices());
}

TEST(Polytopes, G1TriangulationsPerRoot) {
  Trinity t = fixtures::g1().trinity();
  ASSERT_EQ(t.outer_face(), 0);
  auto trees = [&](int root) {
    std::set<std::vector<int>> out;
    for (auto& s : arborescence_triangulation(t, Colour::Red, root).simplices) out.insert(s.tree.edges);
    return out;
  };
  // outer red vertex: trees {0,2,3,4} and {0,1,2,3}; inner one: {0,1,3,4} and {0,1,2,4}
  EXPECT_EQ(trees(0), (std::set<std::vector<int>>{{0, 2, 3, 4}, {0, 1, 2, 3}}));
  EXPECT_EQ(trees(1), (std::set<std::vector<int>>{{0, 1, 3, 4}, {0, 1, 2, 4}}));
  for (int root : {0, 1}) {
    Triangulation tri = arborescence_triangulation(t, Colour::Red, root);
    EXPECT_EQ(f_vector(tri), Laurent1::from_ascending({2, 7, 9, 5, 1}));
    EXPECT_EQ(h_vector(tri), Laurent1::from_ascending({0, 0, 0, 1, 1}));
  }
}

TEST(Polytopes, G1Reflections) {
  DualityRecord d = verify_duality_suite(fixtures::g1().trinity());
  EXPECT_TRUE(d.all_hold());
  ASSERT_EQ(d.reflections.size(), 3u);
  EXPECT_EQ(*d.reflections[0].centre, (IntVec{2, 1}));
  EXPECT_EQ(*d.reflections[1].centre, (IntVec{0, 1, 1}));
  EXPECT_EQ(*d.reflections[2].centre, (IntVec{2, 1}));
}

TEST(Polytopes, FixturesAgainstOracles) {
  check_polytopes(fixtures::g1().trinity(), 2);
  check_polytopes(fixtures::single_edge().trinity(), 1);
  check_polytopes(fixtures::square().trinity(), 2);
  check_polytopes(fixtures::eleven_edge().trinity(), 11);
}

TEST(Polytopes, RandomGraphsAgainstOracles) {
  std::mt19937_64 rng(1618);
  for (int i = 0; i < 40; ++i) {
    SCOPED_TRACE(i);
    Trinity t = load_trinity(random_plane_bipartite(rng, {6, 100000}));
    Integer magic = Integer(static_cast<unsigned long>(hypertree_set(t, VE).size()));
    check_polytopes(t, magic);
    ASSERT_TRUE(verify_duality_suite(t).all_hold());
  }
}

TEST(Polytopes, SingleEdgeIsAPoint) {
  Trinity t = fixtures::single_edge().trinity();
  for (const auto& h : all_hypergraphs()) {
    EXPECT_EQ(gp_polytope(t, h).polytope.vertices().size(), 1u);
    EXPECT_EQ(trimmed_gp(t, h).lattice.size(), 1u);
  }
}

TEST(Polytopes, TreeSimplexRejectsNonTrees) {
  Trinity t = fixtures::g1().trinity();
  RootPolytope r = root_polytope(colour_graph(t, Colour::Red), Colour::Emerald);
  // edges 1..4 contain the 4-cycle
  EXPECT_THROW(tree_simplex(r, SpanningTree{{1, 2, 3, 4}}), Error);
}
