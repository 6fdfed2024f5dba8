#include <gtest/gtest.h>

#include <random>

#include "support/graphs.hpp"
#include "support/oracles.hpp"
#include "trinity/homfly_check.hpp"
#include "trinity/random_graphs.hpp"

using namespace trinity;

namespace {

Laurent2 m(int ev, int ez, long c = 1) { return Laurent2::monomial(ev, ez, c); }

LinkDiagram trefoil() { return parse_pd("X(1,5,2,4) +\nX(3,1,4,6) +\nX(5,3,6,2) +\n"); }
LinkDiagram figure_eight() { return parse_pd("X(4,2,5,1) +\nX(8,6,1,5) +\nX(6,3,7,4) -\nX(2,7,3,8) -\n"); }

int max_label(const LinkDiagram& d) {
  int mx = 0;
  for (auto& c : d.crossings)
    for (int a : c.arcs) mx = std::max(mx, a);
  return mx;
}

// slot of arc a at which it enters a crossing
std::pair<std::size_t, int> head_of(const LinkDiagram& d, int a) {
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    for (int s = 0; s < 4; ++s)
      if (d.crossings[i].arcs[s] == a && d.crossings[i].incoming(s)) return {i, s};
  throw std::logic_error("arc has no head");
}

// Reidemeister I: arc a runs into a fresh crossing, loops once, then continues as y.
LinkDiagram add_kink(LinkDiagram d, int a, int sign) {
  const int x = max_label(d) + 1, y = x + 1;
  auto [i, s] = head_of(d, a);
  d.crossings[i].arcs[s] = y;
  d.crossings.push_back(sign > 0 ? Crossing{{a, y, x, x}, 1} : Crossing{{a, x, x, y}, -1});
  return d;
}

LinkDiagram relabel(const LinkDiagram& d, std::mt19937_64& rng) {
  const int n = max_label(d);
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  LinkDiagram r = d;
  for (auto& c : r.crossings)
    for (int& a : c.arcs) a = perm[a] + 100;
  std::shuffle(r.crossings.begin(), r.crossings.end(), rng);
  return r;
}

LinkDiagram shifted(LinkDiagram d, int k) {
  for (auto& c : d.crossings)
    for (int& a : c.arcs) a += k;
  return d;
}

LinkDiagram disjoint(const LinkDiagram& a, const LinkDiagram& b) {
  LinkDiagram r = a;
  LinkDiagram s = shifted(b, max_label(a));
  r.crossings.insert(r.crossings.end(), s.crossings.begin(), s.crossings.end());
  r.free_loops += b.free_loops;
  return r;
}

// cut arc 1 of each and cross-connect the ends
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b) {
  const int k = max_label(a);
  LinkDiagram r = disjoint(a, b);
  auto [i, s] = head_of(r, 1);
  auto [j, t] = head_of(r, 1 + k);
  r.crossings[i].arcs[s] = 1 + k;
  r.crossings[j].arcs[t] = 1;
  return r;
}

// two vertices joined by n parallel edges
fixtures::PlaneGraph parallel_edges(int n) {
  fixtures::PlaneGraph g;
  g.violet = {"v"};
  g.emerald = {"e"};
  g.violet_rot.resize(1);
  g.emerald_rot.resize(1);
  for (int k = 0; k < n; ++k) {
    g.edges.emplace_back(0, 0);
    g.violet_rot[0].push_back(k);
    g.emerald_rot[0].insert(g.emerald_rot[0].begin(), k);
  }
  return g;
}

LinkDiagram median_of(const Trinity& t) { return median_diagram(t.source(), t.source_bipartition()); }

void check_parity(const Laurent2& p, std::size_t components) {
  for (auto& [k, c] : p.terms()) ASSERT_EQ(((k.second % 2) + 2) % 2, static_cast<int>((components - 1) % 2));
}

}  // namespace

TEST(Homfly, Unknots) {
  LinkDiagram u;
  u.free_loops = 1;
  EXPECT_EQ(homfly(u), Laurent2::one());
  u.free_loops = 2;
  EXPECT_EQ(homfly(u), m(-1, -1) - m(1, -1));
  EXPECT_EQ(homfly(parse_pd("X(1,1,2,2) +\n")), Laurent2::one());
  EXPECT_EQ(homfly(parse_pd("X(1,2,2,1) -\n")), Laurent2::one());
}

TEST(Homfly, KnownKnots) {
  const Laurent2 tre = m(2, 0, 2) - m(4, 0) + m(2, 2);
  EXPECT_EQ(homfly(trefoil()), tre);
  EXPECT_EQ(homfly(mirror(trefoil())), tre.mirrored());
  EXPECT_NE(tre, tre.mirrored());
  const Laurent2 fig8 = m(-2, 0) - m(0, 0) + m(2, 0) - m(0, 2);
  EXPECT_EQ(homfly(figure_eight()), fig8);
  EXPECT_EQ(homfly(mirror(figure_eight())), fig8);  // amphichiral
  EXPECT_EQ(homfly_top(fig8), Laurent1::monomial(0, -1));
  EXPECT_EQ(alexander_conway(tre), Laurent1::from_ascending({1, 0, 1}));
  EXPECT_EQ(alexander_conway(fig8), Laurent1::from_ascending({1, 0, -1}));
}

TEST(Homfly, TorusLinksFromParallelEdges) {
  EXPECT_EQ(oracle::torus_2n(2), m(1, -1) - m(3, -1) + m(1, 1));
  for (int n = 1; n <= 7; ++n) {
    SCOPED_TRACE(n);
    Trinity t = parallel_edges(n).trinity();
    LinkDiagram d = median_of(t);
    EXPECT_EQ(component_count(d), n % 2 ? 1u : 2u);
    Laurent2 p = homfly(d);
    EXPECT_EQ(p, oracle::torus_2n(n));
    EXPECT_TRUE(oracle::homfly_matches_jones(p, d));
  }
}

TEST(Homfly, JonesSpecialisationOnKnownDiagrams) {
  for (const LinkDiagram& d : {trefoil(), figure_eight(), mirror(trefoil()), connected_sum(trefoil(), figure_eight()),
                               disjoint(trefoil(), figure_eight())})
    EXPECT_TRUE(oracle::homfly_matches_jones(homfly(d), d)) << to_pd_string(d);
}

TEST(Homfly, KinksRelabellingAndMirror) {
  std::mt19937_64 rng(99);
  for (const LinkDiagram& base : {trefoil(), figure_eight(), median_of(fixtures::g1().trinity())}) {
    const Laurent2 p = homfly(base);
    for (int sign : {1, -1}) {
      LinkDiagram k = add_kink(base, 1, sign);
      EXPECT_EQ(homfly(k), p);
      EXPECT_EQ(homfly(add_kink(k, max_label(k), -sign)), p);
    }
    for (int i = 0; i < 5; ++i) EXPECT_EQ(homfly(relabel(base, rng)), p);
    EXPECT_EQ(homfly(mirror(base)), p.mirrored());
    EXPECT_EQ(homfly(parse_pd(to_pd_string(base))), p);
  }
}

TEST(Homfly, SumsMultiply) {
  const Laurent2 a = homfly(trefoil()), b = homfly(figure_eight());
  EXPECT_EQ(homfly(connected_sum(trefoil(), figure_eight())), a * b);
  EXPECT_EQ(homfly(connected_sum(trefoil(), mirror(trefoil()))), a * a.mirrored());
  EXPECT_EQ(homfly(disjoint(trefoil(), figure_eight())), a * b * (m(-1, -1) - m(1, -1)));
}

TEST(Homfly, CapAndMalformedInput) {
  Trinity t = fixtures::eleven_edge().trinity();
  LinkDiagram d = median_of(t);
  try {
    homfly(d, d.crossings.size() - 1);
    ADD_FAILURE() << "cap not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Resource);
  }
  EXPECT_NO_THROW(homfly(trefoil(), 3));
  auto kind = [](const std::string& pd) {
    try {
      parse_pd(pd);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind("X(1,2,3) +\n"), ErrorKind::Parse);
  EXPECT_EQ(kind("X(1,2,3,4) ?\n"), ErrorKind::Parse);
  EXPECT_EQ(kind("X(1,2,2,1) +\nX(1,3,3,4) +\n"), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind("X(0,1,1,0) +\n"), ErrorKind::InvalidArgument);
}

TEST(MedianLink, G1) {
  Trinity t = fixtures::g1().trinity();
  LinkDiagram d = median_of(t);
  EXPECT_EQ(d.crossings.size(), 5u);
  EXPECT_EQ(component_count(d), 2u);
  EXPECT_TRUE(is_alternating(d));
  EXPECT_EQ(seifert_circle_count(d), 5u);
  const Laurent2 p = homfly(d);
  EXPECT_EQ(p, m(1, 1) + m(3, 1) + m(3, -1) - m(5, -1));
  // two components: every z exponent is odd, so no constant or z^0 term exists
  check_parity(p, 2);
  EXPECT_EQ(homfly_top(p), Laurent1::monomial(3) + Laurent1::monomial(1));
  EXPECT_EQ(alexander_conway(p), Laurent1::monomial(1, 2));
  EXPECT_EQ(alexander_conway(p).leading_coefficient(), 2);
  EXPECT_TRUE(oracle::homfly_matches_jones(p, d));
}

TEST(MedianLink, HVectorIdentityOnG1BothRoots) {
  Trinity t = fixtures::g1().trinity();
  for (int root : {0, 1}) {
    HomflyHVectorRecord r = verify_homfly_h_vector(t, root);
    EXPECT_EQ(r.exponent, 9);
    EXPECT_EQ(r.h, Laurent1::monomial(4) + Laurent1::monomial(3));
    EXPECT_EQ(r.rhs_v2, Laurent1::monomial(1) + Laurent1::monomial(3));
    EXPECT_TRUE(r.holds_v2);
    EXPECT_FALSE(r.holds_v1);
  }
}

TEST(MedianLink, RandomGraphs) {
  std::mt19937_64 rng(5151);
  for (int i = 0; i < 60; ++i) {
    SCOPED_TRACE(i);
    Trinity t = load_trinity(random_plane_bipartite(rng));
    const PlanarMap& pm = t.source();
    LinkDiagram d = median_of(t);
    ASSERT_EQ(d.crossings.size(), pm.edge_count());
    ASSERT_EQ(seifert_circle_count(d), pm.vertex_count());
    ASSERT_TRUE(is_alternating(d));
    SeifertData s = seifert_data(d);
    ASSERT_EQ(s.euler_characteristic, static_cast<long>(pm.vertex_count()) - static_cast<long>(pm.edge_count()));
    ASSERT_EQ(component_count(d), s.components);
    Laurent2 p = homfly(d, 12);
    check_parity(p, component_count(d));
    ASSERT_TRUE(oracle::homfly_matches_jones(p, d));
    for (int root = 0; root < static_cast<int>(t.count(Colour::Red)); ++root)
      ASSERT_TRUE(verify_homfly_h_vector(t, root, 12).holds_v2) << "root " << root;
  }
}
