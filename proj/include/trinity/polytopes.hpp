#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trinity/exactgeom.hpp"
#include "trinity/laurent.hpp"
#include "trinity/trees.hpp"

namespace trinity {

struct HypergraphData {
  std::size_t vertex_count = 0;
  std::vector<std::vector<int>> hyperedges;  // sorted sets of vertex indices
  std::string name;
};

inline Colour other_class(const ColourGraph& g, Colour c) { return c == g.first ? g.second : g.first; }

inline HypergraphData hypergraph_data(const ColourGraph& g, Colour hyperedge_class) {
  Colour xc = other_class(g, hyperedge_class);
  HypergraphData h;
  h.vertex_count = xc == g.first ? g.first_count : g.second_count;
  h.hyperedges.assign(hyperedge_class == g.first ? g.first_count : g.second_count, {});
  h.name = Hypergraph{xc, hyperedge_class}.name();
  for (std::size_t e = 0; e < g.map.edge_count(); ++e) {
    auto [a, b] = g.map.endpoints(static_cast<int>(e));
    VertexRef ra = g.vertex_ref(a), rb = g.vertex_ref(b);
    if (ra.colour != hyperedge_class) std::swap(ra, rb);
    h.hyperedges[ra.index].push_back(rb.index);
  }
  for (auto& s : h.hyperedges) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return h;
}

inline HypergraphData hypergraph_data(const Trinity& t, Hypergraph h) {
  return hypergraph_data(colour_graph(t, h.graph_colour()), h.hyperedges);
}

struct LatticePolytope {
  VPolytope polytope;
  LatticeSet lattice;
  std::string provenance;
};

// Sum of the coordinate simplices of the hyperedges.
inline LatticePolytope gp_polytope(const HypergraphData& h) {
  const std::size_t n = h.vertex_count;
  std::vector<RatVec> verts{RatVec(n, Rational(0))};
  std::set<IntVec> sums{IntVec(n, 0)};
  for (const auto& e : h.hyperedges) {
    std::vector<RatVec> next;
    for (auto& v : verts)
      for (int x : e) {
        RatVec w = v;
        w[x] += 1;
        next.push_back(std::move(w));
      }
    verts = VPolytope::from_points(std::move(next)).vertices();
    std::set<IntVec> ns;
    for (auto& s : sums)
      for (int x : e) {
        IntVec w = s;
        ++w[x];
        ns.insert(std::move(w));
      }
    sums = std::move(ns);
  }
  LatticePolytope p;
  p.polytope = VPolytope::from_points(verts);
  p.lattice = LatticeSet(n, {sums.begin(), sums.end()});
  p.provenance = "gp" + h.name;
  if (!(lattice_points(p.polytope) == p.lattice))
    fail(ErrorKind::Internal, "gp lattice points differ from generator sums for " + h.name);
  return p;
}

// GP minus the simplex on all vertices: {x : x + e_v in P for every v}.
inline LatticePolytope trimmed_gp(const HypergraphData& h) {
  LatticePolytope gp = gp_polytope(h);
  const std::size_t n = h.vertex_count;
  std::vector<IntVec> out;
  std::set<IntVec> cand;
  for (auto& p : gp.lattice.points())
    for (std::size_t v = 0; v < n; ++v) {
      IntVec x = p;
      --x[v];
      cand.insert(x);
    }
  for (auto& x : cand) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      IntVec y = x;
      ++y[v];
      ok = gp.lattice.contains(y);
    }
    if (ok) out.push_back(x);
  }
  if (out.empty()) fail(ErrorKind::Internal, "empty trimmed polytope for " + h.name);
  LatticePolytope p;
  p.lattice = LatticeSet(n, out);
  p.polytope = VPolytope::from_int_points(p.lattice.points());
  p.provenance = "trimmed" + h.name;
  // hull of the lattice points must still sit inside P - simplex
  for (auto& v : p.polytope.vertices())
    for (std::size_t k = 0; k < n; ++k) {
      RatVec w = v;
      w[k] += 1;
      if (!contains_point(gp.polytope, w)) fail(ErrorKind::Internal, "trimmed hull leaves the GP polytope");
    }
  return p;
}

inline LatticePolytope hypertree_polytope(const ColourGraph& g, Colour hyperedge_class) {
  LatticePolytope p;
  p.lattice = hypertree_set(g, hyperedge_class);
  p.polytope = VPolytope::from_int_points(p.lattice.points());
  p.provenance = "hypertree" + Hypergraph{other_class(g, hyperedge_class), hyperedge_class}.name();
  if (!(lattice_points(p.polytope) == p.lattice))
    fail(ErrorKind::Internal, "hypertree polytope has extra lattice points");
  return p;
}

inline LatticePolytope gp_polytope(const Trinity& t, Hypergraph h) { return gp_polytope(hypergraph_data(t, h)); }
inline LatticePolytope trimmed_gp(const Trinity& t, Hypergraph h) { return trimmed_gp(hypergraph_data(t, h)); }
inline LatticePolytope hypertree_polytope(const Trinity& t, Hypergraph h) {
  return hypertree_polytope(colour_graph(t, h.graph_colour()), h.hyperedges);
}

// Coordinates: the hyperedge class U (m of them) first, then X (n).
struct RootPolytope {
  VPolytope polytope;
  LatticeSet lattice;
  std::size_t m = 0, n = 0;
  std::vector<RatVec> edge_points;  // per colour-graph edge
  std::string provenance;

  int vertex_index(const RatVec& p) const {
    auto& vs = polytope.vertices();
    auto it = std::lower_bound(vs.begin(), vs.end(), p);
    if (it == vs.end() || *it != p) return -1;
    return static_cast<int>(it - vs.begin());
  }
};

inline RootPolytope root_polytope(const ColourGraph& g, Colour hyperedge_class) {
  Colour xc = other_class(g, hyperedge_class);
  RootPolytope r;
  r.m = hyperedge_class == g.first ? g.first_count : g.second_count;
  r.n = xc == g.first ? g.first_count : g.second_count;
  for (std::size_t e = 0; e < g.map.edge_count(); ++e) {
    auto [a, b] = g.map.endpoints(static_cast<int>(e));
    VertexRef ra = g.vertex_ref(a), rb = g.vertex_ref(b);
    if (ra.colour != hyperedge_class) std::swap(ra, rb);
    RatVec p(r.m + r.n, Rational(0));
    p[ra.index] = 1;
    p[r.m + rb.index] = -1;
    r.edge_points.push_back(std::move(p));
  }
  r.polytope = VPolytope::from_points(r.edge_points);
  r.lattice = lattice_points(r.polytope);
  r.provenance = "root" + Hypergraph{xc, hyperedge_class}.name();
  return r;
}

inline VPolytope tree_simplex(const RootPolytope& r, const SpanningTree& t) {
  std::vector<RatVec> pts;
  for (int e : t.edges) pts.push_back(r.edge_points.at(e));
  std::vector<RatVec> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || !affinely_independent(pts) ||
      affine_dim(pts) != r.polytope.affine_dim())
    fail(ErrorKind::NotSimplex, "edge set does not span a full-dimensional simplex");
  return VPolytope::from_points(pts);
}

namespace detail {

// Solve sum c_j dirs[j] = rhs; nullopt if rhs is outside the span. dirs independent.
inline std::optional<RatVec> coords_in_span(const std::vector<RatVec>& dirs, const RatVec& rhs) {
  const std::size_t k = dirs.size(), n = rhs.size();
  std::vector<RatVec> rows(n, RatVec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = dirs[j][i];
    rows[i][k] = rhs[i];
  }
  auto piv = rref(rows, k + 1);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  RatVec c(k, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) c[piv[i]] = rows[i][k];
  return c;
}

inline int sign_of(const Rational& q) { return q > 0 ? 1 : q < 0 ? -1 : 0; }

}  // namespace detail

// Placing triangulation of the points in the given order; returns simplices as index lists.
inline std::vector<std::vector<int>> placing_triangulation(const std::vector<RatVec>& pts) {
  std::vector<std::vector<int>> simp{{0}};
  std::vector<int> basis{0};
  auto dirs_of = [&]() {
    std::vector<RatVec> d;
    for (std::size_t j = 1; j < basis.size(); ++j) d.push_back(sub(pts[basis[j]], pts[basis[0]]));
    return d;
  };
  for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
    auto dirs = dirs_of();
    auto ci = detail::coords_in_span(dirs, sub(pts[i], pts[basis[0]]));
    if (!ci) {
      basis.push_back(i);
      for (auto& s : simp) s.push_back(i);
      continue;
    }
    const std::size_t k = dirs.size();
    auto chart = [&](int j) { return *detail::coords_in_span(dirs, sub(pts[j], pts[basis[0]])); };
    auto side = [&](const std::vector<int>& facet, const RatVec& x) {
      RatVec f0 = chart(facet[0]);
      RatMat m(k, k);
      for (std::size_t r = 1; r < facet.size(); ++r) {
        RatVec fr = chart(facet[r]);
        for (std::size_t c = 0; c < k; ++c) m(r - 1, c) = fr[c] - f0[c];
      }
      for (std::size_t c = 0; c < k; ++c) m(k - 1, c) = x[c] - f0[c];
      return detail::sign_of(det_exact(m));
    };
    std::map<std::vector<int>, std::pair<int, int>> facets;  // facet -> (count, opposite vertex)
    for (auto& s : simp)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) f.push_back(s[j]);
        std::sort(f.begin(), f.end());
        auto& slot = facets[f];
        ++slot.first;
        slot.second = s[drop];
      }
    std::vector<std::vector<int>> added;
    for (auto& [f, info] : facets) {
      if (info.first != 1) continue;
      int sp = side(f, *ci), so = side(f, chart(info.second));
      if (sp != 0 && so != 0 && sp != so) {
        std::vector<int> s = f;
        s.push_back(i);
        added.push_back(std::move(s));
      }
    }
    simp.insert(simp.end(), added.begin(), added.end());
  }
  return simp;
}

inline Integer placing_volume(const RootPolytope& r) {
  std::vector<RatVec> pts;
  for (auto& p : r.edge_points)
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  Integer vol = 0;
  for (auto& s : placing_triangulation(pts)) {
    std::vector<RatVec> vs;
    for (int i : s) vs.push_back(pts[i]);
    vol += simplex_normalized_volume(vs);
  }
  return vol;
}

struct TriangulationSimplex {
  SpanningTree tree;
  std::vector<int> vertices;  // indices into the root polytope's vertex list, sorted
};

struct Triangulation {
  RootPolytope parent;
  Colour colour = Colour::Red;
  int root = 0;
  std::vector<TriangulationSimplex> simplices;
  Integer volume;
};

// Simplices of the trees dual to the arborescences rooted at `root`.
inline Triangulation arborescence_triangulation(const Trinity& t, Colour c, int root) {
  ColourGraph g = colour_graph(t, c);
  Triangulation tr;
  tr.parent = root_polytope(g, default_hyperedge_class(c));
  tr.colour = c;
  tr.root = root;
  std::vector<std::vector<RatVec>> geo;
  for (auto& a : enumerate_arborescences(directed_dual(t, c), root)) {
    TriangulationSimplex s;
    s.tree = arborescence_dual_tree(g, a);
    if (!is_spanning_tree(g.map.vertex_count(), g.map.edge_list(), s.tree))
      fail(ErrorKind::Internal, "arborescence complement is not a spanning tree");
    VPolytope simplex = tree_simplex(tr.parent, s.tree);
    for (auto& v : simplex.vertices()) s.vertices.push_back(tr.parent.vertex_index(v));
    std::sort(s.vertices.begin(), s.vertices.end());
    Integer vol = simplex_normalized_volume(simplex.vertices());
    if (vol != 1) fail(ErrorKind::Internal, "triangulation simplex of normalised volume " + vol.get_str());
    tr.volume += vol;
    geo.push_back(simplex.vertices());
    tr.simplices.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < geo.size(); ++i)
    for (std::size_t j = i + 1; j < geo.size(); ++j)
      if (!intersect_in_common_face(geo[i], geo[j]))
        fail(ErrorKind::Internal, "triangulation simplices overlap improperly");
  Integer total = placing_volume(tr.parent);
  if (tr.volume != total)
    fail(ErrorKind::Internal, "triangulation volume " + tr.volume.get_str() + " != root polytope volume " + total.get_str());
  return tr;
}

// f(y) = sum_k f_{k-1} y^{d-k}, with f_{-1} = 1
inline Laurent1 f_vector(const Triangulation& tr) {
  std::set<std::vector<int>> faces;
  int d = -1;
  for (auto& s : tr.simplices) {
    d = std::max(d, static_cast<int>(s.vertices.size()) - 1);
    const std::size_t k = s.vertices.size();
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
      std::vector<int> f;
      for (std::size_t j = 0; j < k; ++j)
        if (mask & (1ul << j)) f.push_back(s.vertices[j]);
      faces.insert(std::move(f));
    }
  }
  Laurent1 f = Laurent1::monomial(d + 1);
  for (auto& face : faces) f += Laurent1::monomial(d + 1 - static_cast<int>(face.size()));
  return f;
}

inline Laurent1 h_vector(const Triangulation& tr) { return f_vector(tr).shift(-1); }

enum class SliceSide { U, V };

// Q cap {x_U = 1/m} (side U) or Q cap {x_V = -1/n} (side V), with the fixed
// coordinates dropped. Vertices are images of basic feasible solutions.
inline VPolytope cayley_slice(const RootPolytope& r, SliceSide side) {
  auto& pts = r.polytope.vertices();
  const std::size_t off = side == SliceSide::U ? 0 : r.m;
  const std::size_t fixed = side == SliceSide::U ? r.m : r.n;
  Rational val(Integer(side == SliceSide::U ? 1 : -1), Integer(static_cast<unsigned long>(fixed)));
  val.canonicalize();
  const std::size_t np = pts.size();
  // rows: fixed coordinates, then sum of weights
  std::vector<RatVec> rows(fixed + 1, RatVec(np + 1));
  for (std::size_t i = 0; i < fixed; ++i) {
    for (std::size_t j = 0; j < np; ++j) rows[i][j] = pts[j][off + i];
    rows[i][np] = val;
  }
  for (std::size_t j = 0; j < np; ++j) rows[fixed][j] = 1;
  rows[fixed][np] = 1;
  std::vector<RatVec> red = rows;
  auto piv = rref(red, np + 1);
  if (!piv.empty() && piv.back() == np) fail(ErrorKind::Internal, "empty Cayley slice");
  const std::size_t rk = piv.size();
  std::vector<RatVec> out;
  std::vector<int> pick(rk);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == rk) {
      std::vector<RatVec> dirs;
      for (int j : pick) {
        RatVec col(red.size());
        for (std::size_t i = 0; i < red.size(); ++i) col[i] = red[i][j];
        dirs.push_back(std::move(col));
      }
      if (rank(dirs) != rk) return;
      RatVec rhs(red.size());
      for (std::size_t i = 0; i < red.size(); ++i) rhs[i] = red[i][np];
      auto lam = detail::coords_in_span(dirs, rhs);
      if (!lam) return;
      for (auto& l : *lam)
        if (l < 0) return;
      RatVec x(pts[0].size(), Rational(0));
      for (std::size_t q = 0; q < rk; ++q)
        for (std::size_t c = 0; c < x.size(); ++c) x[c] += (*lam)[q] * pts[pick[q]][c];
      RatVec proj;
      for (std::size_t c = 0; c < x.size(); ++c)
        if (c < off || c >= off + fixed) proj.push_back(x[c]);
      out.push_back(std::move(proj));
      return;
    }
    for (std::size_t j = start; j < np; ++j) {
      pick[pos] = static_cast<int>(j);
      self(self, pos + 1, j + 1);
    }
  };
  rec(rec, 0, 0);
  return VPolytope::from_points(std::move(out));
}

// c with a = c - b, if any
inline std::optional<IntVec> reflection_centre(const LatticeSet& a, const LatticeSet& b) {
  if (a.size() != b.size() || a.ambient_dim() != b.ambient_dim() || a.empty()) return std::nullopt;
  IntVec c = a.coordinate_min(), mx = b.coordinate_max();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += mx[i];
  if (b.negated().translated(c) == a) return c;
  return std::nullopt;
}

// c with a = b + c, if any
inline std::optional<IntVec> translation_between(const LatticeSet& a, const LatticeSet& b) {
  if (a.size() != b.size() || a.ambient_dim() != b.ambient_dim() || a.empty()) return std::nullopt;
  IntVec c = a.coordinate_min(), mn = b.coordinate_min();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= mn[i];
  if (b.translated(c) == a) return c;
  return std::nullopt;
}

struct DualityRecord {
  struct Identity {
    Hypergraph trimmed;  // (X,Y); compared against hypertrees of (Y,X)
    bool holds;
  };
  struct Reflection {
    Colour space;  // common hyperedge class
    Hypergraph a, b;
    std::optional<IntVec> centre;
  };
  std::vector<Identity> identities;
  std::vector<Reflection> reflections;
  bool all_hold() const {
    for (auto& i : identities)
      if (!i.holds) return false;
    for (auto& r : reflections)
      if (!r.centre) return false;
    return true;
  }
};

inline DualityRecord verify_duality_suite(const Trinity& t) {
  DualityRecord rec;
  for (const auto& h : all_hypergraphs()) {
    LatticeSet trimmed = trimmed_gp(t, h).lattice;
    rec.identities.push_back({h, trimmed == hypertree_set(t, transpose(h))});
  }
  // S_(X,Z) and S_(Y,Z) share the space R^Z
  const Hypergraph pairs[3][2] = {
      {{Colour::Violet, Colour::Emerald}, {Colour::Red, Colour::Emerald}},
      {{Colour::Red, Colour::Violet}, {Colour::Emerald, Colour::Violet}},
      {{Colour::Violet, Colour::Red}, {Colour::Emerald, Colour::Red}},
  };
  for (auto& [a, b] : pairs)
    rec.reflections.push_back({a.hyperedges, a, b, reflection_centre(hypertree_set(t, a), hypertree_set(t, b))});
  return rec;
}

}  // namespace trinity
