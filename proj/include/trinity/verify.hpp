#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trinity/floer.hpp"
#include "trinity/homfly_check.hpp"
#include "trinity/magic.hpp"

namespace trinity {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t crossing_cap = 16;
  bool homfly = true;  // skip the skein computation entirely when false
};

namespace detail {

inline void run_check(std::vector<Check>& out, const std::string& name, const std::function<bool(std::string&)>& f) {
  Check c{name, false, ""};
  try {
    c.pass = f(c.detail);
  } catch (const Error& e) {
    c.pass = false;
    c.detail = e.what();
  }
  out.push_back(std::move(c));
}

inline bool same_scaled(const VPolytope& slice, const VPolytope& gp, long scale, int sign) {
  std::vector<RatVec> a;
  for (auto v : slice.vertices()) {
    for (auto& x : v) x *= scale * sign;
    a.push_back(std::move(v));
  }
  std::sort(a.begin(), a.end());
  return a == gp.vertices();
}

}  // namespace detail

// Every module invariant on one trinity. Each check catches its own errors.
inline std::vector<Check> run_invariants(const Trinity& t, const VerifyOptions& opt = {}) {
  std::vector<Check> out;
  const PlanarMap& m = t.source();
  const Colour colours[3] = {Colour::Violet, Colour::Emerald, Colour::Red};
  Integer magic = -1;

  detail::run_check(out, "planar.euler", [&](std::string& d) {
    long chi = static_cast<long>(m.vertex_count()) - static_cast<long>(m.edge_count()) + static_cast<long>(m.face_count());
    d = "chi=" + std::to_string(chi);
    return chi == 2;
  });
  detail::run_check(out, "planar.double_dual_isomorphic", [&](std::string&) {
    PlanarMap dual = planar_dual(m);
    return dual.face_count() == m.vertex_count() && isomorphic(planar_dual(dual), m);
  });
  detail::run_check(out, "planar.bipartition_proper", [&](std::string&) {
    Bipartition b = bipartition(m);
    auto sorted = [](std::vector<int> v) { return std::sort(v.begin(), v.end()), v; };
    auto& s = t.source_bipartition();
    return (sorted(b.class_a) == sorted(s.class_a) && sorted(b.class_b) == sorted(s.class_b)) ||
           (sorted(b.class_a) == sorted(s.class_b) && sorted(b.class_b) == sorted(s.class_a));
  });
  detail::run_check(out, "trinity.euler_count", [&](std::string& d) {
    std::size_t total = t.count(Colour::Violet) + t.count(Colour::Emerald) + t.count(Colour::Red);
    d = std::to_string(total) + " vertices, " + std::to_string(m.edge_count()) + " edges";
    return total == m.edge_count() + 2 && t.triangles().size() == 2 * m.edge_count();
  });
  for (Colour c : colours) {
    std::string cn = colour_name(c);
    detail::run_check(out, "trinity.directed_dual_balanced." + cn, [&](std::string&) { return is_balanced(directed_dual(t, c)); });
    detail::run_check(out, "trinity.colour_graph_faces." + cn, [&](std::string&) {
      ColourGraph g = colour_graph(t, c);
      return g.map.face_count() == t.count(c) && planar_dual(g.map).edge_count() == g.map.edge_count();
    });
  }
  detail::run_check(out, "trinity.magic_routes_equal", [&](std::string& d) {
    auto r = magic_number_report(t);
    magic = r.value;
    d = "magic=" + r.value.get_str();
    return r.all_equal;
  });
  detail::run_check(out, "trinity.matrix_square", [&](std::string&) {
    auto a = adjacency_matrix(t);
    return a.rows.size() == a.cols.size() && a.rows.size() == m.edge_count() - 1;
  });
  for (Colour c : colours) {
    std::string cn = colour_name(c);
    detail::run_check(out, "trees.arborescence_root_independent." + cn, [&](std::string& d) {
      DirectedDual dd = directed_dual(t, c);
      for (int r = 0; r < static_cast<int>(dd.vertex_count); ++r) {
        Integer k = count_arborescences(dd, r);
        std::size_t e = enumerate_arborescences(dd, r).size();
        if (k != magic || Integer(static_cast<unsigned long>(e)) != k) {
          d = "root " + std::to_string(r) + ": matrix-tree " + k.get_str() + ", enumerated " + std::to_string(e);
          return false;
        }
      }
      return true;
    });
    detail::run_check(out, "trees.arborescence_hypertree_bijection." + cn, [&](std::string&) {
      DirectedDual dd = directed_dual(t, c);
      auto [x, y] = colour_classes(c);
      for (Colour side : {x, y}) {
        std::vector<IntVec> pts;
        auto arbs = enumerate_arborescences(dd, t.root_vertex(c).index);
        for (auto& a : arbs) pts.push_back(arborescence_to_hypertree(t, c, a, side));
        LatticeSet s(t.count(side), pts);
        if (s.size() != arbs.size() || !(s == hypertree_set(t, {side == x ? y : x, side}))) return false;
      }
      return true;
    });
  }
  detail::run_check(out, "polytopes.duality_suite", [&](std::string& d) {
    auto rec = verify_duality_suite(t);
    for (auto& r : rec.reflections)
      if (r.centre) {
        d += std::string(1, colour_letter(r.space)) + ":(";
        for (std::size_t i = 0; i < r.centre->size(); ++i) d += (i ? "," : "") + std::to_string((*r.centre)[i]);
        d += ") ";
      }
    return rec.all_hold();
  });
  for (Colour c : colours) {
    std::string cn = colour_name(c);
    detail::run_check(out, "polytopes.cayley_slices." + cn, [&](std::string&) {
      ColourGraph g = colour_graph(t, c);
      Colour u = default_hyperedge_class(c), x = other_class(g, u);
      RootPolytope r = root_polytope(g, u);
      if (r.polytope.affine_dim() != static_cast<int>(r.m + r.n) - 2) return false;
      bool a = detail::same_scaled(cayley_slice(r, SliceSide::U), gp_polytope(t, {x, u}).polytope, static_cast<long>(r.m), -1);
      bool b = detail::same_scaled(cayley_slice(r, SliceSide::V), gp_polytope(t, {u, x}).polytope, static_cast<long>(r.n), 1);
      return a && b;
    });
    detail::run_check(out, "polytopes.triangulations." + cn, [&](std::string& d) {
      std::optional<Laurent1> h0;
      for (int root = 0; root < static_cast<int>(t.count(c)); ++root) {
        Triangulation tr = arborescence_triangulation(t, c, root);
        if (Integer(static_cast<unsigned long>(tr.simplices.size())) != magic) {
          d = "root " + std::to_string(root) + " has " + std::to_string(tr.simplices.size()) + " simplices";
          return false;
        }
        Laurent1 h = h_vector(tr);
        for (auto& [e, coeff] : h.terms())
          if (coeff < 0) return d = "negative h coefficient", false;
        if (h0 && !(*h0 == h)) return d = "h differs between roots", false;
        h0 = h;
      }
      return true;
    });
  }
  LinkDiagram diagram = median_diagram(m, t.source_bipartition());
  detail::run_check(out, "links.median_shape", [&](std::string& d) {
    auto s = seifert_data(diagram);
    d = std::to_string(s.components) + " components";
    return diagram.crossings.size() == m.edge_count() && seifert_circle_count(diagram) == m.vertex_count() &&
           s.euler_characteristic == static_cast<long>(m.vertex_count()) - static_cast<long>(m.edge_count()) &&
           is_alternating(diagram);
  });
  if (opt.homfly && diagram.crossings.size() <= opt.crossing_cap) {
    detail::run_check(out, "links.homfly_h_vector", [&](std::string& d) {
      for (int root = 0; root < static_cast<int>(t.count(Colour::Red)); ++root) {
        auto rec = verify_homfly_h_vector(t, root, opt.crossing_cap);
        if (!rec.holds()) return d = "root " + std::to_string(root) + ": top " + rec.top.str("v") + " vs " + rec.rhs_v2.str("v"), false;
      }
      return true;
    });
    detail::run_check(out, "links.conway_leading_is_magic", [&](std::string& d) {
      Laurent2 p = homfly(diagram, opt.crossing_cap);
      Laurent1 ac = alexander_conway(p);
      d = ac.str("z");
      return ac.leading_coefficient() == magic;
    });
    detail::run_check(out, "links.mirror_and_kinks", [&](std::string&) {
      Laurent2 p = homfly(diagram, opt.crossing_cap);
      return homfly(mirror(diagram), opt.crossing_cap) == p.mirrored() && homfly(remove_kinks(diagram), opt.crossing_cap) == p;
    });
  }
  detail::run_check(out, "floer.support", [&](std::string& d) {
    for (Colour c : colours) {
      auto s = sfh_support(t, c);
      if (Integer(static_cast<unsigned long>(s.points.size())) != magic) return d = std::string(colour_name(c)) + " size", false;
      if (!(spin_c_tight_support(t, c).points == s.points)) return d = std::string(colour_name(c)) + " spin-c", false;
      if (tight_contact_count(t, c) != s.points.size()) return d = "tight count", false;
    }
    return true;
  });
  detail::run_check(out, "floer.sutured_summary", [&](std::string&) {
    auto s = sutured_summary(t);
    return s.genus == betti1(m) && s.balanced && Integer(static_cast<unsigned long>(s.dim_sfh)) == magic;
  });
  return out;
}

inline bool all_pass(const std::vector<Check>& cs) {
  for (auto& c : cs)
    if (!c.pass) return false;
  return true;
}

}  // namespace trinity
