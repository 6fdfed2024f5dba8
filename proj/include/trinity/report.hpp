#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>
#include "trinity/floer.hpp"
#include "trinity/homfly_check.hpp"
#include "trinity/magic.hpp"

namespace trinity {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  std::size_t crossing_cap = 16;
  std::optional<int> root_dual_vertex;  // red vertex for triangulation-based checks
  bool emit_pd = false;
};

struct Report {
  Json doc;
  bool homfly_skipped = false;
  bool consistent = true;  // every cross-route comparison agreed
};

// Always "p/q", even when q = 1.
inline std::string rat_str(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

inline Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(rat_str(x));
  return a;
}
inline Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (long x : v) a.push_back(x);
  return a;
}
inline Json to_json(const VPolytope& p) {
  Json a = Json::array();
  for (auto& v : p.vertices()) a.push_back(to_json(v));
  return a;
}
inline Json to_json(const LatticeSet& s) {
  Json a = Json::array();
  for (auto& v : s.points()) a.push_back(to_json(v));
  return a;
}
inline Json int_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}
inline Json to_json(const LatticePolytope& p) {
  return Json{{"dimension", p.polytope.affine_dim()}, {"vertices", to_json(p.polytope)}, {"lattice_points", to_json(p.lattice)}};
}
inline Json centre_json(const std::optional<IntVec>& c) { return c ? to_json(*c) : Json(nullptr); }

inline Json polytope_listing(const Trinity& t, Hypergraph h, const std::string& which) {
  if (which == "gp") return to_json(gp_polytope(t, h));
  if (which == "trimmed") return to_json(trimmed_gp(t, h));
  if (which == "hypertree") return to_json(hypertree_polytope(t, h));
  if (which == "root") {
    RootPolytope r = root_polytope(colour_graph(t, h.graph_colour()), h.hyperedges);
    return Json{{"dimension", r.polytope.affine_dim()},
                {"vertices", to_json(r.polytope)},
                {"lattice_points", to_json(r.lattice)},
                {"normalized_volume", int_json(placing_volume(r))}};
  }
  fail(ErrorKind::InvalidArgument, "unknown polytope selector '" + which + "'");
}

inline Hypergraph parse_hypergraph(const std::string& xy) {
  auto col = [&](char ch) {
    switch (ch) {
      case 'V': return Colour::Violet;
      case 'E': return Colour::Emerald;
      case 'R': return Colour::Red;
    }
    fail(ErrorKind::InvalidArgument, "unknown hypergraph selector '" + xy + "'");
  };
  if (xy.size() != 2 || xy[0] == xy[1]) fail(ErrorKind::InvalidArgument, "unknown hypergraph selector '" + xy + "'");
  return {col(xy[0]), col(xy[1])};
}

inline int default_dual_vertex(const Trinity& t, const ReportOptions& o) {
  int r = o.root_dual_vertex.value_or(t.root_vertex(Colour::Red).index);
  if (r < 0 || r >= static_cast<int>(t.count(Colour::Red))) fail(ErrorKind::InvalidArgument, "root dual vertex out of range");
  return r;
}

inline Json pd_lines(const LinkDiagram& d) {
  Json a = Json::array();
  std::istringstream in(to_pd_string(d));
  for (std::string line; std::getline(in, line);) a.push_back(line);
  return a;
}

inline Json homfly_json(const HomflyHVectorRecord& r) {
  return Json{{"polynomial", r.homfly.str()},
              {"top", r.top.str("v")},
              {"alexander_conway", alexander_conway(r.homfly).str("z")},
              {"identity",
               {{"root_dual_vertex", r.root},
                {"exponent", r.exponent},
                {"h", r.h.str("x")},
                {"rhs_h_v_minus2", r.rhs_v2.str("v")},
                {"rhs_h_v_minus1", r.rhs_v1.str("v")},
                {"holds_h_v_minus2", r.holds_v2},
                {"holds_h_v_minus1", r.holds_v1},
                {"verified", r.holds()}}}};
}

inline Report build_report(const Trinity& t, const ReportOptions& o = {}) {
  Report rep;
  Json& j = rep.doc;
  const PlanarMap& m = t.source();
  const Colour colours[3] = {Colour::Violet, Colour::Emerald, Colour::Red};
  const int dual_root = default_dual_vertex(t, o);

  j["report_version"] = 1;
  Json roots = Json::object();
  for (Colour c : colours) roots[colour_name(c)] = t.root_vertex(c).index;
  j["graph"] = Json{{"violet", t.count(Colour::Violet)},
                    {"emerald", t.count(Colour::Emerald)},
                    {"red", t.count(Colour::Red)},
                    {"edges", m.edge_count()},
                    {"outer_face", t.outer_face()},
                    {"root_triangle", t.root_triangle()},
                    {"root_vertices", roots},
                    {"root_dual_vertex", dual_root}};

  MagicNumberReport mr = magic_number_report(t);
  Json arb = Json::object(), hc = Json::object();
  for (Colour c : colours) arb[colour_name(c)] = int_json(mr.arborescences[static_cast<int>(c)]);
  for (auto& [n, v] : mr.hypertree_counts) hc[n] = int_json(v);
  j["magic"] = Json{{"determinant", int_json(mr.determinant)},
                    {"arborescences", arb},
                    {"tutte_matchings", int_json(mr.tutte_matchings)},
                    {"hypertrees", hc},
                    {"all_equal", mr.all_equal},
                    {"value", int_json(mr.value)}};
  rep.consistent = rep.consistent && mr.all_equal;

  AdjMatrix am = adjacency_matrix(t);
  Json rows = Json::array();
  for (auto& r : am.rows) rows.push_back(to_string(r));
  j["adjacency_matrix"] = Json{{"rows", rows}, {"columns", am.cols}, {"entries", am.entries}};

  Json hyp = Json::object(), polys = Json::object();
  for (const auto& h : all_hypergraphs()) {
    hyp[h.name()] = to_json(hypertree_set(t, h));
    polys[h.name()] = Json{{"gp", to_json(gp_polytope(t, h))},
                           {"trimmed", to_json(trimmed_gp(t, h))},
                           {"hypertree", to_json(hypertree_polytope(t, h))}};
  }
  j["hypertrees"] = hyp;
  j["polytopes"] = polys;

  Json rp = Json::object(), tri = Json::object();
  for (Colour c : colours) {
    ColourGraph g = colour_graph(t, c);
    Colour u = default_hyperedge_class(c);
    RootPolytope r = root_polytope(g, u);
    rp[colour_name(c)] = Json{{"hypergraph", Hypergraph{other_class(g, u), u}.name()},
                              {"m", r.m},
                              {"n", r.n},
                              {"dimension", r.polytope.affine_dim()},
                              {"vertices", to_json(r.polytope)},
                              {"normalized_volume", int_json(placing_volume(r))},
                              {"slice_u", to_json(cayley_slice(r, SliceSide::U))},
                              {"slice_v", to_json(cayley_slice(r, SliceSide::V))}};
    Json per_root = Json::array();
    for (int root = 0; root < static_cast<int>(t.count(c)); ++root) {
      Triangulation tr = arborescence_triangulation(t, c, root);
      Json simp = Json::array();
      for (auto& s : tr.simplices) simp.push_back(s.tree.edges);
      per_root.push_back(Json{{"root", root},
                              {"simplices", simp},
                              {"f", f_vector(tr).str("y")},
                              {"h", h_vector(tr).str("x")}});
    }
    tri[colour_name(c)] = per_root;
  }
  j["root_polytopes"] = rp;
  j["triangulations"] = tri;

  DualityRecord dr = verify_duality_suite(t);
  Json ids = Json::array(), refl = Json::array();
  for (auto& i : dr.identities)
    ids.push_back(Json{{"trimmed", i.trimmed.name()}, {"hypertrees", transpose(i.trimmed).name()}, {"holds", i.holds}});
  for (auto& r : dr.reflections)
    refl.push_back(Json{{"space", std::string(1, colour_letter(r.space))}, {"a", r.a.name()}, {"b", r.b.name()}, {"centre", centre_json(r.centre)}});
  j["duality"] = Json{{"identities", ids}, {"reflections", refl}, {"all_hold", dr.all_hold()}};
  rep.consistent = rep.consistent && dr.all_hold();

  LinkDiagram diagram = median_diagram(m, t.source_bipartition());
  SeifertData sd = seifert_data(diagram);
  Json link{{"crossings", diagram.crossings.size()},
            {"components", sd.components},
            {"alternating", is_alternating(diagram)},
            {"seifert_circles", seifert_circle_count(diagram)},
            {"euler_characteristic", sd.euler_characteristic},
            {"genus", sd.genus}};
  if (o.emit_pd) link["pd"] = pd_lines(diagram);
  if (diagram.crossings.size() > o.crossing_cap) {
    rep.homfly_skipped = true;
    link["homfly"] = Json{{"status", "skipped"}, {"reason", to_string(ErrorKind::Resource)}, {"crossing_cap", o.crossing_cap}};
  } else {
    HomflyHVectorRecord hr = verify_homfly_h_vector(t, dual_root, o.crossing_cap);
    Json hj{{"status", "computed"}};
    hj.update(homfly_json(hr));
    link["homfly"] = hj;
    rep.consistent = rep.consistent && hr.holds() && alexander_conway(hr.homfly).leading_coefficient() == mr.value;
  }
  j["link"] = link;

  Json sup = Json::object(), tight = Json::object();
  for (Colour c : colours) {
    SupportSet s = sfh_support(t, c);
    sup[colour_name(c)] = Json{{"coordinates", std::string(1, colour_letter(support_hypergraphs(c).first.hyperedges))},
                               {"points", to_json(s.points)},
                               {"invariant_is_generator", s.invariant_is_generator}};
    tight[colour_name(c)] = tight_contact_count(t, c);
  }
  SuturedSummary ss = sutured_summary(t);
  j["floer"] = Json{{"support", sup},
                    {"tight_contact", tight},
                    {"sutured",
                     {{"genus", ss.genus}, {"suture_components", ss.suture_components}, {"balanced", ss.balanced}, {"dim_sfh", ss.dim_sfh}}}};
  return rep;
}

namespace detail {

inline bool is_scalar_list(const Json& a) {
  if (!a.is_array()) return false;
  for (auto& x : a)
    if (x.is_structured()) return false;
  return true;
}

inline std::string scalar_text(const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); }

inline std::string tuple_text(const Json& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + scalar_text(a[i]);
  return s + ")";
}

inline void text_walk(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string label = j.is_object() ? it.key() : "-";
    const Json& v = it.value();
    if (!v.is_structured()) {
      os << pad << label << ": " << scalar_text(v) << "\n";
    } else if (is_scalar_list(v)) {
      os << pad << label << ": " << tuple_text(v) << "\n";
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return is_scalar_list(x); })) {
      // point lists on one line, already sorted
      os << pad << label << ": {";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << tuple_text(v[i]);
      os << "}\n";
    } else {
      os << pad << label << ":\n";
      text_walk(os, v, indent + 2);
    }
  }
}

}  // namespace detail

inline std::string render(const Json& j, bool text) {
  if (!text) return j.dump(2) + "\n";
  std::ostringstream os;
  detail::text_walk(os, j, 0);
  return os.str();
}

}  // namespace trinity
