#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "trinity/planar.hpp"
#include "trinity/rational.hpp"

namespace trinity {

enum class Colour { Violet = 0, Emerald = 1, Red = 2 };
enum class Shade { Black, White };

inline const char* colour_name(Colour c) {
  switch (c) {
    case Colour::Violet: return "violet";
    case Colour::Emerald: return "emerald";
    case Colour::Red: return "red";
  }
  return "?";
}
inline char colour_letter(Colour c) { return c == Colour::Violet ? 'V' : c == Colour::Emerald ? 'E' : 'R'; }

// Classes of the colour-c graph, in the order used for its vertex ids.
inline std::pair<Colour, Colour> colour_classes(Colour c) {
  switch (c) {
    case Colour::Red: return {Colour::Violet, Colour::Emerald};
    case Colour::Violet: return {Colour::Emerald, Colour::Red};
    case Colour::Emerald: return {Colour::Red, Colour::Violet};
  }
  return {};
}
inline Colour third_colour(Colour a, Colour b) { return static_cast<Colour>(3 - static_cast<int>(a) - static_cast<int>(b)); }

struct VertexRef {
  Colour colour;
  int index;
  auto operator<=>(const VertexRef&) const = default;
};

inline std::string to_string(VertexRef v) { return std::string(1, colour_letter(v.colour)) + std::to_string(v.index); }

struct Triangle {
  int violet, emerald, red;
  Shade shade;
  int corner(Colour c) const { return c == Colour::Violet ? violet : c == Colour::Emerald ? emerald : red; }
};

struct TrinityEdge {
  Colour colour;
  VertexRef first, second;  // ordered as colour_classes(colour)
  int black, white;         // triangle ids
  int local;                // index among edges of this colour
};

class Trinity {
 public:
  const PlanarMap& source() const { return map_; }
  const Bipartition& source_bipartition() const { return bip_; }
  int outer_face() const { return outer_; }
  int root_triangle() const { return root_; }

  std::size_t count(Colour c) const { return counts_[static_cast<int>(c)]; }
  const std::vector<Triangle>& triangles() const { return tri_; }
  const std::vector<TrinityEdge>& edges() const { return edges_; }
  const std::vector<int>& edges_of(Colour c) const { return by_colour_[static_cast<int>(c)]; }
  // counter-clockwise edge ids around a vertex
  const std::vector<int>& rotation(VertexRef v) const { return rot_[static_cast<int>(v.colour)][v.index]; }
  VertexRef root_vertex(Colour c) const { return {c, tri_[root_].corner(c)}; }
  // map vertex id -> (colour, class index); red vertices are faces
  VertexRef of_source_vertex(int v) const {
    return {bip_.side[v] == 0 ? Colour::Violet : Colour::Emerald, class_index_[v]};
  }
  int source_vertex(VertexRef v) const {
    return v.colour == Colour::Violet ? bip_.class_a[v.index] : bip_.class_b[v.index];
  }

  Trinity with_root(int triangle) const {
    if (triangle < 0 || triangle >= static_cast<int>(tri_.size())) fail(ErrorKind::InvalidArgument, "root triangle out of range");
    if (tri_[triangle].shade != Shade::White) fail(ErrorKind::InvalidArgument, "root triangle must be white");
    Trinity t = *this;
    t.root_ = triangle;
    return t;
  }

  friend Trinity build_trinity(const PlanarMap&, const Bipartition&, int, std::optional<int>);

 private:
  PlanarMap map_;
  Bipartition bip_;
  int outer_ = 0, root_ = 0;
  std::array<std::size_t, 3> counts_{};
  std::vector<int> class_index_;
  std::vector<Triangle> tri_;
  std::vector<TrinityEdge> edges_;
  std::array<std::vector<int>, 3> by_colour_;
  std::array<std::vector<std::vector<int>>, 3> rot_;
};

// class_a of bip is violet, class_b emerald. Triangle id = dart id of the
// source map: T(d) has the start of d, the end of d and the face to its right.
inline Trinity build_trinity(const PlanarMap& m, const Bipartition& bip, int outer_face = 0,
                             std::optional<int> root = std::nullopt) {
  if (m.edge_count() == 0) fail(ErrorKind::InvalidArgument, "trinity needs at least one edge");
  if (outer_face < 0 || outer_face >= static_cast<int>(m.face_count())) fail(ErrorKind::InvalidArgument, "outer face out of range");
  Trinity t;
  t.map_ = m;
  t.bip_ = bip;
  t.outer_ = outer_face;
  t.counts_ = {bip.class_a.size(), bip.class_b.size(), m.face_count()};
  t.class_index_.assign(m.vertex_count(), -1);
  for (std::size_t i = 0; i < bip.class_a.size(); ++i) t.class_index_[bip.class_a[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < bip.class_b.size(); ++i) t.class_index_[bip.class_b[i]] = static_cast<int>(i);
  auto is_violet = [&](int v) { return bip.side[v] == 0; };
  auto ref = [&](int v) { return t.of_source_vertex(v); };

  const int nd = static_cast<int>(m.dart_count());
  for (int d = 0; d < nd; ++d) {
    int x = m.vertex_of(d), y = m.vertex_of(PlanarMap::alpha(d));
    if (is_violet(x) == is_violet(y)) fail(ErrorKind::NotBipartite, "edge inside one colour class");
    int vi = is_violet(x) ? x : y, em = is_violet(x) ? y : x;
    t.tri_.push_back({t.class_index_[vi], t.class_index_[em], m.face_of(d), is_violet(x) ? Shade::Black : Shade::White});
  }
  auto add_edge = [&](Colour c, VertexRef a, VertexRef b, int black, int white) {
    auto [c1, c2] = colour_classes(c);
    if (a.colour != c1) std::swap(a, b);
    if (a.colour != c1 || b.colour != c2) fail(ErrorKind::Internal, "edge colour classes");
    int local = static_cast<int>(t.by_colour_[static_cast<int>(c)].size());
    t.by_colour_[static_cast<int>(c)].push_back(static_cast<int>(t.edges_.size()));
    t.edges_.push_back({c, a, b, black, white, local});
    return static_cast<int>(t.edges_.size()) - 1;
  };
  for (int k = 0; k < static_cast<int>(m.edge_count()); ++k) {
    int d = 2 * k;
    int black = is_violet(m.vertex_of(d)) ? d : d + 1;
    add_edge(Colour::Red, ref(m.vertex_of(d)), ref(m.vertex_of(d + 1)), black, black ^ 1);
  }
  // corner of dart a: the sector from a to sigma(a), joining vertex_of(a) to face_of(sigma(a))
  std::vector<int> corner(nd, -1);
  for (int pass = 0; pass < 2; ++pass) {
    bool want_emerald = pass == 0;
    for (int a = 0; a < nd; ++a) {
      int x = m.vertex_of(a);
      if (is_violet(x) == want_emerald) continue;
      VertexRef r{Colour::Red, m.face_of(m.sigma(a))};
      int s = m.sigma(a), o = PlanarMap::alpha(a);
      if (want_emerald)
        corner[a] = add_edge(Colour::Violet, ref(x), r, o, s);
      else
        corner[a] = add_edge(Colour::Emerald, r, ref(x), s, o);
    }
  }
  t.rot_[0].assign(t.counts_[0], {});
  t.rot_[1].assign(t.counts_[1], {});
  t.rot_[2].assign(t.counts_[2], {});
  for (int v = 0; v < static_cast<int>(m.vertex_count()); ++v) {
    VertexRef r = ref(v);
    auto& out = t.rot_[static_cast<int>(r.colour)][r.index];
    for (int d : m.darts_at(v)) {
      out.push_back(PlanarMap::edge_of(d));
      out.push_back(corner[d]);
    }
  }
  for (int f = 0; f < static_cast<int>(m.face_count()); ++f) {
    const auto& orbit = m.faces()[f];
    auto& out = t.rot_[2][f];
    for (auto it = orbit.rbegin(); it != orbit.rend(); ++it) out.push_back(corner[PlanarMap::alpha(*it)]);
  }
  if (root) {
    t = t.with_root(*root);
  } else {
    std::optional<int> best;
    for (int d = 0; d < nd && !best; ++d)
      if (t.tri_[d].shade == Shade::White && t.tri_[d].red == outer_face) best = d;
    if (!best) fail(ErrorKind::Internal, "outer face has no white triangle");
    t.root_ = *best;
  }
  return t;
}

// Triangle ids adjacent to a vertex.
inline std::vector<int> triangles_at(const Trinity& t, VertexRef v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < t.triangles().size(); ++i)
    if (t.triangles()[i].corner(v.colour) == v.index) out.push_back(static_cast<int>(i));
  return out;
}

struct ColourGraph {
  Colour colour;
  Colour first, second;
  std::size_t first_count = 0, second_count = 0;
  PlanarMap map;           // vertex ids: first class, then second class
  Bipartition bip;         // class_a = first
  std::vector<int> trinity_edge;  // local edge id -> trinity edge id

  int vertex_id(VertexRef v) const {
    return v.colour == first ? v.index : static_cast<int>(first_count) + v.index;
  }
  VertexRef vertex_ref(int id) const {
    return id < static_cast<int>(first_count) ? VertexRef{first, id} : VertexRef{second, id - static_cast<int>(first_count)};
  }
};

inline ColourGraph colour_graph(const Trinity& t, Colour c) {
  ColourGraph g;
  g.colour = c;
  std::tie(g.first, g.second) = colour_classes(c);
  g.first_count = t.count(g.first);
  g.second_count = t.count(g.second);
  g.trinity_edge = t.edges_of(c);
  std::vector<std::pair<int, int>> edges;
  for (int id : g.trinity_edge) {
    const auto& e = t.edges()[id];
    edges.emplace_back(g.vertex_id(e.first), g.vertex_id(e.second));
  }
  std::vector<std::vector<int>> rot(g.first_count + g.second_count);
  for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
    for (int id : t.rotation(g.vertex_ref(v)))
      if (t.edges()[id].colour == c) rot[v].push_back(t.edges()[id].local);
  }
  g.map = PlanarMap::build(rot.size(), edges, rot);
  std::vector<int> side(rot.size(), 0);
  for (std::size_t v = g.first_count; v < side.size(); ++v) side[v] = 1;
  g.bip = bipartition_from_sides(g.map, side);
  return g;
}

struct DirectedDual {
  Colour colour;
  std::size_t vertex_count = 0;
  std::vector<std::pair<int, int>> arcs;  // indexed by local edge id of that colour
};

// One arc per colour-c edge, from the c-corner of its black triangle to that of its white one.
inline DirectedDual directed_dual(const Trinity& t, Colour c) {
  DirectedDual d;
  d.colour = c;
  d.vertex_count = t.count(c);
  for (int id : t.edges_of(c)) {
    const auto& e = t.edges()[id];
    d.arcs.emplace_back(t.triangles()[e.black].corner(c), t.triangles()[e.white].corner(c));
  }
  return d;
}

inline bool is_balanced(const DirectedDual& d) {
  std::vector<long> bal(d.vertex_count, 0);
  for (auto [a, b] : d.arcs) ++bal[a], --bal[b];
  return std::all_of(bal.begin(), bal.end(), [](long x) { return x == 0; });
}

struct AdjMatrix {
  std::vector<VertexRef> rows;
  std::vector<int> cols;  // triangle ids
  std::vector<std::vector<int>> entries;

  RatMat to_ratmat() const {
    RatMat m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = entries[i][j];
    return m;
  }
};

// Rows: non-root vertices (violet, emerald, red); columns: white triangles other than the root.
inline AdjMatrix adjacency_matrix(const Trinity& t) {
  AdjMatrix a;
  const Triangle& root = t.triangles()[t.root_triangle()];
  for (Colour c : {Colour::Violet, Colour::Emerald, Colour::Red})
    for (int i = 0; i < static_cast<int>(t.count(c)); ++i)
      if (root.corner(c) != i) a.rows.push_back({c, i});
  for (int i = 0; i < static_cast<int>(t.triangles().size()); ++i)
    if (t.triangles()[i].shade == Shade::White && i != t.root_triangle()) a.cols.push_back(i);
  a.entries.assign(a.rows.size(), std::vector<int>(a.cols.size(), 0));
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t j = 0; j < a.cols.size(); ++j)
      a.entries[i][j] = t.triangles()[a.cols[j]].corner(a.rows[i].colour) == a.rows[i].index ? 1 : 0;
  return a;
}

// Perfect matchings of rows to columns through nonzero entries; each entry is
// the triangle id matched to each row, in row order.
inline std::vector<std::vector<int>> tutte_matchings(const Trinity& t) {
  AdjMatrix a = adjacency_matrix(t);
  std::vector<std::vector<int>> out;
  if (a.rows.size() != a.cols.size()) return out;
  std::vector<int> cur;
  std::vector<bool> used(a.cols.size(), false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == a.rows.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = 0; j < a.cols.size(); ++j) {
      if (used[j] || !a.entries[i][j]) continue;
      used[j] = true;
      cur.push_back(a.cols[j]);
      self(self, i + 1);
      cur.pop_back();
      used[j] = false;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace trinity
