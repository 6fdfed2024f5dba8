#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "trinity/exactgeom.hpp"
#include "trinity/trinity.hpp"

namespace trinity {

struct SpanningTree {
  std::vector<int> edges;  // sorted edge ids
  auto operator<=>(const SpanningTree&) const = default;
};

struct Arborescence {
  int root = 0;
  std::vector<int> arcs;  // sorted arc ids
  auto operator<=>(const Arborescence&) const = default;
};

namespace detail {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace detail

// Include-first branching on edge ids yields trees in lexicographic order.
inline void for_each_spanning_tree(std::size_t vertex_count, const std::vector<std::pair<int, int>>& edges,
                                   const std::function<void(const SpanningTree&)>& visit) {
  const std::size_t need = vertex_count - 1;
  std::vector<int> chosen;
  auto connectable = [&](const detail::Dsu& dsu, std::size_t from) {
    detail::Dsu d = dsu;
    std::size_t comps = 0;
    for (std::size_t v = 0; v < vertex_count; ++v)
      if (d.find(static_cast<int>(v)) == static_cast<int>(v)) ++comps;
    for (std::size_t k = from; k < edges.size() && comps > 1; ++k)
      if (d.unite(edges[k].first, edges[k].second)) --comps;
    return comps == 1;
  };
  auto rec = [&](auto&& self, std::size_t k, const detail::Dsu& dsu) -> void {
    if (chosen.size() == need) {
      visit(SpanningTree{chosen});
      return;
    }
    if (k == edges.size()) return;
    detail::Dsu with = dsu;
    if (with.unite(edges[k].first, edges[k].second)) {
      chosen.push_back(static_cast<int>(k));
      self(self, k + 1, with);
      chosen.pop_back();
    }
    if (connectable(dsu, k + 1)) self(self, k + 1, dsu);
  };
  detail::Dsu start(vertex_count);
  if (connectable(start, 0)) rec(rec, 0, start);
}

inline std::vector<SpanningTree> enumerate_spanning_trees(const PlanarMap& g) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g.vertex_count(), g.edge_list(), [&](const SpanningTree& t) { out.push_back(t); });
  return out;
}

inline bool is_spanning_tree(std::size_t vertex_count, const std::vector<std::pair<int, int>>& edges, const SpanningTree& t) {
  if (t.edges.size() + 1 != vertex_count) return false;
  detail::Dsu d(vertex_count);
  for (int e : t.edges)
    if (!d.unite(edges[e].first, edges[e].second)) return false;
  return true;
}

// Complementary edges, as a spanning tree of planar_dual(g).
inline SpanningTree dual_tree(const PlanarMap& g, const SpanningTree& t) {
  SpanningTree out;
  std::vector<bool> in(g.edge_count(), false);
  for (int e : t.edges) in[e] = true;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!in[e]) out.edges.push_back(static_cast<int>(e));
  return out;
}

// Degree of each `side` vertex in the tree, minus one, in the order of `side`.
inline IntVec hypertree_of(const PlanarMap& g, const SpanningTree& t, const std::vector<int>& side) {
  std::vector<long> deg(g.vertex_count(), 0);
  for (int e : t.edges) {
    auto [a, b] = g.endpoints(e);
    ++deg[a];
    ++deg[b];
  }
  IntVec out;
  for (int v : side) out.push_back(deg[v] - 1);
  return out;
}

// Hypergraph (X, Y): vertices X, hyperedges Y, drawn from the colour graph
// whose classes are X and Y.
struct Hypergraph {
  Colour vertices, hyperedges;
  Colour graph_colour() const { return third_colour(vertices, hyperedges); }
  std::string name() const { return std::string{'(', colour_letter(vertices), ',', colour_letter(hyperedges), ')'}; }
  auto operator<=>(const Hypergraph&) const = default;
};

inline Hypergraph transpose(Hypergraph h) { return {h.hyperedges, h.vertices}; }

inline const std::vector<Hypergraph>& all_hypergraphs() {
  static const std::vector<Hypergraph> hs = {
      {Colour::Violet, Colour::Emerald}, {Colour::Emerald, Colour::Violet}, {Colour::Red, Colour::Violet},
      {Colour::Violet, Colour::Red},     {Colour::Emerald, Colour::Red},    {Colour::Red, Colour::Emerald},
  };
  return hs;
}

// vertex ids of class c in the colour graph, in class order
inline std::vector<int> class_vertices(const ColourGraph& g, Colour c) {
  std::vector<int> out;
  std::size_t n = c == g.first ? g.first_count : g.second_count;
  for (std::size_t i = 0; i < n; ++i) out.push_back(g.vertex_id({c, static_cast<int>(i)}));
  return out;
}

inline LatticeSet hypertree_set(const ColourGraph& g, Colour hyperedge_class) {
  auto side = class_vertices(g, hyperedge_class);
  std::vector<IntVec> pts;
  for_each_spanning_tree(g.map.vertex_count(), g.map.edge_list(),
                         [&](const SpanningTree& t) { pts.push_back(hypertree_of(g.map, t, side)); });
  return LatticeSet(side.size(), std::move(pts));
}

inline LatticeSet hypertree_set(const Trinity& t, Hypergraph h) {
  return hypertree_set(colour_graph(t, h.graph_colour()), h.hyperedges);
}

// Matrix-tree theorem on the in-degree Laplacian with the root row/column removed.
inline Integer count_arborescences(const DirectedDual& d, int root) {
  const std::size_t n = d.vertex_count;
  if (root < 0 || root >= static_cast<int>(n)) fail(ErrorKind::InvalidArgument, "root out of range");
  std::vector<std::vector<long>> lap(n, std::vector<long>(n, 0));
  for (auto [a, b] : d.arcs) {
    if (a == b) continue;
    lap[b][b] += 1;
    lap[a][b] -= 1;
  }
  RatMat m(n - 1, n - 1);
  for (std::size_t i = 0, ii = 0; i < n; ++i) {
    if (static_cast<int>(i) == root) continue;
    for (std::size_t j = 0, jj = 0; j < n; ++j) {
      if (static_cast<int>(j) == root) continue;
      m(ii, jj++) = lap[i][j];
    }
    ++ii;
  }
  Rational det = det_exact(m);
  return det.get_num();
}

// Branch on the smallest-id frontier arc: take it or ban it.
inline std::vector<Arborescence> enumerate_arborescences(const DirectedDual& d, int root) {
  const std::size_t n = d.vertex_count;
  if (root < 0 || root >= static_cast<int>(n)) fail(ErrorKind::InvalidArgument, "root out of range");
  std::vector<Arborescence> out;
  std::vector<bool> reached(n, false), banned(d.arcs.size(), false);
  reached[root] = true;
  std::size_t reached_count = 1;
  std::vector<int> chosen;
  auto still_spannable = [&]() {
    std::vector<bool> r = reached;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t k = 0; k < d.arcs.size(); ++k) {
        auto [a, b] = d.arcs[k];
        if (!banned[k] && r[a] && !r[b]) r[b] = true, grew = true;
      }
    }
    return std::all_of(r.begin(), r.end(), [](bool x) { return x; });
  };
  auto rec = [&](auto&& self) -> void {
    if (reached_count == n) {
      Arborescence a{root, chosen};
      std::sort(a.arcs.begin(), a.arcs.end());
      out.push_back(std::move(a));
      return;
    }
    int pick = -1;
    for (std::size_t k = 0; k < d.arcs.size(); ++k) {
      auto [a, b] = d.arcs[k];
      if (!banned[k] && reached[a] && !reached[b]) { pick = static_cast<int>(k); break; }
    }
    if (pick < 0) return;
    int target = d.arcs[pick].second;
    reached[target] = true;
    ++reached_count;
    chosen.push_back(pick);
    self(self);
    chosen.pop_back();
    --reached_count;
    reached[target] = false;
    banned[pick] = true;
    if (still_spannable()) self(self);
    banned[pick] = false;
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

// The spanning tree of the colour graph complementary to an arborescence.
inline SpanningTree arborescence_dual_tree(const ColourGraph& g, const Arborescence& a) {
  std::vector<bool> in(g.map.edge_count(), false);
  for (int k : a.arcs) in[k] = true;
  SpanningTree t;
  for (std::size_t e = 0; e < g.map.edge_count(); ++e)
    if (!in[e]) t.edges.push_back(static_cast<int>(e));
  return t;
}

inline IntVec arborescence_to_hypertree(const Trinity& t, Colour c, const Arborescence& a, Colour hyperedge_class) {
  ColourGraph g = colour_graph(t, c);
  if (hyperedge_class == c || (hyperedge_class != g.first && hyperedge_class != g.second))
    fail(ErrorKind::InvalidArgument, "hyperedge class must be one of the colour graph's classes");
  return hypertree_of(g.map, arborescence_dual_tree(g, a), class_vertices(g, hyperedge_class));
}

// default side: red -> E, violet -> R, emerald -> V
inline Colour default_hyperedge_class(Colour c) { return colour_classes(c).second; }

}  // namespace trinity
