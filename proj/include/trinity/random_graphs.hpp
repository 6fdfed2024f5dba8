#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include "trinity/document.hpp"

namespace trinity {

struct RandomGraphOptions {
  std::size_t max_edges = 8;
  std::size_t max_attempts = 100000;
};

namespace detail {

// Plain modulo draw: mt19937_64 output is specified exactly, the std
// distributions are not, so this keeps seeds portable across libraries.
inline std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

template <class T>
void portable_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

}  // namespace detail

// Connected simple bipartite graph: edge count, then cycle rank, then class
// sizes are drawn uniformly among feasible values. Rotations are reshuffled
// until the rotation system has genus zero.
inline GraphDocument random_plane_bipartite(std::mt19937_64& rng, const RandomGraphOptions& o = {}) {
  const std::size_t ne = 1 + detail::draw(rng, o.max_edges);
  std::vector<std::pair<std::size_t, std::size_t>> shapes;  // (violet, emerald)
  std::vector<std::size_t> ranks;
  for (std::size_t b = 0; b < ne; ++b) {
    const std::size_t total = ne + 1 - b;
    bool any = false;
    for (std::size_t nv = 1; nv < total; ++nv) any = any || nv * (total - nv) >= ne;
    if (any) ranks.push_back(b);
  }
  const std::size_t total = ne + 1 - ranks[detail::draw(rng, ranks.size())];
  for (std::size_t nv = 1; nv < total; ++nv)
    if (nv * (total - nv) >= ne) shapes.emplace_back(nv, total - nv);
  const auto [nv, nm] = shapes[detail::draw(rng, shapes.size())];

  // random tree by attaching vertices in shuffled order, each to an earlier
  // vertex of the other class; the order is redrawn until that is possible
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> have;
  auto is_violet = [&](int x) { return x < static_cast<int>(nv); };
  for (;;) {
    std::vector<int> order(total);
    for (std::size_t i = 0; i < total; ++i) order[i] = static_cast<int>(i);
    detail::portable_shuffle(order, rng);
    edges.clear();
    have.clear();
    std::vector<int> placed_v, placed_m;
    bool ok = true;
    for (std::size_t i = 0; i < total && ok; ++i) {
      int x = order[i];
      auto& mine = is_violet(x) ? placed_v : placed_m;
      auto& other = is_violet(x) ? placed_m : placed_v;
      if (i > 0 && other.empty()) ok = false;
      if (i > 0 && ok) {
        int y = other[detail::draw(rng, other.size())];
        std::pair<int, int> e = is_violet(x) ? std::pair{x, y} : std::pair{y, x};
        edges.push_back(e);
        have.insert(e);
      }
      mine.push_back(x);
    }
    if (ok) break;
  }
  while (edges.size() < ne) {
    std::pair<int, int> e{static_cast<int>(detail::draw(rng, nv)), static_cast<int>(nv + detail::draw(rng, nm))};
    if (have.insert(e).second) edges.push_back(e);
  }
  detail::portable_shuffle(edges, rng);

  GraphDocument d;
  for (std::size_t i = 0; i < nv; ++i) d.violet.push_back("v" + std::to_string(i + 1));
  for (std::size_t i = 0; i < nm; ++i) d.emerald.push_back("e" + std::to_string(i + 1));
  for (auto [a, b] : edges) d.edges.emplace_back(d.violet[a], d.emerald[b - nv]);
  for (std::size_t attempt = 0; attempt < o.max_attempts; ++attempt) {
    std::vector<std::vector<int>> rot(total);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      rot[edges[k].first].push_back(static_cast<int>(k));
      rot[edges[k].second].push_back(static_cast<int>(k));
    }
    for (auto& r : rot) detail::portable_shuffle(r, rng);
    d.rotations.clear();
    for (std::size_t v = 0; v < total; ++v) d.rotations.emplace_back(v < nv ? d.violet[v] : d.emerald[v - nv], rot[v]);
    d.outer_edge = static_cast<int>(detail::draw(rng, edges.size()));
    d.outer_side = detail::draw(rng, 2) ? "left" : "right";
    try {
      load_graph(d);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotPlanar) continue;
      throw;
    }
    return d;
  }
  fail(ErrorKind::Internal, "no planar rotation system found");
}

}  // namespace trinity
