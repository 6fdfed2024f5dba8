#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "trinity/errors.hpp"

namespace trinity {

// Combinatorial map. Edge k owns darts 2k (at its first end) and 2k+1.
// sigma is the counter-clockwise successor around a vertex; the face of a
// dart is its orbit under phi = sigma o alpha and lies to the dart's right.
class PlanarMap {
 public:
  PlanarMap() = default;

  // rotations[v] lists edge ids incident to v in counter-clockwise order.
  static PlanarMap build(std::size_t vertex_count, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<std::vector<int>>& rotations) {
    if (rotations.size() != vertex_count) fail(ErrorKind::InvalidArgument, "rotation count differs from vertex count");
    const std::size_t nd = 2 * edges.size();
    std::vector<int> dv(nd), sig(nd, -1);
    std::vector<int> degree(vertex_count, 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto [a, b] = edges[k];
      if (a < 0 || b < 0 || a >= static_cast<int>(vertex_count) || b >= static_cast<int>(vertex_count))
        fail(ErrorKind::InvalidArgument, "edge endpoint out of range");
      if (a == b) fail(ErrorKind::InvalidArgument, "loop edge " + std::to_string(k));
      dv[2 * k] = a;
      dv[2 * k + 1] = b;
      ++degree[a];
      ++degree[b];
    }
    std::vector<bool> seen(nd, false);
    for (std::size_t v = 0; v < vertex_count; ++v) {
      const auto& rot = rotations[v];
      if (static_cast<int>(rot.size()) != degree[v])
        fail(ErrorKind::InvalidArgument, "rotation at vertex " + std::to_string(v) + " does not list its incident edges");
      std::vector<int> darts;
      for (int e : rot) {
        if (e < 0 || e >= static_cast<int>(edges.size())) fail(ErrorKind::InvalidArgument, "rotation names unknown edge");
        int d = edges[e].first == static_cast<int>(v) ? 2 * e : edges[e].second == static_cast<int>(v) ? 2 * e + 1 : -1;
        if (d < 0 || seen[d]) fail(ErrorKind::InvalidArgument, "rotation at vertex " + std::to_string(v) + " is inconsistent");
        seen[d] = true;
        darts.push_back(d);
      }
      for (std::size_t i = 0; i < darts.size(); ++i) sig[darts[i]] = darts[(i + 1) % darts.size()];
    }
    return from_darts(vertex_count, std::move(dv), std::move(sig));
  }

  // Dart-level constructor; loops and multi-edges allowed.
  static PlanarMap from_darts(std::size_t vertex_count, std::vector<int> dart_vertex, std::vector<int> sigma) {
    PlanarMap m;
    m.nv_ = vertex_count;
    m.dv_ = std::move(dart_vertex);
    m.sig_ = std::move(sigma);
    if (m.dv_.size() % 2 != 0 || m.sig_.size() != m.dv_.size()) fail(ErrorKind::InvalidArgument, "malformed dart arrays");
    const std::size_t nd = m.dv_.size();
    m.siginv_.assign(nd, -1);
    for (std::size_t d = 0; d < nd; ++d) {
      int s = m.sig_[d];
      if (s < 0 || s >= static_cast<int>(nd) || m.siginv_[s] != -1 || m.dv_[s] != m.dv_[d])
        fail(ErrorKind::InvalidArgument, "sigma is not a vertex-preserving permutation");
      m.siginv_[s] = static_cast<int>(d);
    }
    m.rot_.assign(vertex_count, {});
    std::vector<bool> seen(nd, false);
    for (std::size_t d = 0; d < nd; ++d) {
      if (seen[d]) continue;
      int v = m.dv_[d];
      if (!m.rot_[v].empty()) fail(ErrorKind::InvalidArgument, "vertex has more than one sigma cycle");
      int x = static_cast<int>(d);
      do {
        seen[x] = true;
        m.rot_[v].push_back(x);
        x = m.sig_[x];
      } while (x != static_cast<int>(d));
    }
    m.compute_faces();
    m.validate();
    return m;
  }

  std::size_t vertex_count() const { return nv_; }
  std::size_t edge_count() const { return dv_.size() / 2; }
  std::size_t dart_count() const { return dv_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  static int alpha(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  int sigma(int d) const { return sig_[d]; }
  int sigma_inv(int d) const { return siginv_[d]; }
  int phi(int d) const { return sig_[alpha(d)]; }
  int phi_inv(int d) const { return alpha(siginv_[d]); }
  int vertex_of(int d) const { return dv_[d]; }
  int face_of(int d) const { return face_of_[d]; }
  std::pair<int, int> endpoints(int e) const { return {dv_[2 * e], dv_[2 * e + 1]}; }

  // darts at v starting from the smallest id, counter-clockwise
  const std::vector<int>& darts_at(int v) const { return rot_[v]; }
  // face orbits ordered by smallest dart id; each starts at that dart
  const std::vector<std::vector<int>>& faces() const { return faces_; }

  const std::vector<int>& dart_vertices() const { return dv_; }
  const std::vector<int>& sigma_array() const { return sig_; }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t e = 0; e < edge_count(); ++e) out.push_back(endpoints(static_cast<int>(e)));
    return out;
  }

 private:
  void compute_faces() {
    const std::size_t nd = dv_.size();
    face_of_.assign(nd, -1);
    faces_.clear();
    for (std::size_t d = 0; d < nd; ++d) {
      if (face_of_[d] != -1) continue;
      std::vector<int> orbit;
      int x = static_cast<int>(d);
      do {
        face_of_[x] = static_cast<int>(faces_.size());
        orbit.push_back(x);
        x = phi(x);
      } while (x != static_cast<int>(d));
      faces_.push_back(std::move(orbit));
    }
    if (nd == 0) faces_.push_back({});
  }

  void validate() const {
    if (nv_ == 0) fail(ErrorKind::InvalidArgument, "map with no vertices");
    for (std::size_t v = 0; v < nv_; ++v)
      if (rot_[v].empty() && nv_ > 1) fail(ErrorKind::Disconnected, "isolated vertex " + std::to_string(v));
    std::vector<bool> reached(nv_, false);
    std::queue<int> q;
    q.push(0);
    reached[0] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int d : rot_[v]) {
        int w = dv_[alpha(d)];
        if (!reached[w]) reached[w] = true, q.push(w);
      }
    }
    for (bool r : reached)
      if (!r) fail(ErrorKind::Disconnected, "graph is not connected");
    long chi = static_cast<long>(nv_) - static_cast<long>(edge_count()) + static_cast<long>(faces_.size());
    if (chi != 2) fail(ErrorKind::NotPlanar, "rotation system has Euler characteristic " + std::to_string(chi));
  }

  std::size_t nv_ = 0;
  std::vector<int> dv_, sig_, siginv_, face_of_;
  std::vector<std::vector<int>> rot_, faces_;
};

// Dual dart d* sits at face_of(d) and crosses edge_of(d); around a face the
// counter-clockwise order reverses the face orbit. Dual faces are
// {alpha(d) : d at v} for primal vertices v.
inline PlanarMap planar_dual(const PlanarMap& m) {
  const std::size_t nd = m.dart_count();
  std::vector<int> dv(nd), sig(nd);
  for (std::size_t d = 0; d < nd; ++d) {
    dv[d] = m.face_of(static_cast<int>(d));
    sig[d] = m.phi_inv(static_cast<int>(d));
  }
  return PlanarMap::from_darts(m.face_count(), std::move(dv), std::move(sig));
}

// Orientation-preserving isomorphism of connected maps.
inline bool isomorphic(const PlanarMap& a, const PlanarMap& b) {
  if (a.vertex_count() != b.vertex_count() || a.dart_count() != b.dart_count() || a.face_count() != b.face_count())
    return false;
  const std::size_t nd = a.dart_count();
  if (nd == 0) return true;
  for (std::size_t t = 0; t < nd; ++t) {
    std::vector<int> f(nd, -1), finv(nd, -1);
    std::vector<int> stack{0};
    f[0] = static_cast<int>(t);
    finv[t] = 0;
    bool ok = true;
    while (ok && !stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      std::pair<int, int> next[2] = {{a.sigma(d), b.sigma(f[d])}, {PlanarMap::alpha(d), PlanarMap::alpha(f[d])}};
      for (auto [x, y] : next) {
        if (f[x] == -1 && finv[y] == -1) {
          f[x] = y;
          finv[y] = x;
          stack.push_back(x);
        } else if (f[x] != y) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

struct Bipartition {
  std::vector<int> class_a, class_b;
  std::vector<int> side;  // 0 for class_a, 1 for class_b
};

inline Bipartition bipartition(const PlanarMap& m) {
  std::vector<int> side(m.vertex_count(), -1);
  side[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int d : m.darts_at(v)) {
      int w = m.vertex_of(PlanarMap::alpha(d));
      if (side[w] == -1) {
        side[w] = 1 - side[v];
        q.push(w);
      } else if (side[w] == side[v]) {
        fail(ErrorKind::NotBipartite, "odd cycle through vertex " + std::to_string(w));
      }
    }
  }
  Bipartition b;
  b.side = side;
  for (std::size_t v = 0; v < side.size(); ++v) (side[v] == 0 ? b.class_a : b.class_b).push_back(static_cast<int>(v));
  return b;
}

inline long betti1(const PlanarMap& m) {
  return static_cast<long>(m.edge_count()) - static_cast<long>(m.vertex_count()) + 1;
}

}  // namespace trinity

namespace trinity {

// Bipartition from a prescribed side per vertex; checks it is proper.
inline Bipartition bipartition_from_sides(const PlanarMap& m, const std::vector<int>& side) {
  if (side.size() != m.vertex_count()) fail(ErrorKind::InvalidArgument, "side vector size");
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    auto [a, b] = m.endpoints(static_cast<int>(e));
    if (side[a] == side[b]) fail(ErrorKind::NotBipartite, "edge " + std::to_string(e) + " joins one colour class");
  }
  Bipartition b;
  b.side = side;
  for (std::size_t v = 0; v < side.size(); ++v) (side[v] == 0 ? b.class_a : b.class_b).push_back(static_cast<int>(v));
  return b;
}

}  // namespace trinity
