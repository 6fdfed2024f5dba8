#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "trinity/lp.hpp"
#include "trinity/rational.hpp"

namespace trinity {

inline void check_same_dim(const std::vector<RatVec>& pts) {
  for (auto& p : pts)
    if (p.size() != pts.front().size()) fail(ErrorKind::Dimension, "points of differing dimension");
}

inline int affine_dim(const std::vector<RatVec>& pts) {
  if (pts.empty()) fail(ErrorKind::InvalidArgument, "affine dimension of empty set");
  check_same_dim(pts);
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return static_cast<int>(rank(diffs));
}

// x in conv(pts)?
inline bool in_hull(const std::vector<RatVec>& pts, const RatVec& x) {
  if (pts.empty()) return false;
  const std::size_t d = x.size();
  RatMat a(d + 1, pts.size());
  RatVec b(d + 1);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) a(i, j) = pts[j][i];
    a(d, j) = 1;
  }
  for (std::size_t i = 0; i < d; ++i) b[i] = x[i];
  b[d] = 1;
  return lp_feasible(a, b);
}

class VPolytope {
 public:
  VPolytope() = default;

  // Deduplicates and drops points lying in the hull of the rest.
  static VPolytope from_points(std::vector<RatVec> pts) {
    if (pts.empty()) fail(ErrorKind::InvalidArgument, "empty polytope");
    check_same_dim(pts);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<RatVec> keep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<RatVec> others;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (j != i) others.push_back(pts[j]);
      if (!in_hull(others, pts[i])) keep.push_back(pts[i]);
    }
    VPolytope p;
    p.dim_ = pts.front().size();
    p.verts_ = std::move(keep);
    return p;
  }
  static VPolytope from_int_points(const std::vector<IntVec>& pts) {
    std::vector<RatVec> r;
    for (auto& p : pts) r.push_back(to_rat(p));
    return from_points(std::move(r));
  }

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<RatVec>& vertices() const { return verts_; }
  int affine_dim() const { return trinity::affine_dim(verts_); }
  bool operator==(const VPolytope&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<RatVec> verts_;
};

inline bool contains_point(const VPolytope& p, const RatVec& x) {
  if (x.size() != p.ambient_dim()) fail(ErrorKind::Dimension, "point dimension differs from polytope");
  return in_hull(p.vertices(), x);
}

class LatticeSet {
 public:
  LatticeSet() = default;
  LatticeSet(std::size_t dim, std::vector<IntVec> pts) : dim_(dim), pts_(std::move(pts)) {
    for (auto& p : pts_)
      if (p.size() != dim_) fail(ErrorKind::Dimension, "lattice point dimension");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  }

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const std::vector<IntVec>& points() const { return pts_; }
  bool contains(const IntVec& p) const { return std::binary_search(pts_.begin(), pts_.end(), p); }
  bool operator==(const LatticeSet&) const = default;

  LatticeSet negated() const {
    std::vector<IntVec> out = pts_;
    for (auto& p : out)
      for (auto& x : p) x = -x;
    return {dim_, out};
  }
  LatticeSet translated(const IntVec& t) const {
    std::vector<IntVec> out = pts_;
    for (auto& p : out)
      for (std::size_t i = 0; i < dim_; ++i) p[i] += t[i];
    return {dim_, out};
  }
  IntVec coordinate_min() const {
    IntVec m(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < pts_.size(); ++k)
        m[i] = k == 0 ? pts_[k][i] : std::min(m[i], pts_[k][i]);
    return m;
  }
  IntVec coordinate_max() const {
    IntVec m(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < pts_.size(); ++k)
        m[i] = k == 0 ? pts_[k][i] : std::max(m[i], pts_[k][i]);
    return m;
  }
  // translate so the coordinatewise minimum is the origin
  LatticeSet canonical() const {
    IntVec m = coordinate_min();
    for (auto& x : m) x = -x;
    return translated(m);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<IntVec> pts_;
};

inline LatticeSet lattice_points(const VPolytope& p) {
  const std::size_t d = p.ambient_dim();
  const auto& vs = p.vertices();
  std::vector<long> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn = vs[0][i], mx = vs[0][i];
    for (auto& v : vs) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    Integer f, c;
    mpz_fdiv_q(f.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[i] = f.get_si();
    hi[i] = c.get_si();
  }
  // cheap affine-hull filter before the LP
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < vs.size(); ++i) diffs.push_back(sub(vs[i], vs[0]));
  std::vector<RatVec> normals = diffs.empty() ? nullspace({RatVec(d, Rational(0))}, d) : nullspace(diffs, d);
  std::vector<Rational> offsets;
  for (auto& n : normals) offsets.push_back(dot(n, vs[0]));

  std::vector<IntVec> out;
  IntVec cur = lo;
  if (d == 0) return LatticeSet(0, {IntVec{}});
  for (;;) {
    RatVec x = to_rat(cur);
    bool ok = true;
    for (std::size_t k = 0; k < normals.size() && ok; ++k) ok = dot(normals[k], x) == offsets[k];
    if (ok && in_hull(vs, x)) out.push_back(cur);
    std::size_t i = 0;
    while (i < d && cur[i] == hi[i]) cur[i] = lo[i], ++i;
    if (i == d) break;
    ++cur[i];
  }
  return LatticeSet(d, std::move(out));
}

namespace detail {

// Product of the diagonal after integer row/column diagonalisation.
// Equals the gcd of the maximal minors of a full-row-rank matrix; 0 if rank deficient.
inline Integer maximal_minor_gcd(std::vector<std::vector<Integer>> m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  const std::size_t n = m[0].size();
  Integer prod = 1;
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < k; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (m[i][j] != 0 && (!best || abs(m[i][j]) < abs(m[best->first][best->second]))) best = {i, j};
      if (!best) return 0;
      std::swap(m[t], m[best->first]);
      for (auto& row : m) std::swap(row[t], row[best->second]);
      bool clean = true;
      for (std::size_t i = t + 1; i < k; ++i) {
        if (m[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < k; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    prod *= abs(m[t][t]);
  }
  return prod;
}

}  // namespace detail

// Normalised volume w.r.t. the lattice of the simplex's own affine span.
// Vertices must be integral; 0 when they are affinely dependent.
inline Integer simplex_normalized_volume(const std::vector<RatVec>& verts) {
  if (verts.empty()) fail(ErrorKind::InvalidArgument, "empty simplex");
  check_same_dim(verts);
  std::vector<std::vector<Integer>> w;
  IntVec base = to_int(verts[0]);
  for (std::size_t i = 1; i < verts.size(); ++i) {
    IntVec p = to_int(verts[i]);
    std::vector<Integer> row(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) row[j] = p[j] - base[j];
    w.push_back(std::move(row));
  }
  if (!w.empty() && w.size() > w[0].size()) return 0;
  return detail::maximal_minor_gcd(std::move(w));
}

inline bool affinely_independent(const std::vector<RatVec>& pts) {
  return affine_dim(pts) + 1 == static_cast<int>(pts.size());
}

// S1 cap S2 == conv(shared vertices)?
inline bool intersect_in_common_face(const std::vector<RatVec>& s1, const std::vector<RatVec>& s2) {
  if (s1.empty() || s2.empty()) fail(ErrorKind::InvalidArgument, "empty simplex");
  if (s1[0].size() != s2[0].size()) fail(ErrorKind::Dimension, "simplices in different spaces");
  if (!affinely_independent(s1) || !affinely_independent(s2)) fail(ErrorKind::NotSimplex, "vertices not affinely independent");
  const std::size_t d = s1[0].size(), p = s1.size(), q = s2.size();
  RatMat a(d + 2, p + q);
  RatVec b(d + 2, Rational(0)), c(p + q, Rational(0));
  bool any_shared = false;
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < d; ++i) a(i, j) = s1[j][i];
    a(d, j) = 1;
    bool shared = std::find(s2.begin(), s2.end(), s1[j]) != s2.end();
    any_shared |= shared;
    if (!shared) c[j] = 1;
  }
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t i = 0; i < d; ++i) a(i, p + j) = -s2[j][i];
    a(d + 1, p + j) = 1;
  }
  b[d] = 1;
  b[d + 1] = 1;
  auto r = solve_lp(a, b, c);
  if (r.status == LpResult::Status::Infeasible) return !any_shared;
  return r.status == LpResult::Status::Optimal && r.value == 0;
}

}  // namespace trinity
