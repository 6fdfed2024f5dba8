#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "trinity/errors.hpp"

namespace trinity {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<long>;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline IntVec to_int(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) fail(ErrorKind::InvalidArgument, "non-integral coordinate " + v[i].get_str());
    out[i] = v[i].get_num().get_si();
  }
  return out;
}

// dense row-major
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMat from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return {};
    RatMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) fail(ErrorKind::Dimension, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static RatMat from_ints(const std::vector<std::vector<long>>& rows) {
    std::vector<RatVec> r;
    for (auto& row : rows) r.push_back(to_rat(row));
    return from_rows(r);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool operator==(const RatMat&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

inline Integer lcm_of_denominators(const RatMat& m, std::size_t row) {
  Integer l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(row, j).get_den_mpz_t());
  }
  return l;
}

// Bareiss on the row-scaled integer matrix.
inline Rational det_exact(const RatMat& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::Dimension, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = lcm_of_denominators(a, i);
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = a(i, j) * l;
      m[i][j] = v.get_num();
    }
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Rational d(m[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<RatVec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline std::size_t rank(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  return rref(rows, cols).size();
}

// Basis of {x : row . x = 0 for all rows}.
inline std::vector<RatVec> nullspace(std::vector<RatVec> rows, std::size_t cols) {
  auto piv = rref(rows, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    RatVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace trinity
