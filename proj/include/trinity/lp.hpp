#pragma once

#include <optional>
#include <vector>

#include "trinity/rational.hpp"

namespace trinity {

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational value;
  RatVec solution;
};

namespace detail {

struct Tableau {
  std::vector<RatVec> t;  // rows, each of width ncols
  RatVec rhs;
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t[r][c];
    for (auto& x : t[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rational f = t[i][c];
      for (std::size_t j = 0; j < ncols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Maximise cost over allowed columns with Bland's rule. false on unbounded.
  bool optimise(const RatVec& cost, std::size_t usable_cols) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < usable_cols; ++j) {
        Rational r = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i)
          if (t[i][j] != 0) r -= cost[basis[i]] * t[i][j];
        if (r > 0) { enter = j; break; }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][*enter] <= 0) continue;
        Rational ratio = rhs[i] / t[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace detail

// maximise c.x subject to A x = b, x >= 0. Exact two-phase simplex.
inline LpResult solve_lp(const RatMat& a, const RatVec& b, const RatVec& c) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n) fail(ErrorKind::Dimension, "lp shape mismatch");
  detail::Tableau tab;
  tab.ncols = n + m;
  tab.t.assign(m, RatVec(n + m, Rational(0)));
  tab.rhs.resize(m);
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool neg = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = neg ? Rational(-a(i, j)) : a(i, j);
    tab.rhs[i] = neg ? Rational(-b[i]) : b[i];
    tab.t[i][n + i] = 1;
    tab.basis[i] = n + i;
  }
  RatVec phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.optimise(phase1, n + m);
  Rational infeas = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= n) infeas += tab.rhs[i];
  LpResult res;
  if (infeas != 0) {
    res.status = LpResult::Status::Infeasible;
    return res;
  }
  // drive artificials out, drop redundant rows
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < n) { ++i; continue; }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.t[i][j] != 0) { col = j; break; }
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<long>(i));
      tab.rhs.erase(tab.rhs.begin() + static_cast<long>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<long>(i));
    }
  }
  RatVec phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!tab.optimise(phase2, n)) {
    res.status = LpResult::Status::Unbounded;
    return res;
  }
  res.status = LpResult::Status::Optimal;
  res.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.t.size(); ++i) res.solution[tab.basis[i]] = tab.rhs[i];
  res.value = dot(c, res.solution);
  return res;
}

inline bool lp_feasible(const RatMat& a, const RatVec& b) {
  return solve_lp(a, b, RatVec(a.cols(), Rational(0))).status != LpResult::Status::Infeasible;
}

}  // namespace trinity
