#pragma once

#include <map>
#include <string>
#include <utility>

#include "trinity/rational.hpp"

namespace trinity {

// One-variable Laurent polynomial with integer coefficients.
class Laurent1 {
 public:
  Laurent1() = default;
  static Laurent1 monomial(int e, Integer c = 1) {
    Laurent1 p;
    if (c != 0) p.c_[e] = c;
    return p;
  }
  static Laurent1 constant(Integer c) { return monomial(0, std::move(c)); }
  // ascending coefficients from power 0
  static Laurent1 from_ascending(const std::vector<Integer>& coeffs) {
    Laurent1 p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) p.c_[static_cast<int>(i)] = coeffs[i];
    return p;
  }

  const std::map<int, Integer>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Integer coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Integer(0) : it->second;
  }
  int max_degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }
  int min_degree() const { return c_.empty() ? 0 : c_.begin()->first; }
  Integer leading_coefficient() const { return c_.empty() ? Integer(0) : c_.rbegin()->second; }

  Laurent1& operator+=(const Laurent1& o) {
    for (auto& [e, v] : o.c_) add(e, v);
    return *this;
  }
  Laurent1& operator-=(const Laurent1& o) {
    for (auto& [e, v] : o.c_) add(e, -v);
    return *this;
  }
  friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { return a += b; }
  friend Laurent1 operator-(Laurent1 a, const Laurent1& b) { return a -= b; }
  friend Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
    Laurent1 r;
    for (auto& [e1, v1] : a.c_)
      for (auto& [e2, v2] : b.c_) r.add(e1 + e2, v1 * v2);
    return r;
  }
  bool operator==(const Laurent1&) const = default;

  // p(x^k)
  Laurent1 substitute_power(int k) const {
    Laurent1 r;
    for (auto& [e, v] : c_) r.add(e * k, v);
    return r;
  }
  // p(x + a), p must be a polynomial
  Laurent1 shift(long a) const {
    Laurent1 r, base = monomial(1) + constant(a);
    for (auto& [e, v] : c_) {
      if (e < 0) fail(ErrorKind::InvalidArgument, "shift of a Laurent polynomial with negative powers");
      Laurent1 pw = constant(1);
      for (int i = 0; i < e; ++i) pw = pw * base;
      r += pw * constant(v);
    }
    return r;
  }
  Integer evaluate_at_one() const {
    Integer s = 0;
    for (auto& [e, v] : c_) s += v;
    return s;
  }

  std::string str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto& [e, v] = *it;
      bool neg = v < 0;
      Integer a = abs(v);
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      bool unit = a == 1 && e != 0;
      if (!unit) out += a.get_str();
      if (e != 0) {
        if (!unit) out += "*";
        out += var;
        if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
      }
    }
    return out;
  }

 private:
  void add(int e, const Integer& v) {
    if (v == 0) return;
    auto& slot = c_[e];
    slot += v;
    if (slot == 0) c_.erase(e);
  }
  std::map<int, Integer> c_;
};

// Laurent polynomial in v and z.
class Laurent2 {
 public:
  using Key = std::pair<int, int>;  // (v exponent, z exponent)
  Laurent2() = default;
  static Laurent2 monomial(int ev, int ez, Integer c = 1) {
    Laurent2 p;
    if (c != 0) p.c_[{ev, ez}] = c;
    return p;
  }
  static Laurent2 one() { return monomial(0, 0); }

  const std::map<Key, Integer>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Integer coeff(int ev, int ez) const {
    auto it = c_.find({ev, ez});
    return it == c_.end() ? Integer(0) : it->second;
  }

  Laurent2& operator+=(const Laurent2& o) {
    for (auto& [k, v] : o.c_) add(k, v);
    return *this;
  }
  Laurent2& operator-=(const Laurent2& o) {
    for (auto& [k, v] : o.c_) add(k, -v);
    return *this;
  }
  friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
  friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
  friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
    Laurent2 r;
    for (auto& [k1, v1] : a.c_)
      for (auto& [k2, v2] : b.c_) r.add({k1.first + k2.first, k1.second + k2.second}, v1 * v2);
    return r;
  }
  bool operator==(const Laurent2&) const = default;

  // P(v^-1, -z)
  Laurent2 mirrored() const {
    Laurent2 r;
    for (auto& [k, v] : c_) r.add({-k.first, k.second}, k.second % 2 == 0 ? v : Integer(-v));
    return r;
  }
  // P(v^-1, z)
  Laurent2 v_inverted() const {
    Laurent2 r;
    for (auto& [k, v] : c_) r.add({-k.first, k.second}, v);
    return r;
  }
  // P(1, z)
  Laurent1 at_v_one() const {
    Laurent1 r;
    for (auto& [k, v] : c_) r += Laurent1::monomial(k.second, v);
    return r;
  }
  // coefficient of z^k as a polynomial in v
  Laurent1 z_coefficient(int k) const {
    Laurent1 r;
    for (auto& [key, v] : c_)
      if (key.second == k) r += Laurent1::monomial(key.first, v);
    return r;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    // descending by v, then by z
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto& [k, v] = *it;
      bool neg = v < 0;
      Integer a = abs(v);
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      std::string mono;
      auto pw = [](const char* var, int e) {
        std::string s = var;
        if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        return s;
      };
      if (k.first != 0) mono += pw("v", k.first);
      if (k.second != 0) mono += (mono.empty() ? "" : "*") + pw("z", k.second);
      if (mono.empty())
        out += a.get_str();
      else if (a == 1)
        out += mono;
      else
        out += a.get_str() + "*" + mono;
    }
    return out;
  }

 private:
  void add(const Key& k, const Integer& v) {
    if (v == 0) return;
    auto& slot = c_[k];
    slot += v;
    if (slot == 0) c_.erase(k);
  }
  std::map<Key, Integer> c_;
};

}  // namespace trinity
