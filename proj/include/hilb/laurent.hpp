#pragma once

#include <map>
#include <sstream>
#include <string>

#include "hilb/basics.hpp"

namespace hilb {

// Truncated Laurent series in one auxiliary formal variable (z, t0, s, w, y,
// u) over an arbitrary coefficient module C.  The window [lo, hi] records
// which coefficients are exactly known; reading outside it is an error.
//
// C needs: default construction (zero), +, unary -, is_zero().  Products are
// free functions so that mixed-module multiplications (scalar series times
// vector series) resolve by decltype.
template <class C>
class Laurent {
 public:
  Laurent(char tag, int lo, int hi) : tag_(tag), lo_(lo), hi_(hi) {
    if (lo > hi) throw domain_error("empty series window");
  }

  char tag() const { return tag_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const std::map<int, C>& terms() const { return c_; }

  const C& coeff(int k) const {
    check_window(k);
    auto it = c_.find(k);
    if (it != c_.end()) return it->second;
    static const C zero{};
    return zero;
  }

  void add(int k, const C& v) {
    if (k < lo_ || k > hi_) return;  // outside the tracked window
    if (v.is_zero()) return;
    auto it = c_.find(k);
    if (it == c_.end()) {
      c_.emplace(k, v);
    } else {
      it->second = it->second + v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  void set(int k, C v) {
    check_window(k);
    if (v.is_zero())
      c_.erase(k);
    else
      c_[k] = std::move(v);
  }

  bool is_zero() const { return c_.empty(); }

  Laurent operator-() const {
    Laurent r(tag_, lo_, hi_);
    for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
    return r;
  }

  Laurent operator+(const Laurent& o) const {
    check_tag(o);
    Laurent r(tag_, std::max(lo_, o.lo_), std::min(hi_, o.hi_));
    for (const auto& [k, v] : c_) r.add(k, v);
    for (const auto& [k, v] : o.c_) r.add(k, v);
    return r;
  }

  Laurent operator-(const Laurent& o) const { return *this + (-o); }

  Laurent restricted(int lo, int hi) const {
    Laurent r(tag_, lo, hi);
    for (const auto& [k, v] : c_)
      if (k >= lo && k <= hi) r.c_.emplace(k, v);
    return r;
  }

  void check_tag(const Laurent& o) const {
    if (tag_ != o.tag_)
      throw domain_error(std::string("mixing series in '") + tag_ + "' and '" + o.tag_ + "'");
  }

 private:
  char tag_;
  int lo_, hi_;
  std::map<int, C> c_;

  void check_window(int k) const {
    if (k < lo_ || k > hi_)
      throw window_error(std::string("'") + tag_ + "'^" + std::to_string(k) +
                         " outside window [" + std::to_string(lo_) + "," + std::to_string(hi_) +
                         "]");
  }
};

// Known-window product: a coefficient of the result at exponent k is exact
// iff every contributing split lies inside the factors' windows.
template <class A, class B>
auto mul(const Laurent<A>& a, const Laurent<B>& b)
    -> Laurent<decltype(std::declval<A>() * std::declval<B>())> {
  a.check_tag(b);
  using C = decltype(std::declval<A>() * std::declval<B>());
  int lo = a.lo() + b.lo();
  int hi = std::min(a.hi() + b.lo(), b.hi() + a.lo());
  Laurent<C> r(a.tag(), lo, hi);
  for (const auto& [i, u] : a.terms())
    for (const auto& [j, v] : b.terms()) {
      if (i + j < lo || i + j > hi) continue;
      r.add(i + j, u * v);
    }
  return r;
}

template <class C, class S>
Laurent<C> mul_scalar(const Laurent<C>& a, const S& s) {
  Laurent<C> r(a.tag(), a.lo(), a.hi());
  for (const auto& [k, v] : a.terms()) r.add(k, v * s);
  return r;
}

template <class C>
Laurent<C> one_like(char tag, int lo, int hi, const C& unit) {
  Laurent<C> r(tag, lo, hi);
  r.add(0, unit);
  return r;
}

// exp of a series supported in strictly positive exponents (so the sum
// terminates inside the window).  C must be a commutative Q-algebra.
template <class C>
Laurent<C> exp_series(const Laurent<C>& s, const C& unit) {
  if (s.lo() < 1 && !s.restricted(s.lo(), std::min(0, s.hi())).is_zero())
    throw domain_error("exp needs strictly positive support");
  Laurent<C> arg = s.hi() >= 1 ? s.restricted(1, s.hi()) : Laurent<C>(s.tag(), 1, 1);
  Laurent<C> r = one_like(arg.tag(), 0, arg.hi(), unit);
  Laurent<C> p = r;
  Rat fact = 1;
  for (int j = 1; j <= arg.hi(); ++j) {
    p = mul(p, arg).restricted(0, arg.hi());
    if (p.is_zero()) break;
    fact *= j;
    Rat inv = 1 / fact;
    Laurent<C> q(p.tag(), p.lo(), p.hi());
    for (const auto& [k, v] : p.terms()) q.add(k, v * inv);
    r = r + q;
  }
  return r;
}

// Multiplicative inverse of a series whose lowest-order coefficient is an
// invertible element sitting at exponent 'val'.  C must support inverse().
template <class C>
Laurent<C> invert_series(const Laurent<C>& s, int val, const C& unit) {
  const C& head = s.coeff(val);
  if (head.is_zero()) throw domain_error("series inverse: vanishing leading coefficient");
  C head_inv = head.inverse();
  // s = head z^val (1 + w), w supported in positive exponents
  int wlen = std::max(0, s.hi() - val);
  Laurent<C> w(s.tag(), 1, std::max(1, wlen));
  for (const auto& [k, v] : s.terms())
    if (k != val) w.add(k - val, v * head_inv);
  Laurent<C> geo = one_like(s.tag(), 0, std::max(1, wlen), unit);
  Laurent<C> p = geo;
  for (int j = 1; j <= wlen; ++j) {
    p = mul(p, w).restricted(0, std::max(1, wlen));
    geo = (j % 2 == 1) ? geo - p : geo + p;
  }
  Laurent<C> r(s.tag(), -val, -val + wlen);
  for (const auto& [k, v] : geo.terms())
    if (k - val >= -val && k - val <= -val + wlen) r.add(k - val, v * head_inv);
  return r;
}

template <class C>
std::string series_str(const Laurent<C>& s, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")";
    if (k != 0) os << "*" << var << "^" << k;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << (s.hi() + 1) << ")";
  return os.str();
}

}  // namespace hilb
