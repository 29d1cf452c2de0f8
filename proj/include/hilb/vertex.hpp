#pragma once

#include <functional>

#include "hilb/fock.hpp"
#include "hilb/laurent.hpp"

namespace hilb {

// binomial coefficient with a rational-function top argument
RatFunc binomial_rf(const RatFunc& c, int k);

namespace vertex {

using FockSeries = Laurent<FockVector>;
using ModeCoeff = std::function<RatFunc(int)>;  // k >= 1 -> scalar

// exp(sum_{k>=1} c(k) z^{-k} a_k) v — terminates exactly (annihilators are
// nilpotent on a finite vector).
FockSeries apply_exp_ann(const ModeCoeff& c, char tag, const FockVector& v, int lo, int hi);
// exp(sum_{k>=1} c(k) z^{k} a_{-k}) applied to every coefficient of a series;
// truncated by the window.
FockSeries apply_exp_cre(const ModeCoeff& c, const FockSeries& s);
FockSeries apply_exp_cre(const ModeCoeff& c, char tag, const FockVector& v, int lo, int hi);

// Gamma_+(z)^r and Gamma_-(z)^r = exp(r sum z^{-+k}/k a_{+-k}).
FockSeries gamma_plus_pow(const RatFunc& r, char tag, const FockVector& v, int lo, int hi);
FockSeries gamma_minus_pow(const RatFunc& r, const FockSeries& s);
FockSeries gamma_minus_pow(const RatFunc& r, char tag, const FockVector& v, int lo, int hi);

// Four-parameter deformed vertex operator
//   V(z; q,t,qq,tt) = exp(sum (q^k-qq^k) z^k/k a_{-k}) exp(sum (tt^k-t^k) z^{-k}/k a_k).
FockSeries V_apply(const RatFunc& q, const RatFunc& t, const RatFunc& qq, const RatFunc& tt,
                   char tag, const FockVector& v, int lo, int hi);
// Zero mode of V; exact, window inferred from the degree of v.
FockVector V0_apply(const RatFunc& q, const RatFunc& t, const RatFunc& qq, const RatFunc& tt,
                    const FockVector& v);

// (1 - V_0(z; t, 1/t, 1, q/t)) / ((1-q)(1-1/t)) — the Macdonald-integral-form
// eigenoperator; q, t are formal scalars.
FockVector bbar_apply(const FockVector& v, const RatFunc& q, const RatFunc& t);

// Zero mode of the companion operator with creation coefficients -1/k and
// annihilation coefficients (1-q^k)(1-t^k)/k; eigenoperator of the
// transformed basis when combined as (1 - V~_0)/((1-q)(1-t)).
FockVector vtilde0_apply(const RatFunc& q, const RatFunc& t, const FockVector& v);
FockVector b_transformed_apply(const FockVector& v, const RatFunc& q, const RatFunc& t);

// Coefficient of t0^k in the normally ordered expansion of the eigenoperator
// at q = e^{alpha t0}, t = e^{t0}; alpha stays a polynomial variable.
// Monomials are restricted to |parts| <= part_bound (lengths <= k+2 occur).
NormalOrderedOp bbar_k(int k, int part_bound);

// Gamma_-(z)^{m+t1+t2} Gamma_+(z)^{m/(t1 t2)} applied to v.
FockSeries W_apply(const FockVector& v, char tag, int lo, int hi);

// Two-variable window for identities that mix z and y powers.
struct BiFock {
  int lo1, hi1, lo2, hi2;
  std::map<std::pair<int, int>, FockVector> c;
  BiFock(int l1, int h1, int l2, int h2) : lo1(l1), hi1(h1), lo2(l2), hi2(h2) {}
  void add(int e1, int e2, const FockVector& v) {
    if (e1 < lo1 || e1 > hi1 || e2 < lo2 || e2 > hi2) return;
    if (v.is_zero()) return;
    auto key = std::make_pair(e1, e2);
    auto it = c.find(key);
    if (it == c.end())
      c.emplace(key, v);
    else {
      it->second += v;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  FockVector coeff(int e1, int e2) const {
    if (e1 < lo1 || e1 > hi1 || e2 < lo2 || e2 > hi2)
      throw window_error("bivariate exponent outside window");
    auto it = c.find({e1, e2});
    return it == c.end() ? FockVector() : it->second;
  }
  bool operator==(const BiFock& o) const { return c == o.c; }
};

// Gamma_+(z)^a then Gamma_-(y)^b (and the reversed order) on v, tracked in
// both exponents.
BiFock gamma_plus_then_minus(const RatFunc& a, const RatFunc& b, const FockVector& v, int zlo,
                             int zhi, int ylo, int yhi);
BiFock gamma_minus_then_plus(const RatFunc& a, const RatFunc& b, const FockVector& v, int zlo,
                             int zhi, int ylo, int yhi);

}  // namespace vertex
}  // namespace hilb
