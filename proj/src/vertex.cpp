#include "hilb/vertex.hpp"

#include "hilb/symfunc.hpp"

namespace hilb {

RatFunc binomial_rf(const RatFunc& c, int k) {
  RatFunc b(1);
  for (int i = 0; i < k; ++i) b *= (c - RatFunc(Rat(i))) * RatFunc(frac(1, i + 1));
  return b;
}

namespace vertex {

namespace {

RatFunc t1v() { return RatFunc::var(kT1); }
RatFunc t2v() { return RatFunc::var(kT2); }

// coefficient of a mode pattern mu: prod_k c(k)^{m_k} / m_k!
RatFunc pattern_coeff(const ModeCoeff& c, const Partition& mu) {
  RatFunc r(1);
  for (const auto& [part, m] : mu.multiplicities()) r *= c(part).pow(m) * RatFunc(1 / factorial(m));
  return r;
}

}  // namespace

FockSeries apply_exp_ann(const ModeCoeff& c, char tag, const FockVector& v, int lo, int hi) {
  // Annihilation patterns reach exactly the exponents -max_degree(v)..0, so
  // widen the working window to keep every exact coefficient, then clip.
  int maxdeg = v.max_degree();
  FockSeries out(tag, std::min(lo, -maxdeg), std::max(hi, 0));
  for (int d = 0; d <= maxdeg; ++d) {
    for (const auto& mu : partitions_of(d)) {
      RatFunc coeff = pattern_coeff(c, mu);
      if (coeff.is_zero()) continue;
      FockVector img = apply_monomial(GenPartition::of_parts(mu.parts()), v);
      out.add(-d, img * coeff);
    }
  }
  return out.restricted(lo, hi);
}

FockSeries apply_exp_cre(const ModeCoeff& c, const FockSeries& s) {
  FockSeries out(s.tag(), s.lo(), s.hi());
  for (const auto& [e, vec] : s.terms()) {
    for (int d = 0; e + d <= s.hi(); ++d) {
      if (e + d < s.lo()) continue;
      for (const auto& mu : partitions_of(d)) {
        RatFunc coeff = pattern_coeff(c, mu);
        if (coeff.is_zero()) continue;
        FockVector img = apply_monomial(GenPartition::creation_of(mu), vec);
        out.add(e + d, img * coeff);
      }
    }
  }
  return out;
}

FockSeries apply_exp_cre(const ModeCoeff& c, char tag, const FockVector& v, int lo, int hi) {
  FockSeries unit(tag, std::min(lo, 0), hi);
  unit.add(0, v);
  return apply_exp_cre(c, unit).restricted(lo, hi);
}

FockSeries gamma_plus_pow(const RatFunc& r, char tag, const FockVector& v, int lo, int hi) {
  return apply_exp_ann([r](int k) { return r * RatFunc(frac(1, k)); }, tag, v, lo, hi);
}

FockSeries gamma_minus_pow(const RatFunc& r, const FockSeries& s) {
  return apply_exp_cre([r](int k) { return r * RatFunc(frac(1, k)); }, s);
}

FockSeries gamma_minus_pow(const RatFunc& r, char tag, const FockVector& v, int lo, int hi) {
  return apply_exp_cre([r](int k) { return r * RatFunc(frac(1, k)); }, tag, v, lo, hi);
}

FockSeries V_apply(const RatFunc& q, const RatFunc& t, const RatFunc& qq, const RatFunc& tt,
                   char tag, const FockVector& v, int lo, int hi) {
  int full_lo = std::min(lo, -v.max_degree());
  FockSeries ann = apply_exp_ann(
      [&](int k) { return (tt.pow(k) - t.pow(k)) * RatFunc(frac(1, k)); }, tag, v, full_lo,
      std::max(hi, 0));
  FockSeries all = apply_exp_cre(
      [&](int k) { return (q.pow(k) - qq.pow(k)) * RatFunc(frac(1, k)); }, ann);
  return all.restricted(lo, hi);
}

FockVector V0_apply(const RatFunc& q, const RatFunc& t, const RatFunc& qq, const RatFunc& tt,
                    const FockVector& v) {
  int d = v.max_degree();
  return V_apply(q, t, qq, tt, 'z', v, -d, d).coeff(0);
}

FockVector bbar_apply(const FockVector& v, const RatFunc& q, const RatFunc& t) {
  FockVector v0 = V0_apply(t, t.inverse(), RatFunc(1), q * t.inverse(), v);
  RatFunc pref = (RatFunc(1) - q) * (RatFunc(1) - t.inverse());
  return (v - v0) * pref.inverse();
}

FockVector vtilde0_apply(const RatFunc& q, const RatFunc& t, const FockVector& v) {
  int d = v.max_degree();
  FockSeries ann = apply_exp_ann(
      [&](int k) {
        return (RatFunc(1) - q.pow(k)) * (RatFunc(1) - t.pow(k)) * RatFunc(frac(1, k));
      },
      'z', v, -d, d);
  FockSeries full = apply_exp_cre([&](int k) { return RatFunc(frac(-1, k)); }, ann);
  return full.coeff(0);
}

FockVector b_transformed_apply(const FockVector& v, const RatFunc& q, const RatFunc& t) {
  FockVector v0 = vtilde0_apply(q, t, v);
  RatFunc pref = (RatFunc(1) - q) * (RatFunc(1) - t);
  return (v - v0) * pref.inverse();
}

NormalOrderedOp bbar_k(int k, int part_bound) {
  if (k < 0) throw domain_error("negative coefficient index");
  int ord = k + 2;
  RatFunc alpha = RatFunc::var(kAlpha);

  // -1 / ((q-1)(1/t-1)) at q = e^{alpha t0}, t = e^{t0}
  Laurent<RatFunc> q_minus_1 = symf::exp_linear(alpha, '0', ord + 2);
  q_minus_1.set(0, RatFunc());
  Laurent<RatFunc> tinv_minus_1 = symf::exp_linear(RatFunc(-1), '0', ord + 2);
  tinv_minus_1.set(0, RatFunc());
  Laurent<RatFunc> pref =
      mul_scalar(invert_series(mul(q_minus_1, tinv_minus_1), 2, RatFunc(1)), RatFunc(-1));

  NormalOrderedOp op;
  for (int len = 2; len <= k + 2; ++len) {
    for (const auto& gp : gen_partitions(0, len, part_bound)) {
      // per-part factors, each of t0-valuation 1
      Laurent<RatFunc> prod = pref;
      for (const auto& [p, m] : gp.mult()) {
        Laurent<RatFunc> f('0', 0, ord + 2);
        if (p < 0) {
          // (t^|p| - 1)/|p|
          f = symf::exp_linear(RatFunc(Rat(-p)), '0', ord + 2);
          f.set(0, RatFunc());
          f = mul_scalar(f, RatFunc(frac(1, -p)));
        } else {
          // (q^p - 1) t^{-p} / p
          f = symf::exp_linear(alpha * RatFunc(Rat(p)), '0', ord + 2);
          f.set(0, RatFunc());
          f = mul(f, symf::exp_linear(RatFunc(Rat(-p)), '0', ord + 2));
          f = mul_scalar(f, RatFunc(frac(1, p)));
        }
        for (int j = 0; j < m; ++j) prod = mul(prod, f);
      }
      RatFunc c = prod.coeff(k);
      if (c.is_zero()) continue;
      op.add_term(gp, c / RatFunc(gp.mult_factorial()));
    }
  }
  return op;
}

FockSeries W_apply(const FockVector& v, char tag, int lo, int hi) {
  RatFunc m = RatFunc::var(kM);
  RatFunc a = m / (t1v() * t2v());
  RatFunc b = m + t1v() + t2v();
  FockSeries plus = gamma_plus_pow(a, tag, v, std::min(lo, -v.max_degree()), std::max(hi, 0));
  return gamma_minus_pow(b, plus).restricted(lo, hi);
}

BiFock gamma_plus_then_minus(const RatFunc& a, const RatFunc& b, const FockVector& v, int zlo,
                             int zhi, int ylo, int yhi) {
  // Gamma_+(z)^a Gamma_-(y)^b v: the minus factor acts first
  BiFock out(zlo, zhi, ylo, yhi);
  FockSeries minus = gamma_minus_pow(b, 'y', v, std::min(ylo, 0), yhi);
  for (const auto& [ye, vec] : minus.terms()) {
    FockSeries plus = gamma_plus_pow(a, 'z', vec, -vec.max_degree(), 0);
    for (const auto& [ze, w] : plus.terms()) out.add(ze, ye, w);
  }
  return out;
}

BiFock gamma_minus_then_plus(const RatFunc& a, const RatFunc& b, const FockVector& v, int zlo,
                             int zhi, int ylo, int yhi) {
  // Gamma_-(y)^b Gamma_+(z)^a v
  BiFock out(zlo, zhi, ylo, yhi);
  FockSeries plus = gamma_plus_pow(a, 'z', v, -v.max_degree(), 0);
  for (const auto& [ze, vec] : plus.terms()) {
    FockSeries minus = gamma_minus_pow(b, 'y', vec, std::min(ylo, 0), yhi);
    for (const auto& [ye, w] : minus.terms()) out.add(ze, ye, w);
  }
  return out;
}

}  // namespace vertex
}  // namespace hilb
