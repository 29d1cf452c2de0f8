#include "hilb/traces.hpp"

#include <future>
#include <map>
#include <numeric>

#include "hilb/chern.hpp"
#include "hilb/laurent.hpp"
#include "hilb/symfunc.hpp"
#include "hilb/vertex.hpp"

namespace hilb::traces {

namespace {

RatFunc t1v() { return RatFunc::var(kT1); }
RatFunc t2v() { return RatFunc::var(kT2); }
RatFunc mv() { return RatFunc::var(kM); }

// linear form c1 t1 + c2 t2, normalized: gcd(c1,c2) = 1, first nonzero > 0
struct LinForm {
  long c1, c2;
  bool operator<(const LinForm& o) const { return std::tie(c1, c2) < std::tie(o.c1, o.c2); }
};

// normalize and return the removed scalar
std::pair<LinForm, Rat> normalize_form(long c1, long c2) {
  long g = std::gcd(std::abs(c1), std::abs(c2));
  if (g == 0) throw domain_error("zero tangent weight");
  long s = (c1 != 0 ? c1 : c2) < 0 ? -g : g;
  return {LinForm{c1 / s, c2 / s}, Rat(s)};
}

MultiPoly form_poly(const LinForm& f) {
  return MultiPoly::var(kT1).mul_scalar(Rat(f.c1)) + MultiPoly::var(kT2).mul_scalar(Rat(f.c2));
}

// numerator over a multiset of linear denominator forms
struct FactoredFrac {
  MultiPoly num;
  std::map<LinForm, int> den;
};

void add_into(FactoredFrac& acc, const FactoredFrac& t) {
  // lcm of the two denominators
  std::map<LinForm, int> lcm = acc.den;
  for (const auto& [f, m] : t.den) {
    auto& cur = lcm[f];
    cur = std::max(cur, m);
  }
  MultiPoly a = acc.num;
  for (const auto& [f, m] : lcm) {
    int have = acc.den.count(f) ? acc.den.at(f) : 0;
    for (int i = have; i < m; ++i) a *= form_poly(f);
  }
  MultiPoly b = t.num;
  for (const auto& [f, m] : lcm) {
    int have = t.den.count(f) ? t.den.at(f) : 0;
    for (int i = have; i < m; ++i) b *= form_poly(f);
  }
  acc.num = a + b;
  acc.den = std::move(lcm);
}

RatFunc finalize(FactoredFrac f) {
  // strip factors dividing the numerator, then assemble
  MultiPoly den(1);
  for (auto& [form, m] : f.den) {
    MultiPoly p = form_poly(form);
    while (m > 0) {
      MultiPoly q;
      if (!f.num.try_divide(p, q)) break;
      f.num = std::move(q);
      --m;
    }
    for (int i = 0; i < m; ++i) den *= p;
  }
  return RatFunc(std::move(f.num), std::move(den));
}

// a_diag of la as numerator polynomial and denominator form multiset
FactoredFrac a_diag_factored(const Partition& la) {
  FactoredFrac f;
  f.num = MultiPoly(1);
  Rat scale = 1;
  for (const auto& cell : cells_of(la)) {
    auto s = cell_stats(la, cell);
    // (m - a t1 + (l+1) t2)(m + (a+1) t1 - l t2)
    MultiPoly lin1 = MultiPoly::var(kM) + MultiPoly::var(kT1).mul_scalar(Rat(-s.arm)) +
                     MultiPoly::var(kT2).mul_scalar(Rat(s.leg + 1));
    MultiPoly lin2 = MultiPoly::var(kM) + MultiPoly::var(kT1).mul_scalar(Rat(s.arm + 1)) +
                     MultiPoly::var(kT2).mul_scalar(Rat(-s.leg));
    f.num *= lin1 * lin2;
    auto [f1, s1] = normalize_form(-s.arm, s.leg + 1);
    auto [f2, s2] = normalize_form(s.arm + 1, -s.leg);
    ++f.den[f1];
    ++f.den[f2];
    scale *= s1 * s2;
  }
  f.num = f.num.mul_scalar(1 / scale);
  return f;
}

}  // namespace

RatFunc a_diag(const Partition& la) { return finalize(a_diag_factored(la)); }

QSeries raw_trace(const std::vector<int>& ks, int q_order, MMode mode, int jobs) {
  auto coeff_for_degree = [&ks, mode](int n) -> RatFunc {
    FactoredFrac acc;
    acc.num = MultiPoly(0);
    bool poly_only = mode == MMode::zero;
    MultiPoly poly_acc(0);
    for (const auto& la : partitions_of(n)) {
      MultiPoly weights(1);
      for (int k : ks) {
        RatFunc ev = chern::eigenvalue(la, k);
        weights *= ev.num();  // eigenvalues are polynomials
      }
      if (poly_only) {
        poly_acc += weights;
        continue;
      }
      FactoredFrac term = a_diag_factored(la);
      term.num *= weights;
      add_into(acc, term);
    }
    if (poly_only) return RatFunc(poly_acc);
    return finalize(std::move(acc));
  };

  QSeries out(q_order);
  if (jobs <= 1) {
    for (int n = 0; n <= q_order; ++n) out.set_coeff(n, coeff_for_degree(n));
    return out;
  }
  std::vector<std::future<RatFunc>> futs;
  for (int n = 0; n <= q_order; ++n)
    futs.push_back(std::async(std::launch::async, coeff_for_degree, n));
  for (int n = 0; n <= q_order; ++n) out.set_coeff(n, futs[n].get());
  return out;
}

RatFunc vacuum_exponent() { return RatFunc(1) + (mv() + t1v() + t2v()) * mv() / (t1v() * t2v()); }

QSeries vacuum_trace(int q_order) {
  return pochhammer(RatFunc(1), 1, q_order).pow(-vacuum_exponent());
}

QSeries reduced(const std::vector<int>& ks, int q_order, MMode mode, int jobs) {
  QSeries raw = raw_trace(ks, q_order, mode, jobs);
  RatFunc e = vacuum_exponent();
  if (mode == MMode::zero) e = e.substitute(kM, RatFunc(0));  // = 1
  return raw * pochhammer(RatFunc(1), 1, q_order).pow(e);
}

QSeries reduced_m0_onepoint(int k, int q_order) {
  int zmax = k + 2;
  RatFunc alpha = -t1v() / t2v();
  QSeries one(q_order, RatFunc(1));
  QSeries zero(q_order);

  // prod_{n=1}^{q_order} (1 - e^{cz} q^n) as a z-series of q-series
  auto poch_exp = [&](const RatFunc& c) {
    Laurent<QSeries> prod('z', 0, zmax);
    prod.add(0, one);
    for (int n = 1; n <= q_order; ++n) {
      Laurent<QSeries> factor('z', 0, zmax);
      QSeries c0 = one;
      c0.set_coeff(n, RatFunc(-1));
      factor.add(0, c0);
      RatFunc cz(1);
      Rat fact = 1;
      for (int j = 1; j <= zmax; ++j) {
        cz *= c;
        fact *= j;
        if (cz.is_zero()) break;
        QSeries cj = zero;
        cj.set_coeff(n, cz * RatFunc(-1 / fact));
        factor.add(j, cj);
      }
      prod = mul(prod, factor);
    }
    return prod;
  };

  Laurent<QSeries> ratio =
      mul(mul(poch_exp(RatFunc(0)), poch_exp(alpha - RatFunc(1))),
          invert_series(mul(poch_exp(alpha), poch_exp(RatFunc(-1))), 0, one));

  // 1/((1-e^{alpha z})(1-e^{-z})), a Laurent series from z^{-2}
  auto one_minus_exp = [&](const RatFunc& c) {
    Laurent<QSeries> s('z', 0, zmax + 2);
    RatFunc cz(1);
    Rat fact = 1;
    for (int j = 1; j <= zmax + 2; ++j) {
      cz *= c;
      fact *= j;
      if (cz.is_zero()) break;
      QSeries cj = zero;
      cj.set_coeff(0, cz * RatFunc(-1 / fact));
      s.add(j, cj);
    }
    return s;
  };
  Laurent<QSeries> pref =
      invert_series(mul(one_minus_exp(alpha), one_minus_exp(RatFunc(-1))), 2, one);

  Laurent<QSeries> one_minus_ratio('z', 0, zmax);
  one_minus_ratio.add(0, one);
  one_minus_ratio = one_minus_ratio - ratio;

  Laurent<QSeries> full = mul(pref, one_minus_ratio);
  QSeries coeff_k = full.coeff(k);
  if (coeff_k.order() != q_order) {
    // a missing sparse entry would surface as the order-0 default; treat as 0
    QSeries z2(q_order);
    if (!coeff_k.is_zero()) throw domain_error("unexpected truncation in one-point series");
    coeff_k = z2;
  }
  return coeff_k.mul_scalar(t2v().pow(k));
}

TraceCheck gamma_trace_check(int q_order, int uv_window) {
  TraceCheck rep;
  RatFunc a = RatFunc::var(kAlpha), b = mv();

  // direct route: per degree, diagonal entries of Gamma_-(y)^b Gamma_+(x)^a
  std::map<int, QSeries> direct;  // (y x^{-1})^j -> q-series
  for (int j = 0; j <= uv_window; ++j) direct.emplace(j, QSeries(q_order));
  for (int n = 0; n <= q_order; ++n) {
    for (const auto& la : partitions_of(n)) {
      FockVector v = FockVector::basis(la);
      vertex::FockSeries plus = vertex::gamma_plus_pow(a, 'x', v, -std::min(n, uv_window), 0);
      for (const auto& [xe, vec] : plus.terms()) {
        int j = -xe;
        if (j > uv_window) continue;
        vertex::FockSeries minus = vertex::gamma_minus_pow(b, 'y', vec, 0, j);
        RatFunc diag = minus.coeff(j).coeff(la);
        if (diag.is_zero()) continue;
        QSeries& tgt = direct.at(j);
        tgt.set_coeff(n, tgt.coeff(n) + diag);
      }
    }
  }

  // product route: (q;q)^{-1} exp(ab sum_{m<=W} u^m/m sum_n q^{nm})
  QSeries one(q_order, RatFunc(1));
  Laurent<QSeries> arg('u', 0, uv_window);
  for (int m = 1; m <= uv_window; ++m) {
    QSeries s(q_order);
    for (int n = 1; n * m <= q_order; ++n) s.set_coeff(n * m, a * b * RatFunc(frac(1, m)));
    arg.add(m, s);
  }
  Laurent<QSeries> expanded = exp_series(arg, one);
  QSeries qq_inv = pochhammer(RatFunc(1), 1, q_order).inverse();

  for (int j = 0; j <= uv_window; ++j) {
    QSeries want = expanded.coeff(j).is_zero() && expanded.coeff(j).order() == 0
                       ? QSeries(q_order)
                       : expanded.coeff(j) * qq_inv;
    QSeries got = direct.at(j);
    if (!(got == want)) {
      rep.pass = false;
      rep.mismatches.push_back("coefficient of (y/x)^" + std::to_string(j) + ": got " +
                               got.str() + ", want " + want.str());
    }
  }
  return rep;
}

}  // namespace hilb::traces
