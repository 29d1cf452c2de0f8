#include "hilb/symfunc.hpp"

#include <algorithm>
#include <map>

namespace hilb::symf {

namespace {

RatFunc qv() { return RatFunc::var(kT1); }
RatFunc tv() { return RatFunc::var(kT2); }
RatFunc av() { return RatFunc::var(kAlpha); }

// dense monomial expansion over n variables, exponent vectors of length n
using ExpVec = std::vector<int>;
using NPoly = std::map<ExpVec, Rat>;

NPoly npoly_mul(const NPoly& a, const NPoly& b) {
  NPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      ExpVec e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = r.try_emplace(std::move(e), ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

// rational matrix inverse (Gauss-Jordan)
std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw domain_error("singular transition matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

struct DegreeTables {
  std::vector<Partition> basis;
  std::vector<std::vector<Rat>> p_to_m;  // p_la = sum R[la][mu] m_mu
  std::vector<std::vector<Rat>> m_to_p;  // inverse
};

const DegreeTables& degree_tables(int n) {
  static std::map<int, DegreeTables> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  DegreeTables t;
  t.basis = partitions_of(n);
  int d = static_cast<int>(t.basis.size());
  t.p_to_m.assign(d, std::vector<Rat>(d, 0));
  int nv = std::max(n, 1);
  for (int i = 0; i < d; ++i) {
    // expand p_la on n variables
    NPoly prod;
    prod[ExpVec(nv, 0)] = 1;
    for (int part : t.basis[i].parts()) {
      NPoly pk;
      for (int v = 0; v < nv; ++v) {
        ExpVec e(nv, 0);
        e[v] = part;
        pk[std::move(e)] = 1;
      }
      prod = npoly_mul(prod, pk);
    }
    // coefficient of the sorted-descending representative of each mu
    for (int j = 0; j < d; ++j) {
      ExpVec rep(nv, 0);
      for (int k = 0; k < t.basis[j].length(); ++k) rep[k] = t.basis[j].part(k);
      auto itc = prod.find(rep);
      t.p_to_m[i][j] = itc == prod.end() ? Rat(0) : itc->second;
    }
  }
  t.m_to_p = rat_inverse(t.p_to_m);
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

RatFunc ip_diag(IPKind kind, const Partition& la) {
  RatFunc r{la.z()};
  if (kind == IPKind::jack) {
    r *= av().pow(la.length());
  } else {
    for (int part : la.parts())
      r *= (RatFunc(1) - qv().pow(part)) / (RatFunc(1) - tv().pow(part));
  }
  return r;
}

RatFunc inner(IPKind kind, const FockVector& f, const FockVector& g) {
  RatFunc r;
  for (const auto& [la, c] : f.terms()) {
    RatFunc cg = g.coeff(la);
    if (cg.is_zero()) continue;
    r += c * cg * ip_diag(kind, la);
  }
  return r;
}

std::vector<std::vector<Rat>> p_to_m_matrix(int n) { return degree_tables(n).p_to_m; }

FockVector m_in_p(const Partition& mu) {
  const auto& t = degree_tables(mu.size());
  int j = partition_index(mu);
  FockVector f;
  for (size_t i = 0; i < t.basis.size(); ++i)
    if (t.m_to_p[j][i] != 0) f.add_term(t.basis[i], RatFunc(t.m_to_p[j][i]));
  return f;
}

namespace {

MultiPoly ip_poly(IPKind kind, const Partition& nu, int n) {
  MultiPoly w{nu.z()};
  if (kind == IPKind::jack) {
    w *= MultiPoly::var(kAlpha, nu.length());
    return w;
  }
  auto mult = nu.multiplicities();
  for (int part : nu.parts()) w *= MultiPoly(1) - MultiPoly::var(kT1, part);
  for (int k = 1; k <= n; ++k) {
    MultiPoly f = MultiPoly(1) - MultiPoly::var(kT2, k);
    int copies = n / k - (mult.count(k) ? mult[k] : 0);
    for (int j = 0; j < copies; ++j) w *= f;
  }
  return w;
}

}  // namespace

FockVector gram_schmidt_P(IPKind kind, const Partition& la, int degree_bound) {
  if (la.size() > degree_bound)
    throw domain_error("orthogonal family requested beyond the degree bound " +
                       std::to_string(degree_bound));
  static std::map<std::pair<IPKind, Partition>, FockVector> cache;
  auto key = std::make_pair(kind, la);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // Whole degree at once, dominance-smallest first (reverse enumeration
  // order is a linear extension of dominance).  Arithmetic is fraction-free:
  // each vector is a polynomial numerator vector over one denominator, and
  // gcd reduction happens once per basis element.
  int n = la.size();
  auto fwd = partitions_of(n);
  auto basis = fwd;
  std::reverse(basis.begin(), basis.end());
  int d = static_cast<int>(fwd.size());

  std::vector<MultiPoly> ip(d);
  for (int i = 0; i < d; ++i) ip[i] = ip_poly(kind, fwd[i], n);

  struct Done {
    Partition la;
    std::vector<MultiPoly> num;  // p-basis coordinates
    MultiPoly den;
    MultiPoly self;  // sum num_i^2 ip_i
  };
  std::vector<Done> done;

  for (const auto& mu : basis) {
    // m_mu in p coordinates (rational entries)
    FockVector m = m_in_p(mu);
    std::vector<MultiPoly> start(d);
    for (const auto& [nu, c] : m.terms()) start[partition_index(nu)] = MultiPoly(c.constant());

    std::vector<MultiPoly> num = start;
    MultiPoly den(1);
    for (const auto& prev : done) {
      if (dominance_compare(prev.la, mu) != DomRel::less) continue;
      // projection coefficient <m_mu, P_prev> / <P_prev, P_prev> = T/self
      MultiPoly T;
      for (int i = 0; i < d; ++i) {
        if (start[i].is_zero() || prev.num[i].is_zero()) continue;
        T += start[i] * prev.num[i] * ip[i];
      }
      if (T.is_zero()) continue;
      // reduce the projection coefficient T/S before combining
      MultiPoly S = prev.self;
      MultiPoly g1 = poly_gcd(T, S);
      if (!g1.is_constant()) {
        T = T / g1;
        S = S / g1;
      }
      MultiPoly g2 = poly_gcd(den, S);
      MultiPoly den_red = g2.is_constant() ? den : den / g2;
      MultiPoly s_red = g2.is_constant() ? S : S / g2;
      for (int i = 0; i < d; ++i) num[i] = num[i] * s_red - T * den_red * prev.num[i];
      den *= s_red;
    }
    {
      // one reduction per basis element keeps the stored family small
      MultiPoly g = den;
      for (int i = 0; i < d && !g.is_constant(); ++i)
        if (!num[i].is_zero()) g = poly_gcd(g, num[i]);
      if (!g.is_constant()) {
        for (int i = 0; i < d; ++i)
          if (!num[i].is_zero()) num[i] = num[i] / g;
        den = den / g;
      }
      Rat content = den.content();
      den = den.mul_scalar(1 / content);
      for (int i = 0; i < d; ++i)
        if (!num[i].is_zero()) num[i] = num[i].mul_scalar(1 / content);
    }
    MultiPoly self;
    for (int i = 0; i < d; ++i)
      if (!num[i].is_zero()) self += num[i] * num[i] * ip[i];

    FockVector P;
    for (int i = 0; i < d; ++i)
      if (!num[i].is_zero()) P.add_term(fwd[i], RatFunc(num[i], den));
    cache.emplace(std::make_pair(kind, mu), P);
    done.push_back(Done{mu, std::move(num), std::move(den), std::move(self)});
  }
  return cache.at(key);
}

FockVector jack_J(const Partition& la) {
  RatFunc norm(1);
  for (const auto& cell : cells_of(la)) {
    auto s = cell_stats(la, cell);
    norm *= av() * RatFunc(Rat(s.arm)) + RatFunc(Rat(s.leg + 1));
  }
  return gram_schmidt_P(IPKind::jack, la) * norm;
}

FockVector macdonald_J(const Partition& la) {
  RatFunc norm(1);
  for (const auto& cell : cells_of(la)) {
    auto s = cell_stats(la, cell);
    norm *= RatFunc(1) - qv().pow(s.arm) * tv().pow(s.leg + 1);
  }
  return gram_schmidt_P(IPKind::macdonald, la) * norm;
}

FockVector subst_qt(const FockVector& f, const RatFunc& q_val, const RatFunc& t_val) {
  FockVector r;
  for (const auto& [mu, c] : f.terms())
    r.add_term(mu, c.substitute(kT1, q_val).substitute(kT2, t_val));
  return r;
}

FockVector transformed_H(const Partition& la) {
  FockVector j_inv_t = subst_qt(macdonald_J(la), qv(), tv().inverse());
  FockVector stretched = j_inv_t.plethysm_scale([](int k) {
    // 1/(1 - t^{-k}) = t^k/(t^k - 1)
    RatFunc tk = tv().pow(k);
    return tk / (tk - RatFunc(1));
  });
  return stretched * tv().pow(la.n_stat());
}

FockVector macdonald_J_from_H(const Partition& la) {
  FockVector h_inv_t = subst_qt(transformed_H(la), qv(), tv().inverse());
  FockVector shrunk =
      h_inv_t.plethysm_scale([](int k) { return RatFunc(1) - tv().pow(k); });
  return shrunk * tv().pow(la.n_stat());
}

Laurent<RatFunc> exp_linear(const RatFunc& c, char tag, int order) {
  Laurent<RatFunc> s(tag, 0, order);
  RatFunc p(1);
  Rat fact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      p *= c;
      fact *= k;
    }
    s.add(k, p * RatFunc(1 / fact));
  }
  return s;
}

namespace {

// evaluate a (q,t)-rational function at q = e^{alpha t0}, t = e^{t0}
Laurent<RatFunc> eval_exp_qt(const MultiPoly& p, int order) {
  Laurent<RatFunc> r('0', 0, order);
  for (const auto& [mo, c] : p.terms()) {
    if (mo.e[kAlpha] != 0 || mo.e[kM] != 0)
      throw domain_error("coefficient unexpectedly involves alpha or m");
    RatFunc lin = av() * RatFunc(Rat(mo.e[kT1])) + RatFunc(Rat(mo.e[kT2]));
    r = r + mul_scalar(exp_linear(lin, '0', order), RatFunc(c));
  }
  return r;
}

int valuation(const Laurent<RatFunc>& s) {
  for (const auto& [k, v] : s.terms())
    if (!v.is_zero()) return k;
  throw domain_error("valuation of zero series");
}

}  // namespace

FockVector jack_J_via_limit(const Partition& la, int t0_order) {
  int n = la.size();
  int ord = t0_order + 2 * n + 2;
  FockVector jqt = macdonald_J(la);

  // (1 - t)^{-n} = (1 - e^{t0})^{-n}
  Laurent<RatFunc> one_minus_t('0', 0, ord);
  one_minus_t.add(0, RatFunc(1));
  one_minus_t = one_minus_t - exp_linear(RatFunc(1), '0', ord);
  Laurent<RatFunc> inv = invert_series(one_minus_t, 1, RatFunc(1));
  Laurent<RatFunc> prefactor = one_like('0', 0, ord, RatFunc(1));
  for (int i = 0; i < n; ++i) prefactor = mul(prefactor, inv);

  FockVector out;
  for (const auto& [mu, c] : jqt.terms()) {
    Laurent<RatFunc> num = eval_exp_qt(c.num(), ord);
    Laurent<RatFunc> den = eval_exp_qt(c.den(), ord);
    Laurent<RatFunc> val = mul(mul(num, invert_series(den, valuation(den), RatFunc(1))), prefactor);
    for (const auto& [k, v] : val.terms())
      if (k < 0 && !v.is_zero())
        throw domain_error("t0 limit does not exist for coefficient of p_" + mu.str());
    out.add_term(mu, val.coeff(0));
  }
  return out;
}

FockVector fixed_point_class(const Partition& la) {
  RatFunc t1 = RatFunc::var(kT1), t2 = RatFunc::var(kT2);
  FockVector j = jack_J(la);
  FockVector out;
  for (const auto& [mu, c] : j.terms()) {
    RatFunc cc = c.substitute(kAlpha, -t1 / t2);
    out.add_term(mu, cc * t2.pow(la.size()) * t1.pow(mu.length()));
  }
  return out;
}

}  // namespace hilb::symf
