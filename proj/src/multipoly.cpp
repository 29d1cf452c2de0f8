#include "hilb/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace hilb {

const char* const kVarNames[kNumVars] = {"t1", "t2", "alpha", "m"};

MultiPoly MultiPoly::var(int v, int exp) {
  if (v < 0 || v >= kNumVars) throw domain_error("variable index out of range");
  Monomial m;
  m.e[v] = exp;
  MultiPoly p;
  p.terms_[m] = 1;
  return p;
}

MultiPoly MultiPoly::term(const Monomial& mono, const Rat& c) {
  MultiPoly p;
  if (c != 0) p.terms_[mono] = c;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.total_degree() == 0;
}

Rat MultiPoly::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.total_degree();
}

int MultiPoly::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.e[v]);
  return d;
}

const Monomial& MultiPoly::lead_monomial() const {
  if (terms_.empty()) throw domain_error("lead_monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& MultiPoly::lead_coeff() const {
  if (terms_.empty()) throw domain_error("lead_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  if (terms_.empty() || o.terms_.empty()) return r;
  // Iterate over the smaller operand's terms on the outside.
  const MultiPoly& small = terms_.size() <= o.terms_.size() ? *this : o;
  const MultiPoly& big = terms_.size() <= o.terms_.size() ? o : *this;
  for (const auto& [ms, cs] : small.terms_)
    for (const auto& [mb, cb] : big.terms_) r.add_term(ms * mb, cs * cb);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::mul_term(const Monomial& mono, const Rat& c) const {
  MultiPoly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m * mono, k * c);
  return r;
}

MultiPoly MultiPoly::mul_scalar(const Rat& c) const { return mul_term(Monomial{}, c); }

MultiPoly MultiPoly::pow(int n) const {
  if (n < 0) throw domain_error("negative polynomial power");
  MultiPoly r(1);
  MultiPoly b = *this;
  while (n > 0) {
    if (n & 1) r *= b;
    b = (n >>= 1) ? b * b : b;
  }
  return r;
}

bool MultiPoly::try_divide(const MultiPoly& o, MultiPoly& quotient) const {
  if (o.is_zero()) throw domain_error("polynomial division by zero");
  MultiPoly q, r = *this;
  const Monomial& lm = o.lead_monomial();
  const Rat& lc = o.lead_coeff();
  while (!r.is_zero()) {
    const Monomial& rm = r.lead_monomial();
    if (!lm.divides(rm)) return false;
    Monomial qm = rm / lm;
    Rat qc = r.lead_coeff() / lc;
    q.add_term(qm, qc);
    r -= o.mul_term(qm, qc);
  }
  quotient = std::move(q);
  return true;
}

MultiPoly MultiPoly::operator/(const MultiPoly& o) const {
  MultiPoly q;
  if (!try_divide(o, q)) throw domain_error("inexact polynomial division");
  return q;
}

MultiPoly MultiPoly::subst_poly(int v, const MultiPoly& value) const {
  // Group by the exponent of v, then Horner in v.
  int d = degree_in(v);
  std::vector<MultiPoly> by_deg(d + 1);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int k = rest.e[v];
    rest.e[v] = 0;
    by_deg[k].add_term(rest, c);
  }
  MultiPoly r = by_deg[d];
  for (int k = d - 1; k >= 0; --k) r = r * value + by_deg[k];
  return r;
}

MultiPoly MultiPoly::coeff_of(int v, int k) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.e[v] != k) continue;
    Monomial rest = m;
    rest.e[v] = 0;
    r.add_term(rest, c);
  }
  return r;
}

Rat MultiPoly::content() const {
  if (terms_.empty()) return 0;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat r(num_gcd, den_lcm);
  r.canonicalize();
  if (lead_coeff() < 0) r = -r;
  return r;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  return mul_scalar(1 / content());
}

namespace {

// --- gcd machinery -------------------------------------------------------
//
// Inputs are made primitive over Z and the common monomial factor is split
// off.  Random evaluations then bound the gcd degree per variable; the
// frequent coprime case returns immediately, everything else runs through a
// primitive PRS in a chosen main variable with contents handled recursively.

Monomial monomial_gcd_of(const MultiPoly& p) {
  Monomial g = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms())
    for (int i = 0; i < kNumVars; ++i) g.e[i] = std::min(g.e[i], m.e[i]);
  return g;
}

MultiPoly shift_out(const MultiPoly& p, const Monomial& m) {
  MultiPoly r;
  for (const auto& [mm, c] : p.terms()) r += MultiPoly::term(mm / m, c);
  return r;
}

// View p as a dense univariate polynomial in variable v.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, int v) {
  std::vector<MultiPoly> cs(p.degree_in(v) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int k = rest.e[v];
    rest.e[v] = 0;
    cs[k] += MultiPoly::term(rest, c);
  }
  return cs;
}

MultiPoly from_coeffs(const std::vector<MultiPoly>& cs, int v) {
  MultiPoly p;
  for (int k = 0; k < static_cast<int>(cs.size()); ++k) {
    Monomial m;
    m.e[v] = k;
    for (const auto& [mm, c] : cs[k].terms()) p += MultiPoly::term(mm * m, c);
  }
  return p;
}

MultiPoly gcd_primitive(MultiPoly a, MultiPoly b);

MultiPoly content_in(const std::vector<MultiPoly>& cs) {
  MultiPoly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive_part() : gcd_primitive(g, c.primitive_part());
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

// Faithful pseudo-remainder lc(b)^(delta+1) a mod b in variable v
// (both nonzero, deg_v(a) >= deg_v(b)).
std::vector<MultiPoly> prem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
  const MultiPoly& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  int delta = static_cast<int>(a.size()) - 1 - db;
  int steps = 0;
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    MultiPoly la = a.back();
    for (int i = 0; i < da; ++i) a[i] *= lb;
    for (int i = 0; i <= db - 1; ++i) a[da - db + i] -= la * b[i];
    a.pop_back();
    ++steps;
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    if (a.empty()) break;
  }
  // normalize to exactly delta+1 multiplications by lc(b)
  for (; steps < delta + 1; ++steps)
    for (auto& c : a) c *= lb;
  return a;
}

// Specialize every variable except v at the given integer points; dense
// univariate coefficient vector in v.
std::vector<Rat> eval_except(const MultiPoly& p, int v, const std::array<long, kNumVars>& pt) {
  std::vector<Rat> c(p.degree_in(v) + 1, Rat(0));
  for (const auto& [m, coef] : p.terms()) {
    Rat t = coef;
    for (int w = 0; w < kNumVars; ++w) {
      if (w == v) continue;
      for (int e = 0; e < m.e[w]; ++e) t *= pt[w];
    }
    c[m.e[v]] += t;
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

int univariate_gcd_degree(std::vector<Rat> a, std::vector<Rat> b) {
  auto deg = [](const std::vector<Rat>& p) { return static_cast<int>(p.size()) - 1; };
  auto normalize = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    // a mod b, monic steps
    int da = deg(a), db = deg(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    Rat lb = b.back();
    for (int k = da - db; k >= 0; --k) {
      Rat c = a[k + db] / lb;
      if (c == 0) continue;
      for (int i = 0; i <= db; ++i) a[k + i] -= c * b[i];
    }
    normalize(a);
    std::swap(a, b);
  }
  return a.empty() ? -1 : deg(a);
}

// Upper bound for deg_v(gcd(a,b)) from one random specialization; -1 when the
// evaluation point was unusable (leading coefficient vanished).
int gcd_degree_bound(const MultiPoly& a, const MultiPoly& b, int v, unsigned seed) {
  std::array<long, kNumVars> pt{};
  unsigned state = seed * 2654435761u + 13;
  for (int w = 0; w < kNumVars; ++w) {
    state = state * 1664525u + 1013904223u;
    pt[w] = 2 + static_cast<long>(state % 97);
  }
  auto ua = eval_except(a, v, pt);
  auto ub = eval_except(b, v, pt);
  if (static_cast<int>(ua.size()) - 1 != a.degree_in(v)) return -1;
  if (static_cast<int>(ub.size()) - 1 != b.degree_in(v)) return -1;
  return univariate_gcd_degree(std::move(ua), std::move(ub));
}

// gcd of primitive integer polynomials with no common monomial factor.
MultiPoly gcd_primitive(MultiPoly a, MultiPoly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);

  // Per-variable degree bounds by random evaluation; a coprime pair is
  // detected here without touching the remainder sequence.
  int main_var = -1, best = 0;
  for (int v = 0; v < kNumVars; ++v) {
    int da = a.degree_in(v), db = b.degree_in(v);
    if (da == 0 || db == 0) continue;
    int bound = -1;
    for (unsigned attempt = 0; attempt < 6 && bound < 0; ++attempt)
      bound = gcd_degree_bound(a, b, v, 31 * v + attempt);
    if (bound < 0) bound = std::min(da, db);  // all points degenerate, stay safe
    if (bound > 0) {
      int d = std::max(da, db);
      if (main_var < 0 || d < best) main_var = v, best = d;
    }
  }
  if (main_var < 0) return MultiPoly(1);

  // Cheap shortcut: exact divisibility one way or the other.
  MultiPoly q;
  if (a.try_divide(b, q)) return b;
  if (b.try_divide(a, q)) return a;

  auto ca = coeffs_in(a, main_var);
  auto cb = coeffs_in(b, main_var);
  MultiPoly cont_a = content_in(ca);
  MultiPoly cont_b = content_in(cb);
  for (auto& c : ca) c = c / cont_a;
  for (auto& c : cb) c = c / cont_b;
  MultiPoly cont_gcd = gcd_primitive(cont_a, cont_b);

  // Subresultant remainder sequence: growth stays polynomial without
  // content gcds at every step.
  if (ca.size() < cb.size()) std::swap(ca, cb);
  MultiPoly g(1), h(1);
  bool first = true;
  while (true) {
    int delta = static_cast<int>(ca.size()) - static_cast<int>(cb.size());
    auto r = prem(ca, cb);
    if (r.empty()) break;
    if (first) {
      // beta = (-1)^(delta+1)
      if ((delta + 1) % 2 == 1)
        for (auto& c : r) c = -c;
      first = false;
    } else {
      // beta = -g h^delta
      MultiPoly beta = -(g * h.pow(delta));
      for (auto& c : r) c = c / beta;
    }
    g = cb.back();
    // h <- g^delta h^(1-delta), exact in the coefficient ring
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = g.pow(delta) / h.pow(delta - 1);
    ca = std::move(cb);
    cb = std::move(r);
    if (cb.size() == 1) return cont_gcd;  // pp's are coprime
  }
  // the last subresultant is the gcd up to content in the main variable
  MultiPoly cr = content_in(cb);
  for (auto& c : cb) c = c / cr;
  MultiPoly gg = from_coeffs(cb, main_var).primitive_part();
  return cont_gcd * gg;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);

  MultiPoly pa = a.primitive_part(), pb = b.primitive_part();
  Monomial ma = monomial_gcd_of(pa), mb = monomial_gcd_of(pb);
  Monomial mg;
  for (int i = 0; i < kNumVars; ++i) mg.e[i] = std::min(ma.e[i], mb.e[i]);
  pa = shift_out(pa, ma);
  pb = shift_out(pb, mb);
  MultiPoly g = gcd_primitive(std::move(pa), std::move(pb));
  return g.mul_term(mg, 1);
}

std::string monomial_str(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int v = 0; v < kNumVars; ++v) {
    if (m.e[v] == 0) continue;
    if (!first) os << "*";
    os << kVarNames[v];
    if (m.e[v] != 1) os << "^" << m.e[v];
    first = false;
  }
  return os.str();
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // grlex-descending so the leading term prints first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string ms = monomial_str(m);
    if (ms.empty()) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      os << ms;
    }
  }
  return os.str();
}

}  // namespace hilb
