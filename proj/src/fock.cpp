#include "hilb/fock.hpp"

#include <algorithm>
#include <sstream>

namespace hilb {

FockVector FockVector::basis(const Partition& la, const RatFunc& c) {
  FockVector v;
  v.add_term(la, c);
  return v;
}

RatFunc FockVector::coeff(const Partition& la) const {
  auto it = c_.find(la);
  return it == c_.end() ? RatFunc() : it->second;
}

void FockVector::add_term(const Partition& la, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = c_.find(la);
  if (it == c_.end()) {
    c_.emplace(la, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

int FockVector::max_degree() const {
  int d = 0;
  for (const auto& [la, c] : c_) d = std::max(d, la.size());
  return d;
}

bool FockVector::is_homogeneous(int degree) const {
  for (const auto& [la, c] : c_)
    if (la.size() != degree) return false;
  return true;
}

FockVector FockVector::component(int degree) const {
  FockVector v;
  for (const auto& [la, c] : c_)
    if (la.size() == degree) v.add_term(la, c);
  return v;
}

FockVector FockVector::operator-() const {
  FockVector v;
  for (const auto& [la, c] : c_) v.c_.emplace(la, -c);
  return v;
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector v = *this;
  v += o;
  return v;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [la, c] : o.c_) add_term(la, c);
  return *this;
}

FockVector FockVector::operator-(const FockVector& o) const { return *this + (-o); }

FockVector FockVector::operator*(const RatFunc& s) const {
  FockVector v;
  if (s.is_zero()) return v;
  for (const auto& [la, c] : c_) v.c_.emplace(la, c * s);
  return v;
}

FockVector FockVector::sym_mul(const FockVector& o) const {
  FockVector v;
  for (const auto& [a, ca] : c_)
    for (const auto& [b, cb] : o.c_) {
      std::vector<int> parts = a.parts();
      parts.insert(parts.end(), b.parts().begin(), b.parts().end());
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      v.add_term(Partition(std::move(parts)), ca * cb);
    }
  return v;
}

FockVector FockVector::plethysm_scale(const std::function<RatFunc(int)>& factor) const {
  FockVector v;
  for (const auto& [la, c] : c_) {
    RatFunc f = c;
    for (int p : la.parts()) f *= factor(p);
    v.add_term(la, f);
  }
  return v;
}

std::string FockVector::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [la, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*";
    if (la.empty()) {
      os << "|0>";
    } else {
      for (const auto& [p, m] : la.multiplicities()) {
        os << "a(-" << p << ")";
        if (m > 1) os << "^" << m;
      }
      os << "|0>";
    }
  }
  return os.str();
}

NormalOrderedOp NormalOrderedOp::monomial(const GenPartition& gp, const RatFunc& c) {
  NormalOrderedOp A;
  A.add_term(gp, c);
  return A;
}

RatFunc NormalOrderedOp::coeff(const GenPartition& gp) const {
  auto it = c_.find(gp);
  return it == c_.end() ? RatFunc() : it->second;
}

void NormalOrderedOp::add_term(const GenPartition& gp, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = c_.find(gp);
  if (it == c_.end()) {
    c_.emplace(gp, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

int NormalOrderedOp::max_abs_part() const {
  int b = 0;
  for (const auto& [gp, c] : c_)
    for (const auto& [p, m] : gp.mult()) b = std::max(b, std::abs(p));
  return b;
}

int NormalOrderedOp::max_length() const {
  int l = 0;
  for (const auto& [gp, c] : c_) l = std::max(l, gp.length());
  return l;
}

long long NormalOrderedOp::weight() const {
  if (c_.empty()) return 0;
  long long w = c_.begin()->first.weight();
  for (const auto& [gp, c] : c_)
    if (gp.weight() != w) throw domain_error("operator mixes conformal weights");
  return w;
}

NormalOrderedOp NormalOrderedOp::operator-() const {
  NormalOrderedOp A;
  for (const auto& [gp, c] : c_) A.c_.emplace(gp, -c);
  return A;
}

NormalOrderedOp NormalOrderedOp::operator+(const NormalOrderedOp& o) const {
  NormalOrderedOp A = *this;
  A += o;
  return A;
}

NormalOrderedOp& NormalOrderedOp::operator+=(const NormalOrderedOp& o) {
  for (const auto& [gp, c] : o.c_) add_term(gp, c);
  return *this;
}

NormalOrderedOp NormalOrderedOp::operator-(const NormalOrderedOp& o) const {
  return *this + (-o);
}

NormalOrderedOp NormalOrderedOp::operator*(const RatFunc& s) const {
  NormalOrderedOp A;
  if (s.is_zero()) return A;
  for (const auto& [gp, c] : c_) A.c_.emplace(gp, c * s);
  return A;
}

NormalOrderedOp NormalOrderedOp::rescaled(
    const std::function<RatFunc(const GenPartition&)>& f) const {
  NormalOrderedOp A;
  for (const auto& [gp, c] : c_) A.add_term(gp, c * f(gp));
  return A;
}

NormalOrderedOp NormalOrderedOp::map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const {
  NormalOrderedOp A;
  for (const auto& [gp, c] : c_) A.add_term(gp, f(c));
  return A;
}

std::string NormalOrderedOp::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [gp, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (gp.empty()) {
      os << "*1";
    } else {
      for (const auto& [p, m] : gp.mult()) {
        os << "a(" << p << ")";
        if (m > 1) os << "^" << m;
      }
    }
  }
  return os.str();
}

FockVector apply_mode(int k, const FockVector& v) {
  if (k == 0) throw domain_error("a_0 is not an operator here");
  FockVector out;
  if (k < 0) {
    for (const auto& [la, c] : v.terms()) {
      std::vector<int> parts = la.parts();
      parts.insert(std::upper_bound(parts.begin(), parts.end(), -k, std::greater<int>()), -k);
      out.add_term(Partition(std::move(parts)), c);
    }
    return out;
  }
  for (const auto& [la, c] : v.terms()) {
    auto mult = la.multiplicities();
    auto it = mult.find(k);
    if (it == mult.end()) continue;
    int m = it->second;
    std::vector<int> parts = la.parts();
    parts.erase(std::find(parts.begin(), parts.end(), k));
    out.add_term(Partition(std::move(parts)), c * RatFunc(Rat(static_cast<long>(k) * m)));
  }
  return out;
}

FockVector apply_monomial(const GenPartition& gp, const FockVector& v) {
  FockVector cur = v;
  // annihilators first (ascending parts), then creators
  for (const auto& [p, m] : gp.mult()) {
    if (p < 0) continue;
    for (int j = 0; j < m && !cur.is_zero(); ++j) cur = apply_mode(p, cur);
  }
  for (const auto& [p, m] : gp.mult()) {
    if (p > 0) continue;
    for (int j = 0; j < m && !cur.is_zero(); ++j) cur = apply_mode(p, cur);
  }
  return cur;
}

FockVector apply_op(const NormalOrderedOp& A, const FockVector& v) {
  FockVector out;
  for (const auto& [gp, c] : A.terms()) out += apply_monomial(gp, v) * c;
  return out;
}

namespace {

struct Contraction {
  GenPartition gp;
  Rat factor;
};

// All ways to contract annihilators of A-monomial against creators of
// B-monomial; contraction of j pairs at mode v contributes
// C(p,j) C(q,j) j! v^j.
void enumerate_contractions(const std::vector<std::pair<int, std::pair<int, int>>>& modes,
                            size_t idx, const GenPartition& base, Rat factor,
                            std::vector<Contraction>& out) {
  if (idx == modes.size()) {
    out.push_back(Contraction{base, factor});
    return;
  }
  auto [v, pq] = modes[idx];
  auto [p, q] = pq;
  Rat choose_p = 1, choose_q = 1, fact = 1;
  for (int j = 0; j <= std::min(p, q); ++j) {
    if (j > 0) {
      choose_p *= frac(p - j + 1, j);
      choose_q *= frac(q - j + 1, j);
      fact *= j;
      // accumulated: C(p,j) C(q,j) j! v^j
    }
    Rat f = factor * choose_p * choose_q * fact;
    for (int t = 0; t < j; ++t) f *= v;
    GenPartition g = base;
    if (j > 0) g = g.with_part(v, -j).with_part(-v, -j);
    enumerate_contractions(modes, idx + 1, g, f, out);
  }
}

}  // namespace

NormalOrderedOp compose(const NormalOrderedOp& A, const NormalOrderedOp& B,
                        const ComposeWindow& w) {
  NormalOrderedOp out;
  std::vector<std::string> overflow;
  for (const auto& [ga, ca] : A.terms()) {
    for (const auto& [gb, cb] : B.terms()) {
      // modes where A annihilates and B creates
      std::vector<std::pair<int, std::pair<int, int>>> modes;
      for (const auto& [p, m] : ga.mult()) {
        if (p <= 0) continue;
        int q = gb.multiplicity(-p);
        if (q > 0) modes.push_back({p, {m, q}});
      }
      // merged monomial before contraction
      std::map<int, int> merged = ga.mult();
      for (const auto& [p, m] : gb.mult()) merged[p] += m;
      GenPartition base{std::move(merged)};
      std::vector<Contraction> contractions;
      enumerate_contractions(modes, 0, base, 1, contractions);
      RatFunc cab = ca * cb;
      for (const auto& k : contractions) {
        bool fits = k.gp.length() <= w.max_len;
        if (fits)
          for (const auto& [p, m] : k.gp.mult())
            if (std::abs(p) > w.max_part) fits = false;
        if (!fits) {
          if (!w.allow_drop) overflow.push_back(k.gp.str());
          continue;
        }
        out.add_term(k.gp, cab * RatFunc(k.factor));
      }
    }
  }
  if (!overflow.empty()) {
    std::string what = "compose window (part<=" + std::to_string(w.max_part) +
                       ", len<=" + std::to_string(w.max_len) + ") lost exact terms:";
    for (size_t i = 0; i < overflow.size() && i < 8; ++i) what += " " + overflow[i];
    if (overflow.size() > 8) what += " ... (" + std::to_string(overflow.size()) + " total)";
    throw window_error(what);
  }
  return out;
}

NormalOrderedOp commutator(const NormalOrderedOp& A, const NormalOrderedOp& B,
                           const ComposeWindow& w) {
  return compose(A, B, w) - compose(B, A, w);
}

Matrix matrix_on_degree(const LinearAction& act, int n) {
  auto basis = partitions_of(n);
  int d = static_cast<int>(basis.size());
  Matrix m(d, std::vector<RatFunc>(d));
  for (int j = 0; j < d; ++j) {
    FockVector img = act(FockVector::basis(basis[j]));
    for (const auto& [la, c] : img.terms()) {
      if (la.size() != n) throw domain_error("operator is not degree-preserving");
      m[partition_index(la)][j] = c;
    }
  }
  return m;
}

Matrix matrix_on_degree(const NormalOrderedOp& A, int n) {
  if (!A.is_zero() && A.weight() != 0)
    throw domain_error("matrix_on_degree needs a degree-preserving operator");
  return matrix_on_degree([&A](const FockVector& v) { return apply_op(A, v); }, n);
}

QSeries trace_q(const LinearAction& act, int q_order) {
  QSeries s(q_order);
  for (int n = 0; n <= q_order; ++n) {
    auto basis = partitions_of(n);
    RatFunc tr;
    for (const auto& la : basis) tr += act(FockVector::basis(la)).coeff(la);
    s.set_coeff(n, tr);
  }
  return s;
}

QSeries trace_q(const NormalOrderedOp& A, int q_order) {
  return trace_q([&A](const FockVector& v) { return apply_op(A, v); }, q_order);
}

MonomialExpansion expand_in_monomials(const std::vector<Matrix>& mats, long long weight,
                                      int max_len, int max_part) {
  int top_degree = static_cast<int>(mats.size()) - 1;
  if (top_degree < 0) throw domain_error("expand_in_monomials needs matrices");

  // candidates, detectable from degrees <= top_degree, sorted by |la^+|
  std::vector<GenPartition> cands;
  for (const auto& gp : gen_partitions_up_to(weight, max_len, max_part)) {
    if (gp.weight_plus() <= top_degree) cands.push_back(gp);
  }
  std::stable_sort(cands.begin(), cands.end(), [](const GenPartition& a, const GenPartition& b) {
    return a.weight_plus() < b.weight_plus();
  });

  MonomialExpansion res;
  for (const auto& la : cands) {
    Partition in = la.positive_partition();          // probe vector a_{-la^+}|0>
    Partition out = la.negative_partition_negated();  // target basis row
    int n_in = in.size();
    if (n_in > top_degree) continue;
    const Matrix& M = mats[n_in];
    int row = partition_index(out), col = partition_index(in);
    if (row >= static_cast<int>(M.size()) || col >= static_cast<int>(M[0].size()))
      throw domain_error("matrix shape mismatch in expand_in_monomials");
    RatFunc target = M[row][col];
    RatFunc known = apply_op(res.op, FockVector::basis(in)).coeff(out);
    // full contraction of la^+ against the probe contributes z_{la^+}/la^!
    RatFunc pivot = RatFunc(in.z()) / RatFunc(la.mult_factorial());
    RatFunc g = (target - known) / pivot;
    if (!g.is_zero()) {
      res.g.emplace(la, g);
      res.op.add_term(la, g / RatFunc(la.mult_factorial()));
    }
  }

  // residual check against every supplied degree
  res.exact = true;
  for (int n = 0; n <= top_degree; ++n) {
    long long out_deg = n - weight;
    if (out_deg < 0) continue;
    auto basis = partitions_of(n);
    for (size_t j = 0; j < basis.size(); ++j) {
      FockVector img = apply_op(res.op, FockVector::basis(basis[j]));
      auto out_basis = partitions_of(static_cast<int>(out_deg));
      for (size_t i = 0; i < out_basis.size(); ++i) {
        RatFunc got = img.coeff(out_basis[i]);
        RatFunc want = mats[n][i][j];
        if (got != want) {
          res.exact = false;
          if (res.residual_note.empty())
            res.residual_note = "residual at degree " + std::to_string(n) + ", entry (" +
                                out_basis[i].str() + " ; " + basis[j].str() + "): got " +
                                got.str() + ", want " + want.str();
        }
      }
    }
  }
  return res;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix r(n, std::vector<RatFunc>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) {
        if (b[l][j].is_zero()) continue;
        r[i][j] += a[i][l] * b[l][j];
      }
    }
  return r;
}

Matrix mat_identity(int n) {
  Matrix r(n, std::vector<RatFunc>(n));
  for (int i = 0; i < n; ++i) r[i][i] = RatFunc(1);
  return r;
}

Matrix mat_inverse(const Matrix& a) {
  int n = static_cast<int>(a.size());
  Matrix m = a;
  Matrix inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw domain_error("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    RatFunc d = m[col][col].inverse();
    for (int j = 0; j < n; ++j) {
      m[col][j] *= d;
      inv[col][j] *= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      RatFunc f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

bool mat_equal(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

}  // namespace hilb
