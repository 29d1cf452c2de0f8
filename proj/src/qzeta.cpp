#include "hilb/qzeta.hpp"

#include <numeric>
#include <sstream>

namespace hilb::qzeta {

int BracketIndex::weight() const {
  int w = std::accumulate(s.begin(), s.end(), 0);
  w += std::accumulate(r.begin(), r.end(), 0);
  return w;
}

std::string BracketIndex::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  if (!r.empty()) {
    os << ";";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  }
  os << "]";
  return os.str();
}

std::vector<Rat> eulerian_poly(int s) {
  if (s < 1) throw domain_error("Eulerian polynomial needs s >= 1");
  // t P_{s-1}(t) = (1 - t)^s sum_{d=1}^{s} d^{s-1} t^d, a polynomial of
  // degree <= s; divide the product out to degree 2s and check the tail.
  std::vector<Rat> prod(2 * s + 2, 0);
  for (int d = 1; d <= 2 * s + 1; ++d) {
    Rat ds = 1;
    for (int i = 0; i < s - 1; ++i) ds *= d;
    // multiply t^d by (1-t)^s: binomials
    Rat binom = 1;
    for (int j = 0; j <= s && d + j < static_cast<int>(prod.size()); ++j) {
      if (j > 0) binom *= frac(-(s - j + 1), j);
      prod[d + j] += ds * binom;
    }
  }
  for (size_t i = s + 1; i < prod.size(); ++i)
    if (prod[i] != 0) throw domain_error("Eulerian numerator has degree > s");
  // strip the leading t: coefficients of P_{s-1}
  std::vector<Rat> p(prod.begin() + 1, prod.begin() + (s + 1));
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

namespace {

void bibracket_rec(const std::vector<int>& s, const std::vector<int>& r, int q_order, size_t pos,
                   int u_max, int power_used, const Rat& coeff, std::vector<Rat>& out) {
  if (pos == s.size()) {
    out[power_used] += coeff;
    return;
  }
  int remaining = static_cast<int>(s.size() - pos);
  // u strictly decreasing and >= remaining-1 positions below it
  for (int u = std::min(u_max, q_order - power_used); u >= remaining; --u) {
    // lower positions need at least (remaining-1)(remaining)/2 budget
    int tail_min = (remaining - 1) * remaining / 2;
    Rat upow = 1;
    for (int i = 0; i < r[pos]; ++i) upow *= u;
    upow /= factorial(r[pos]);
    for (int v = 1; u * v + power_used + tail_min <= q_order; ++v) {
      Rat vpow = 1;
      for (int i = 0; i < s[pos] - 1; ++i) vpow *= v;
      vpow /= factorial(s[pos] - 1);
      bibracket_rec(s, r, q_order, pos + 1, u - 1, power_used + u * v, coeff * upow * vpow, out);
    }
  }
}

}  // namespace

QSeries bibracket(const std::vector<int>& s, const std::vector<int>& r, int q_order) {
  if (s.size() != r.size()) throw domain_error("bi-bracket index lengths differ");
  for (int si : s)
    if (si < 1) throw domain_error("bi-bracket needs s_i >= 1");
  for (int ri : r)
    if (ri < 0) throw domain_error("bi-bracket needs r_i >= 0");
  std::vector<Rat> out(q_order + 1, 0);
  bibracket_rec(s, r, q_order, 0, q_order, 0, 1, out);
  QSeries f(q_order);
  for (int n = 0; n <= q_order; ++n) f.set_coeff(n, RatFunc(out[n]));
  return f;
}

QSeries bracket(const std::vector<int>& s, int q_order) {
  return bibracket(s, std::vector<int>(s.size(), 0), q_order);
}

namespace {

void z_rec(const std::vector<std::vector<Rat>>& beta, size_t pos, int n_max, int power_used,
           const Rat& coeff, std::vector<Rat>& out) {
  if (pos == beta.size()) {
    out[power_used] += coeff;
    return;
  }
  int q_order = static_cast<int>(out.size()) - 1;
  int remaining = static_cast<int>(beta.size() - pos);
  int tail_min = (remaining - 1) * remaining / 2;
  for (int n = std::min(n_max, q_order - power_used); n >= remaining; --n)
    for (int d = 1; n * d + power_used + tail_min <= q_order; ++d) {
      const auto& b = beta[pos];
      if (d < static_cast<int>(b.size()) && b[d] == 0) continue;
      Rat bd = d < static_cast<int>(b.size()) ? b[d] : Rat(0);
      if (bd == 0) continue;
      z_rec(beta, pos + 1, n - 1, power_used + n * d, coeff * bd, out);
    }
}

// Q(x)/(1-x)^s = sum_d beta_d x^d with beta_d = sum_i Q_i C(d-i+s-1, s-1)
std::vector<Rat> expansion_coeffs(const std::vector<Rat>& Q, int s, int d_max) {
  std::vector<Rat> beta(d_max + 1, 0);
  for (int d = 1; d <= d_max; ++d)
    for (int i = 1; i < static_cast<int>(Q.size()) && i <= d; ++i) {
      if (Q[i] == 0) continue;
      // C(d-i+s-1, s-1)
      Rat c = 1;
      for (int j = 1; j <= s - 1; ++j) c *= frac(d - i + j, j);
      beta[d] += Q[i] * c;
    }
  return beta;
}

}  // namespace

QSeries z_nested(const std::vector<std::vector<Rat>>& numerators, const std::vector<int>& s,
                 int q_order) {
  if (numerators.size() != s.size()) throw domain_error("numerator list length mismatch");
  std::vector<std::vector<Rat>> beta;
  for (size_t i = 0; i < s.size(); ++i)
    beta.push_back(expansion_coeffs(numerators[i], s[i], q_order));
  std::vector<Rat> out(q_order + 1, 0);
  z_rec(beta, 0, q_order, 0, 1, out);
  QSeries f(q_order);
  for (int n = 0; n <= q_order; ++n) f.set_coeff(n, RatFunc(out[n]));
  return f;
}

QSeries bracket_depth1_eulerian(int s, int q_order) {
  // Q^E_s(t) = t P_{s-1}(t)/(s-1)!
  auto p = eulerian_poly(s);
  std::vector<Rat> Q(p.size() + 1, 0);
  Rat f = factorial(s - 1);
  for (size_t i = 0; i < p.size(); ++i) Q[i + 1] = p[i] / f;
  return z_nested({Q}, {s}, q_order);
}

QSeries z_value(const std::vector<int>& s, int q_order) {
  std::vector<std::vector<Rat>> nums;
  for (int si : s) {
    if (si < 2) throw domain_error("multiple q-zeta value needs every s_i >= 2");
    std::vector<Rat> Q;
    if (si % 2 == 0) {
      Q.assign(si / 2 + 1, 0);
      Q[si / 2] = 1;  // t^{s/2}
    } else {
      Q.assign((si - 1) / 2 + 2, 0);
      Q[(si - 1) / 2] = 1;  // t^{(s-1)/2} (t + 1)
      Q[(si - 1) / 2 + 1] = 1;
    }
    nums.push_back(std::move(Q));
  }
  return z_nested(nums, s, q_order);
}

FitResult fit_in_bracket_span(const QSeries& f, const std::vector<BracketIndex>& candidates,
                              int q_order) {
  FitResult res;
  q_order = std::min(q_order, f.order());
  int rows = q_order + 1;
  int cols = static_cast<int>(candidates.size()) + 1;  // + the constant 1

  // columns of q-coefficients
  std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols, 0));
  std::vector<Rat> b(rows);
  for (int n = 0; n <= q_order; ++n) {
    const RatFunc& c = f.coeff(n);
    if (!c.is_constant()) {
      res.note = "series coefficient of q^" + std::to_string(n) + " is not rational: " + c.str();
      return res;
    }
    b[n] = c.constant();
  }
  A[0][0] = 1;  // the constant candidate
  for (int j = 0; j < static_cast<int>(candidates.size()); ++j) {
    QSeries g = candidates[j].r.empty() ? bracket(candidates[j].s, q_order)
                                        : bibracket(candidates[j].s, candidates[j].r, q_order);
    for (int n = 0; n <= q_order; ++n) A[n][j + 1] = g.coeff(n).constant();
  }
  std::vector<std::vector<Rat>> A0 = A;
  std::vector<Rat> b0 = b;

  // row-reduce [A | b]
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int rr = row; rr < rows; ++rr)
      if (A[rr][col] != 0) {
        piv = rr;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[piv], A[row]);
    std::swap(b[piv], b[row]);
    Rat d = A[row][col];
    for (int j = col; j < cols; ++j) A[row][j] /= d;
    b[row] /= d;
    for (int rr = 0; rr < rows; ++rr) {
      if (rr == row || A[rr][col] == 0) continue;
      Rat fmul = A[rr][col];
      for (int j = col; j < cols; ++j) A[rr][j] -= fmul * A[row][j];
      b[rr] -= fmul * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  // particular solution with free variables at zero, then verify every
  // original q-coefficient in order
  std::vector<Rat> x(cols, 0);
  for (int i = 0; i < row; ++i) x[pivot_col[i]] = b[i];
  for (int n = 0; n < rows; ++n) {
    Rat lhs = 0;
    for (int j = 0; j < cols; ++j)
      if (x[j] != 0) lhs += A0[n][j] * x[j];
    if (lhs != b0[n]) {
      res.first_bad_power = n;
      res.note = "no exact solution: first failure at q^" + std::to_string(n);
      return res;
    }
  }
  res.ok = true;
  res.constant = x[0];
  for (int j = 0; j < static_cast<int>(candidates.size()); ++j)
    if (x[j + 1] != 0) res.coeffs.emplace_back(candidates[j], x[j + 1]);
  return res;
}

BracketSeries bracket_with_meta(const BracketIndex& idx, int q_order) {
  BracketSeries out;
  out.series = idx.r.empty() ? bracket(idx.s, q_order) : bibracket(idx.s, idx.r, q_order);
  out.weight = idx.weight();
  out.depth = idx.depth();
  return out;
}

std::vector<BracketIndex> bracket_candidates_up_to(int max_weight) {
  std::vector<BracketIndex> out;
  // compositions (s1,...,sl) with s1 >= 2, s_i >= 1, total <= max_weight
  std::vector<int> acc;
  std::function<void(int)> rec = [&](int left) {
    if (!acc.empty()) out.push_back(BracketIndex{acc, {}});
    for (int nxt = acc.empty() ? 2 : 1; nxt <= left; ++nxt) {
      acc.push_back(nxt);
      rec(left - nxt);
      acc.pop_back();
    }
  };
  rec(max_weight);
  std::sort(out.begin(), out.end(), [](const BracketIndex& a, const BracketIndex& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.s < b.s;
  });
  return out;
}

}  // namespace hilb::qzeta
