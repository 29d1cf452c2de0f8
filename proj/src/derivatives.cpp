#include "hilb/derivatives.hpp"

#include "hilb/chern.hpp"

namespace hilb::deriv {

namespace {
RatFunc t1v() { return RatFunc::var(kT1); }
RatFunc t2v() { return RatFunc::var(kT2); }
}  // namespace

int epsilon(int i, int j) {
  if (i == 0 || j == 0) throw domain_error("epsilon needs nonzero arguments");
  if ((static_cast<long long>(i) * j < 0 && i + j > 0) || (i < 0 && j < 0)) return 1;
  return 0;
}

NormalOrderedOp a_prime_closed(int n, int part_bound) {
  if (n == 0) throw domain_error("a_0 has no derivative here");
  NormalOrderedOp op;
  RatFunc half_n(frac(n, 2));
  for (int i = -part_bound; i <= part_bound; ++i) {
    if (i == 0) continue;
    int j = n - i;
    if (j == 0 || std::abs(j) > part_bound) continue;
    RatFunc c = half_n;
    if (epsilon(i, j) == 1) c *= -t1v() * t2v();
    // a_i a_j commute for i + j != 0; record normally ordered
    GenPartition gp = GenPartition::of_parts({i, j});
    op.add_term(gp, c);
  }
  op.add_term(GenPartition::of_parts({n}),
              RatFunc(frac(static_cast<long>(n) * (std::abs(n) - 1), 2)) * (t1v() + t2v()));
  return op;
}

NormalOrderedOp derivative(const NormalOrderedOp& f, int k, const ComposeWindow& w) {
  NormalOrderedOp g1 = chern::gk_fock_op(1, w.max_part);
  NormalOrderedOp cur = f;
  for (int i = 0; i < k; ++i) cur = commutator(g1, cur, w);
  return cur;
}

NormalOrderedOp derivative_of_mode(int mode, int k, const ComposeWindow& w) {
  return derivative(NormalOrderedOp::monomial(GenPartition::of_parts({mode})), k, w);
}

int default_degree_bound(int n, int k) { return n + 2 * k + 2; }

LeadingReport leading_term_check(int n, int k, int N) {
  if (n <= 0) throw domain_error("leading_term_check needs n > 0");
  LeadingReport rep;
  rep.n = n;
  rep.k = k;
  rep.N = N;

  ComposeWindow w{N, k + 3};
  NormalOrderedOp fk = derivative_of_mode(-n, k, w);

  // matrices of the action on degrees d <= N - n (rows at degree d + n)
  int dmax = N - n;
  std::vector<Matrix> mats;
  for (int d = 0; d <= dmax; ++d) {
    auto in_basis = partitions_of(d);
    auto out_basis = partitions_of(d + n);
    Matrix m(out_basis.size(), std::vector<RatFunc>(in_basis.size()));
    for (size_t j = 0; j < in_basis.size(); ++j) {
      FockVector img = apply_op(fk, FockVector::basis(in_basis[j]));
      for (const auto& [mu, c] : img.terms()) {
        if (mu.size() != d + n) throw domain_error("derivative is not weight -n");
        m[partition_index(mu)][j] = c;
      }
    }
    mats.push_back(std::move(m));
  }

  auto ex = expand_in_monomials(mats, -n, k + 1, N);
  rep.expansion_exact = ex.exact;
  rep.residual_note = ex.residual_note;

  Rat lead = 1;
  for (int i = 0; i < k; ++i) lead *= n;
  lead *= factorial(k);
  for (const auto& gp : gen_partitions(-n, k + 1, N)) {
    if (gp.weight_plus() > dmax) continue;  // not detectable from these degrees
    LeadingRow row;
    row.la = gp;
    auto it = ex.g.find(gp);
    row.got = it == ex.g.end() ? RatFunc() : it->second;
    int lp = gp.positive_part().length(), lm = gp.negative_part().length();
    row.predicted = RatFunc(Rat(lp % 2 == 0 ? lead : -lead)) * (t1v() * t2v()).pow(lm - 1);
    row.agree = row.got == row.predicted;
    rep.rows.push_back(std::move(row));
  }
  for (const auto& [gp, g] : ex.g)
    if (gp.length() < k + 1) rep.lower_terms.emplace(gp, g);
  return rep;
}

}  // namespace hilb::deriv
