#include "hilb/chern.hpp"

#include "hilb/symfunc.hpp"
#include "hilb/vertex.hpp"

namespace hilb::chern {

namespace {

RatFunc t1v() { return RatFunc::var(kT1); }
RatFunc t2v() { return RatFunc::var(kT2); }

struct FixedPointBasis {
  Matrix to_fock;    // columns: J^la in the a_{-mu}|0> basis
  Matrix from_fock;  // inverse
};

const FixedPointBasis& fixed_point_basis(int n) {
  static std::map<int, FixedPointBasis> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto basis = partitions_of(n);
  int d = static_cast<int>(basis.size());
  FixedPointBasis fp;
  fp.to_fock.assign(d, std::vector<RatFunc>(d));
  for (int j = 0; j < d; ++j) {
    FockVector J = symf::fixed_point_class(basis[j]);
    for (const auto& [mu, c] : J.terms()) fp.to_fock[partition_index(mu)][j] = c;
  }
  fp.from_fock = mat_inverse(fp.to_fock);  // singular would mean a degenerate basis
  return cache.emplace(n, std::move(fp)).first->second;
}

}  // namespace

RatFunc eigenvalue(const Partition& la, int k) {
  MultiPoly sum;
  for (const auto& cell : cells_of(la)) {
    auto s = cell_stats(la, cell);
    MultiPoly lin = MultiPoly::var(kT1).mul_scalar(Rat(s.arm_co)) +
                    MultiPoly::var(kT2).mul_scalar(Rat(s.leg_co));
    sum += lin.pow(k);
  }
  Rat scale = (k % 2 == 0 ? Rat(1) : Rat(-1)) / factorial(k);
  return RatFunc(sum.mul_scalar(scale));
}

CherOp gk_eigen(int k, int N) {
  CherOp op;
  op.k = k;
  op.degmax = N;
  op.route = "eigen";
  for (int n = 0; n <= N; ++n) {
    const auto& fp = fixed_point_basis(n);
    auto basis = partitions_of(n);
    int d = static_cast<int>(basis.size());
    Matrix cd(d, std::vector<RatFunc>(d));
    for (int j = 0; j < d; ++j) {
      RatFunc ev = eigenvalue(basis[j], k);
      for (int i = 0; i < d; ++i) cd[i][j] = fp.to_fock[i][j] * ev;
    }
    op.mats.push_back(mat_mul(cd, fp.from_fock));
  }
  return op;
}

NormalOrderedOp gk_fock_op(int k, int N) {
  NormalOrderedOp raw = vertex::bbar_k(k, N);
  RatFunc minus_t1_over_t2 = -t1v() / t2v();
  RatFunc t2k = t2v().pow(k);
  NormalOrderedOp out;
  for (const auto& [gp, c] : raw.terms()) {
    RatFunc cc = c.substitute(kAlpha, minus_t1_over_t2);
    out.add_term(gp, cc * t2k * t1v().pow(gp.delta()));
  }
  return out;
}

CherOp gk_fock(int k, int N) {
  CherOp op;
  op.k = k;
  op.degmax = N;
  op.route = "fock";
  NormalOrderedOp A = gk_fock_op(k, N);
  for (int n = 0; n <= N; ++n) op.mats.push_back(matrix_on_degree(A, n));
  return op;
}

NormalOrderedOp g1_display(int part_bound) {
  NormalOrderedOp op;
  RatFunc half(frac(1, 2));
  for (int i = 1; i < part_bound; ++i)
    for (int j = 1; i + j <= part_bound; ++j) {
      op.add_term(GenPartition::of_parts({-i, -j, i + j}), half * t1v() * t2v());
      op.add_term(GenPartition::of_parts({-i - j, i, j}), -half);
    }
  for (int i = 1; i <= part_bound; ++i)
    op.add_term(GenPartition::of_parts({-i, i}),
                -(t1v() + t2v()) * RatFunc(frac(i - 1, 2)));
  return op;
}

NormalOrderedOp g2_display(int part_bound) {
  NormalOrderedOp op;
  for (const auto& gp : gen_partitions(0, 4, part_bound)) {
    int lp = gp.positive_part().length(), lm = gp.negative_part().length();
    RatFunc c = RatFunc(Rat(lp % 2 == 1 ? 1 : -1)) * (t1v() * t2v()).pow(lm - 1);
    op.add_term(gp, c / RatFunc(gp.mult_factorial()));
  }
  for (const auto& gp : gen_partitions(0, 3, part_bound)) {
    int lp = gp.positive_part().length(), lm = gp.negative_part().length();
    RatFunc c = RatFunc(frac(static_cast<long>(gp.weight_plus()) - 1, 2)) *
                RatFunc(Rat(lp % 2 == 0 ? 1 : -1)) * (t1v() * t2v()).pow(lm - 1) *
                (t1v() + t2v());
    op.add_term(gp, c / RatFunc(gp.mult_factorial()));
  }
  for (int i = 1; i <= part_bound; ++i) {
    RatFunc c = (t1v() + t2v()).pow(2) * RatFunc(frac(2L * i * i - 3 * i + 1, 12)) +
                t1v() * t2v() * RatFunc(frac(1L - static_cast<long>(i) * i, 12));
    op.add_term(GenPartition::of_parts({-i, i}), c);
  }
  return op;
}

MatchReport verify_theorem_1_2(int k, int N) {
  MatchReport rep;
  CherOp eig = gk_eigen(k, N);
  CherOp fock = gk_fock(k, N);
  for (int n = 0; n <= N; ++n) {
    auto basis = partitions_of(n);
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j)
        if (eig.mats[n][i][j] != fock.mats[n][i][j]) {
          rep.pass = false;
          rep.mismatches.push_back("degree " + std::to_string(n) + " entry (" + basis[i].str() +
                                   " ; " + basis[j].str() + "): eigen " + eig.mats[n][i][j].str() +
                                   " vs fock " + fock.mats[n][i][j].str());
        }
  }
  return rep;
}

ProbeReport conjecture_probe(int k, int N) {
  ProbeReport rep;
  rep.k = k;
  rep.N = N;
  rep.L = k + 2;
  CherOp eig = gk_eigen(k, N);
  auto ex = expand_in_monomials(eig.mats, 0, k + 2, N);
  rep.rank_ok = ex.exact;
  rep.residual_note = ex.residual_note;
  // every detectable length-(k+2) monomial gets a verdict, zero or not
  for (const auto& gp : gen_partitions(0, k + 2, N)) {
    if (gp.weight_plus() > N) continue;
    ProbeRow row;
    row.la = gp;
    auto it = ex.g.find(gp);
    row.got = it == ex.g.end() ? RatFunc() : it->second;
    int lp = gp.positive_part().length(), lm = gp.negative_part().length();
    row.predicted = RatFunc(Rat(lp % 2 == 1 ? 1 : -1)) * (t1v() * t2v()).pow(lm - 1);
    row.agree = row.got == row.predicted;
    rep.leading.push_back(std::move(row));
  }
  for (const auto& [gp, g] : ex.g)
    if (gp.length() < k + 2) rep.lower_terms.emplace(gp, g);
  return rep;
}

}  // namespace hilb::chern
