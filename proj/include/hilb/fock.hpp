#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hilb/partitions.hpp"
#include "hilb/qseries.hpp"
#include "hilb/ratfunc.hpp"

namespace hilb {

// Finite linear combination of basis vectors a_{-lambda}|0> indexed by
// partitions; doubles as a symmetric function in the power-sum basis via
// p_lambda <-> a_{-lambda}|0>.
class FockVector {
 public:
  FockVector() = default;
  static FockVector vacuum() { return basis(Partition()); }
  static FockVector basis(const Partition& la, const RatFunc& c = RatFunc(1));

  const std::map<Partition, RatFunc>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(const Partition& la) const;
  void add_term(const Partition& la, const RatFunc& c);
  int max_degree() const;  // 0 for the zero vector
  bool is_homogeneous(int degree) const;
  FockVector component(int degree) const;

  FockVector operator-() const;
  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector operator*(const RatFunc& s) const;  // scalar action
  FockVector& operator+=(const FockVector& o);
  bool operator==(const FockVector& o) const { return c_ == o.c_; }
  bool operator!=(const FockVector& o) const { return !(*this == o); }

  // Multiply as symmetric functions (p-monomials concatenate).
  FockVector sym_mul(const FockVector& o) const;
  // p_k -> factor(k) p_k, extended multiplicatively.
  FockVector plethysm_scale(const std::function<RatFunc(int)>& factor) const;

  std::string str() const;

 private:
  std::map<Partition, RatFunc> c_;  // no zero coefficients
};

inline FockVector operator*(const RatFunc& s, const FockVector& v) { return v * s; }

// Finite linear combination of normally ordered monomials a_lambda indexed
// by generalized partitions (creations left of annihilations).
class NormalOrderedOp {
 public:
  NormalOrderedOp() = default;
  static NormalOrderedOp identity() { return monomial(GenPartition()); }
  static NormalOrderedOp monomial(const GenPartition& gp, const RatFunc& c = RatFunc(1));

  const std::map<GenPartition, RatFunc>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(const GenPartition& gp) const;
  void add_term(const GenPartition& gp, const RatFunc& c);
  int max_abs_part() const;
  int max_length() const;
  // Conformal weight when every term agrees; throws otherwise.
  long long weight() const;

  NormalOrderedOp operator-() const;
  NormalOrderedOp operator+(const NormalOrderedOp& o) const;
  NormalOrderedOp operator-(const NormalOrderedOp& o) const;
  NormalOrderedOp operator*(const RatFunc& s) const;
  NormalOrderedOp& operator+=(const NormalOrderedOp& o);
  bool operator==(const NormalOrderedOp& o) const { return c_ == o.c_; }
  bool operator!=(const NormalOrderedOp& o) const { return !(*this == o); }

  // Coefficient-wise rescale by f(lambda) (used for twists like t1^delta).
  NormalOrderedOp rescaled(const std::function<RatFunc(const GenPartition&)>& f) const;
  NormalOrderedOp map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const;

  std::string str() const;  // "c * a(-2)a(1)^2 + ..."

 private:
  std::map<GenPartition, RatFunc> c_;  // no zero coefficients
};

// Single Heisenberg mode: k < 0 creates, k > 0 annihilates ([a_k, a_l] =
// k delta_{k,-l}); k = 0 is an error.
FockVector apply_mode(int k, const FockVector& v);
// Normally ordered monomial a_gp applied to v.
FockVector apply_monomial(const GenPartition& gp, const FockVector& v);
FockVector apply_op(const NormalOrderedOp& A, const FockVector& v);

struct ComposeWindow {
  int max_part;   // bound on |part| of surviving monomials
  int max_len;    // bound on length of surviving monomials
  bool allow_drop = false;  // drop out-of-window terms instead of failing
};

// Normally ordered product via Wick contractions between A's annihilators
// and B's creators.  Exact within the window; an out-of-window term is an
// error unless allow_drop is set.
NormalOrderedOp compose(const NormalOrderedOp& A, const NormalOrderedOp& B,
                        const ComposeWindow& w);
NormalOrderedOp commutator(const NormalOrderedOp& A, const NormalOrderedOp& B,
                           const ComposeWindow& w);

using Matrix = std::vector<std::vector<RatFunc>>;
using LinearAction = std::function<FockVector(const FockVector&)>;

// Matrix of a degree-preserving operator on the basis {a_{-la}|0> : la |- n},
// in enumeration order (entry [i][j] = coefficient of basis i in A e_j).
Matrix matrix_on_degree(const NormalOrderedOp& A, int n);
Matrix matrix_on_degree(const LinearAction& act, int n);

// Sum_n q^n tr(A restricted to degree n).
QSeries trace_q(const NormalOrderedOp& A, int q_order);
QSeries trace_q(const LinearAction& act, int q_order);

struct MonomialExpansion {
  NormalOrderedOp op;  // reconstructed operator, coefficients g_la / la^!
  std::map<GenPartition, RatFunc> g;  // the g_la themselves
  bool exact = false;  // residual vanished on every degree <= N
  std::string residual_note;
};

// Recover sum g_la a_la / la^! from the matrices of an operator of the given
// conformal weight on degrees 0..N (N = mats.size()-1); candidate monomials
// have length <= max_len and |parts| <= max_part.  The candidate system is
// triangular in |la^+|; the residual against the input matrices is checked
// afterwards and reported.
MonomialExpansion expand_in_monomials(const std::vector<Matrix>& mats, long long weight,
                                      int max_len, int max_part);

// Exact Gaussian elimination utilities over Q(t1,t2,alpha,m).
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_identity(int n);
Matrix mat_inverse(const Matrix& a);  // throws domain_error when singular
bool mat_equal(const Matrix& a, const Matrix& b);

}  // namespace hilb
