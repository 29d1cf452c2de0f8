#pragma once

#include <string>
#include <vector>

#include "hilb/fock.hpp"

namespace hilb::deriv {

// 1 iff (ij < 0 and i+j > 0) or (i < 0 and j < 0).
int epsilon(int i, int j);

// Closed first derivative of a_n (n != 0):
//   (n/2) sum_{i+j=n, |i|,|j|<=B} (-t1 t2)^{eps(i,j)} a_i a_j
//   + n(|n|-1)/2 (t1+t2) a_n.
NormalOrderedOp a_prime_closed(int n, int part_bound);

// k-fold commutator with the boundary operator; the window's part bound
// caps every intermediate monomial.
NormalOrderedOp derivative(const NormalOrderedOp& f, int k, const ComposeWindow& w);
NormalOrderedOp derivative_of_mode(int mode, int k, const ComposeWindow& w);

struct LeadingRow {
  GenPartition la;
  RatFunc got;
  RatFunc predicted;  // n^k k! (-1)^{l(la+)} (t1 t2)^{l(la-)-1}
  bool agree = false;
};

struct LeadingReport {
  int n = 0, k = 0, N = 0;
  bool expansion_exact = false;
  std::string residual_note;
  std::vector<LeadingRow> rows;        // length k+1 monomials within the window
  std::map<GenPartition, RatFunc> lower_terms;
  bool all_agree() const {
    if (!expansion_exact) return false;
    for (const auto& r : rows)
      if (!r.agree) return false;
    return true;
  }
};

// Expand the k-th derivative of a_{-n} over monomials at conformal weight
// -n and compare every length-(k+1) coefficient with the leading-term law.
// Derivatives are computed with parts capped at N, which is exact on input
// degrees <= N - n.
LeadingReport leading_term_check(int n, int k, int N);

// default window: degree n + 2k + 2
int default_degree_bound(int n, int k);

}  // namespace hilb::deriv
