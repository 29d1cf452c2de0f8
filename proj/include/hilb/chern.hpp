#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilb/fock.hpp"
#include "hilb/partitions.hpp"

namespace hilb::chern {

// sum over cells of (-1)^k/k! (a' t1 + l' t2)^k.
RatFunc eigenvalue(const Partition& la, int k);

// Degree-preserving operator stored as one matrix per degree 0..degmax.
struct CherOp {
  int k = 0;
  int degmax = 0;
  std::vector<Matrix> mats;
  std::string route;  // "eigen" or "fock"
};

// Defined by its eigenvalues on the fixed-point classes, converted to the
// a_{-la}|0> basis through the fixed-point change of basis.
CherOp gk_eigen(int k, int N);

// t2^k t1^{delta(.)} twist of the t0^k vertex coefficient at
// alpha = -t1/t2, as a normally ordered operator exact on degrees <= N.
NormalOrderedOp gk_fock_op(int k, int N);
CherOp gk_fock(int k, int N);

// Closed displays (monomials with |parts| <= part_bound).
NormalOrderedOp g1_display(int part_bound);
NormalOrderedOp g2_display(int part_bound);

struct MatchReport {
  bool pass = true;
  std::vector<std::string> mismatches;
};

// Exact per-degree matrix equality of the two routes.
MatchReport verify_theorem_1_2(int k, int N);

struct ProbeRow {
  GenPartition la;
  RatFunc got;
  RatFunc predicted;  // (-1)^{l(la+)-1} (t1 t2)^{l(la-)-1}
  bool agree = false;
};

struct ProbeReport {
  int k = 0, N = 0, L = 0;
  bool rank_ok = false;       // expansion reproduced the matrices exactly
  std::string residual_note;  // first discrepancy when it did not
  std::vector<ProbeRow> leading;               // length k+2 rows
  std::map<GenPartition, RatFunc> lower_terms;  // g_la for shorter monomials
};

// Expand the eigen-route operator over monomials of length <= k+2 and
// compare every length-(k+2) coefficient with the predicted leading term.
ProbeReport conjecture_probe(int k, int N);

}  // namespace hilb::chern
