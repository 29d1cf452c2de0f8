#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb/chern.hpp"
#include "hilb/derivatives.hpp"

using namespace hilb;
using namespace hilb::deriv;

namespace {
RatFunc t1() { return RatFunc::var(kT1); }
RatFunc t2() { return RatFunc::var(kT2); }
}  // namespace

TEST_CASE("epsilon table") {
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10; ++j) {
      if (i == 0 || j == 0) continue;
      int e = epsilon(i, j);
      CHECK(e == epsilon(j, i));
      int want = ((i < 0) != (j < 0) && i + j > 0) || (i < 0 && j < 0) ? 1 : 0;
      CHECK(e == want);
    }
}

TEST_CASE("closed first derivative") {
  // n = 2: linear term coefficient (t1 + t2) * n(|n|-1)/2 = (t1+t2)
  NormalOrderedOp a2p = a_prime_closed(2, 6);
  CHECK(a2p.coeff(GenPartition::of_parts({2})) == t1() + t2());
  // n = 1 has no linear term
  NormalOrderedOp a1p = a_prime_closed(1, 6);
  CHECK(a1p.coeff(GenPartition::of_parts({1})).is_zero());
  // mixed-sign pair with positive total carries -t1 t2
  CHECK(a1p.coeff(GenPartition::of_parts({-2, 3})) == -t1() * t2());
  CHECK(a1p.coeff(GenPartition::of_parts({-1, 2})) == -t1() * t2());
  // two annihilators never do
  CHECK(a2p.coeff(GenPartition::of_parts({1, 1})) == RatFunc(1));

  // creators in a_{-n}': mixed pairs with negative total are plain, paired
  // creators carry the twist
  NormalOrderedOp am1 = a_prime_closed(-1, 6);
  CHECK(am1.coeff(GenPartition::of_parts({-3, 2})) == RatFunc(-1));
  CHECK(am1.coeff(GenPartition::of_parts({-1, -1, 1})).is_zero());
  NormalOrderedOp am2 = a_prime_closed(-2, 6);
  CHECK(am2.coeff(GenPartition::of_parts({-1, -1})) == t1() * t2());

  // specialization t1 = 1, t2 = -1 kills the linear term
  for (int n = 2; n <= 4; ++n) {
    NormalOrderedOp ap = a_prime_closed(n, 8);
    RatFunc lin = ap.coeff(GenPartition::of_parts({n}))
                      .substitute(kT1, RatFunc(1))
                      .substitute(kT2, RatFunc(-1));
    CHECK(lin.is_zero());
  }
}

TEST_CASE("derivative matches the closed form") {
  for (int n = 1; n <= 4; ++n) {
    int cap = 6 + n;
    NormalOrderedOp got = derivative_of_mode(-n, 1, ComposeWindow{cap, 4});
    NormalOrderedOp want = a_prime_closed(-n, cap);
    for (int d = 0; d <= 6; ++d)
      for (const auto& la : partitions_of(d))
        CHECK(apply_op(got, FockVector::basis(la)) == apply_op(want, FockVector::basis(la)));
  }
}

TEST_CASE("ad-chain consistency") {
  ComposeWindow w{9, 5};
  NormalOrderedOp d2 = derivative_of_mode(-1, 2, w);
  NormalOrderedOp d1 = derivative_of_mode(-1, 1, w);
  NormalOrderedOp d2b = derivative(d1, 1, w);
  CHECK(d2 == d2b);
}

TEST_CASE("leading coefficients") {
  // n = 2, k = 0: the operator is a_{-2} itself
  auto r0 = leading_term_check(2, 0, default_degree_bound(2, 0));
  CHECK(r0.expansion_exact);
  CHECK(r0.all_agree());
  REQUIRE(r0.rows.size() == 1);
  CHECK(r0.rows[0].la == GenPartition::of_parts({-2}));
  CHECK(r0.rows[0].got == RatFunc(1));

  // n = 1, k = 1: every length-2 monomial matches the closed form
  auto r1 = leading_term_check(1, 1, default_degree_bound(1, 1));
  CHECK(r1.expansion_exact);
  CHECK(r1.all_agree());
  // the length-2 rows carry the epsilon bookkeeping of the closed form
  NormalOrderedOp closed = a_prime_closed(-1, default_degree_bound(1, 1));
  for (const auto& row : r1.rows) {
    RatFunc expected = closed.coeff(row.la) * RatFunc(row.la.mult_factorial());
    CHECK(row.got == expected);
  }

  // n = 2, k = 2: leading coefficients are 2^2 2! = 8 times the sign pattern
  auto r2 = leading_term_check(2, 2, default_degree_bound(2, 2));
  CHECK(r2.expansion_exact);
  CHECK(r2.all_agree());
  for (const auto& row : r2.rows) {
    int lp = row.la.positive_part().length(), lm = row.la.negative_part().length();
    CHECK(row.predicted ==
          RatFunc(Rat(lp % 2 == 0 ? 8 : -8)) * (t1() * t2()).pow(lm - 1));
  }
}
