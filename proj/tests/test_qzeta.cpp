#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb/qzeta.hpp"

using namespace hilb;
using namespace hilb::qzeta;

namespace {

// divisor power sums, the oracle for depth-one brackets
Rat sigma(int n, int p) {
  Rat s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    Rat dp = 1;
    for (int i = 0; i < p; ++i) dp *= d;
    s += dp;
  }
  return s;
}

}  // namespace

TEST_CASE("eulerian polynomials") {
  CHECK(eulerian_poly(1) == std::vector<Rat>{1});  // t P_0 = t
  CHECK(eulerian_poly(2) == std::vector<Rat>{1});  // P_1 = 1
  CHECK(eulerian_poly(3) == std::vector<Rat>{1, 1});  // P_2 = 1 + t
  CHECK(eulerian_poly(4) == std::vector<Rat>{1, 4, 1});
}

TEST_CASE("brackets") {
  CHECK(bracket({}, 6) == QSeries(6, RatFunc(1)));

  QSeries b2 = bracket({2}, 4);
  CHECK(b2.coeff(1) == RatFunc(1));
  CHECK(b2.coeff(2) == RatFunc(3));
  CHECK(b2.coeff(3) == RatFunc(4));
  CHECK(b2.coeff(4) == RatFunc(7));

  QSeries b1 = bracket({1}, 3);
  CHECK(b1.coeff(1) == RatFunc(1));
  CHECK(b1.coeff(2) == RatFunc(2));
  CHECK(b1.coeff(3) == RatFunc(2));

  // single-bracket divisor identity for all s <= 6, n <= 20
  for (int s = 1; s <= 6; ++s) {
    QSeries bs = bracket({s}, 20);
    Rat f = factorial(s - 1);
    for (int n = 1; n <= 20; ++n) CHECK(bs.coeff(n) == RatFunc(sigma(n, s - 1) / f));
  }
}

TEST_CASE("bi-brackets") {
  CHECK(bibracket({}, {}, 6) == QSeries(6, RatFunc(1)));

  // enumeration oracle for [1;1]: sum over uv pairs of u q^{uv}
  QSeries bb = bibracket({1}, {1}, 6);
  for (int n = 1; n <= 6; ++n) {
    Rat want = 0;
    for (int u = 1; u <= n; ++u)
      for (int v = 1; u * v <= n; ++v)
        if (u * v == n) want += u;
    CHECK(bb.coeff(n) == RatFunc(want));
  }
  CHECK(bb.coeff(2) == RatFunc(3));
  CHECK(bb.coeff(3) == RatFunc(4));  // (1,3) and (3,1): 1 + 3

  for (const auto& s : std::vector<std::vector<int>>{{2}, {3}, {2, 1}})
    CHECK(bibracket(s, std::vector<int>(s.size(), 0), 12) == bracket(s, 12));
}

TEST_CASE("multiple q-zeta values") {
  CHECK(z_value({2}, 30) == bracket({2}, 30));
  CHECK(z_value({3}, 30) == bracket({3}, 30) * Rat(2));
  CHECK(z_value({4}, 30) == bracket({4}, 30) - bracket({2}, 30).mul_scalar(RatFunc(frac(1, 6))));
  CHECK_THROWS_AS(z_value({1, 2}, 5), domain_error);
}

TEST_CASE("bracket span fitting") {
  QSeries f = bracket({2}, 30) + bracket({3}, 30) * Rat(3);
  auto fit = fit_in_bracket_span(f, {BracketIndex{{2}, {}}, BracketIndex{{3}, {}}}, 30);
  REQUIRE(fit.ok);
  CHECK(fit.constant == 0);
  REQUIRE(fit.coeffs.size() == 2);
  CHECK(fit.coeffs[0].second == 1);
  CHECK(fit.coeffs[1].second == 3);

  auto fit_z4 = fit_in_bracket_span(z_value({4}, 30),
                                    {BracketIndex{{4}, {}}, BracketIndex{{2}, {}}}, 30);
  REQUIRE(fit_z4.ok);
  CHECK(fit_z4.coeffs.size() == 2);
  for (const auto& [idx, c] : fit_z4.coeffs) {
    if (idx.s == std::vector<int>{4}) CHECK(c == 1);
    if (idx.s == std::vector<int>{2}) CHECK(c == frac(-1, 6));
  }

  // the weight-12 cusp form is not a combination of [2] and [3]
  QSeries qq = pochhammer(RatFunc(1), 1, 40);
  QSeries disc = qq.pow_int(24) * QSeries::q_power(1, 40);
  auto bad = fit_in_bracket_span(disc, {BracketIndex{{2}, {}}, BracketIndex{{3}, {}}}, 40);
  CHECK(!bad.ok);
  CHECK(bad.first_bad_power >= 0);

  // stuffle spot check: [2]*[2] lies in the span of [4],[2,2],[2]
  QSeries b2 = bracket({2}, 40);
  auto prod_fit = fit_in_bracket_span(
      b2 * b2, {BracketIndex{{4}, {}}, BracketIndex{{2, 2}, {}}, BracketIndex{{2}, {}}}, 40);
  CHECK(prod_fit.ok);
}

TEST_CASE("candidate enumeration") {
  auto c4 = bracket_candidates_up_to(4);
  // [2],[3],[4],[2,1],[3,1],[2,2],[2,1,1]
  CHECK(c4.size() == 7);
  for (const auto& idx : c4) {
    CHECK(idx.s[0] >= 2);
    CHECK(idx.weight() <= 4);
  }
}
