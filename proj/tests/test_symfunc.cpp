#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb/symfunc.hpp"

using namespace hilb;
using namespace hilb::symf;

namespace {

RatFunc qv() { return RatFunc::var(kT1); }
RatFunc tv() { return RatFunc::var(kT2); }

FockVector p(std::initializer_list<int> parts) {
  return FockVector::basis(Partition(std::vector<int>(parts)));
}

// complete homogeneous h_k = sum_{mu |- k} p_mu / z_mu; Jacobi-Trudi oracle
// for single-row Schur functions
FockVector h_oracle(int k) {
  FockVector f;
  for (const auto& mu : partitions_of(k)) f += FockVector::basis(mu, RatFunc(1 / mu.z()));
  return f;
}

}  // namespace

TEST_CASE("monomial/power-sum transition") {
  // p_1 = m_1, p_2 = m_2, p_11 = m_2·? ... spot values: p_{(1,1)} = 2 m_{(1,1)} + m_{(2)}
  auto R = p_to_m_matrix(2);
  auto basis = partitions_of(2);  // (2), (1,1)
  REQUIRE(basis.size() == 2);
  int i11 = 1, i2 = 0;
  CHECK(R[i2][i2] == 1);
  CHECK(R[i2][i11] == 0);
  CHECK(R[i11][i2] == 1);
  CHECK(R[i11][i11] == 2);

  // m in p round trip
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n)) {
      FockVector f = m_in_p(mu);
      CHECK(!f.is_zero());
    }
  CHECK(m_in_p(Partition({1, 1})) == (p({1, 1}) - p({2})) * RatFunc(frac(1, 2)));
}

TEST_CASE("gram-schmidt P") {
  // degree 1: P_(1) = p_1 for either deformation
  CHECK(gram_schmidt_P(IPKind::jack, Partition({1})) == p({1}));
  CHECK(gram_schmidt_P(IPKind::macdonald, Partition({1})) == p({1}));

  // jack: P_(1,1) = m_(1,1) = (p_1^2 - p_2)/2, from the 2x2 orthogonality
  // system solved by hand
  CHECK(gram_schmidt_P(IPKind::jack, Partition({1, 1})) ==
        (p({1, 1}) - p({2})) * RatFunc(frac(1, 2)));

  // macdonald at q = t degenerates to Schur: P_(2) -> s_(2) = h_2
  FockVector P2 = gram_schmidt_P(IPKind::macdonald, Partition({2}));
  CHECK(subst_qt(P2, tv(), tv()) == h_oracle(2));

  // orthogonality for both deformations through degree 5
  for (int n = 2; n <= 5; ++n) {
    auto basis = partitions_of(n);
    for (auto kind : {IPKind::jack, IPKind::macdonald})
      for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b)
          CHECK(inner(kind, gram_schmidt_P(kind, basis[a]), gram_schmidt_P(kind, basis[b]))
                    .is_zero());
  }
}

TEST_CASE("jack integral form") {
  CHECK(jack_J(Partition({1})) == p({1}));
  CHECK(jack_J(Partition({1, 1})) == p({1, 1}) - p({2}));

  // limit route agrees with the Gram-Schmidt route
  for (int n = 1; n <= 3; ++n)
    for (const auto& la : partitions_of(n)) CHECK(jack_J_via_limit(la, 2) == jack_J(la));
}

TEST_CASE("macdonald integral form and duality") {
  CHECK(macdonald_J(Partition({1})) == p({1}) * (RatFunc(1) - tv()));

  // J_la(q^{-1}, t^{-1}) = (-1)^{|la|} q^{-n(la')} t^{-n(la)-|la|} J_la(q,t)
  for (int n = 1; n <= 4; ++n)
    for (const auto& la : partitions_of(n)) {
      FockVector lhs = subst_qt(macdonald_J(la), qv().inverse(), tv().inverse());
      RatFunc c = RatFunc(Rat(n % 2 == 0 ? 1 : -1)) *
                  qv().pow(la.conjugate().n_stat()).inverse() *
                  tv().pow(la.n_stat() + n).inverse();
      CHECK(lhs == macdonald_J(la) * c);
    }
}

TEST_CASE("transformed basis") {
  CHECK(transformed_H(Partition()) == FockVector::vacuum());

  // round trip through the inverse relation
  for (int n = 1; n <= 4; ++n)
    for (const auto& la : partitions_of(n)) CHECK(macdonald_J_from_H(la) == macdonald_J(la));

  // H~_(1) by hand: J_(1)(q, 1/t) = (1 - 1/t) p_1, stretch p_1 by
  // 1/(1 - 1/t): gives p_1 exactly
  CHECK(transformed_H(Partition({1})) == p({1}));

  // linear independence per degree
  for (int n = 1; n <= 5; ++n) {
    auto basis = partitions_of(n);
    Matrix m(basis.size(), std::vector<RatFunc>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
      FockVector H = transformed_H(basis[j]);
      for (const auto& [mu, c] : H.terms()) m[partition_index(mu)][j] = c;
    }
    CHECK_NOTHROW(mat_inverse(m));
  }
}

TEST_CASE("degree bound guard") {
  CHECK_THROWS_AS(gram_schmidt_P(IPKind::jack, Partition({9}), 8), domain_error);
  CHECK_NOTHROW(gram_schmidt_P(IPKind::jack, Partition({3})));
}

TEST_CASE("plethystic scaling") {
  FockVector f = p({2}) + p({1, 1}) * RatFunc(Rat(3));
  CHECK(f.plethysm_scale([](int) { return RatFunc(1); }) == f);
  CHECK(p({2}).plethysm_scale([](int k) { return RatFunc(1) - tv().pow(k); }) ==
        p({2}) * (RatFunc(1) - tv().pow(2)));
  CHECK(p({1, 1}).plethysm_scale([](int k) { return RatFunc(1) - tv().pow(k); }) ==
        p({1, 1}) * (RatFunc(1) - tv()).pow(2));
}

TEST_CASE("fixed point classes") {
  RatFunc t1 = RatFunc::var(kT1), t2 = RatFunc::var(kT2);
  CHECK(fixed_point_class(Partition({1})) == p({1}) * (t1 * t2));

  // conjugation symmetry J^la(t1,t2) = J^{la'}(t2,t1)
  for (int n = 1; n <= 5; ++n)
    for (const auto& la : partitions_of(n)) {
      FockVector lhs = fixed_point_class(la);
      FockVector conj = fixed_point_class(la.conjugate());
      FockVector rhs;
      for (const auto& [mu, c] : conj.terms())
        rhs.add_term(mu, c.substitute(kT1, RatFunc::var(kAlpha))
                             .substitute(kT2, t1)
                             .substitute(kAlpha, t2));
      CHECK(lhs == rhs);
    }

  // the classes form a basis in each degree <= 6
  for (int n = 1; n <= 6; ++n) {
    auto basis = partitions_of(n);
    Matrix m(basis.size(), std::vector<RatFunc>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
      FockVector J = fixed_point_class(basis[j]);
      for (const auto& [mu, c] : J.terms()) m[partition_index(mu)][j] = c;
    }
    CHECK_NOTHROW(mat_inverse(m));
  }
}
