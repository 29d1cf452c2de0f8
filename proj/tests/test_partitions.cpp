#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb/partitions.hpp"

using namespace hilb;

TEST_CASE("cell statistics, printed example") {
  Partition la({5, 5, 5, 2, 1});
  auto s = cell_stats(la, Cell{2, 1});
  CHECK(s.leg == 1);
  CHECK(s.leg_co == 2);
  CHECK(s.arm == 3);
  CHECK(s.arm_co == 1);
  CHECK(s.hook == 5);
  CHECK(s.content == -1);
  CHECK(cells_of(la).size() == 18);

  auto one = cell_stats(Partition({1}), Cell{0, 0});
  CHECK(one.arm == 0);
  CHECK(one.arm_co == 0);
  CHECK(one.leg == 0);
  CHECK(one.leg_co == 0);
  CHECK(one.hook == 1);
  CHECK(one.content == 0);

  auto c = cell_stats(Partition({2, 1}), Cell{0, 1});
  CHECK(c.arm == 0);
  CHECK(c.arm_co == 1);
  CHECK(c.leg == 0);
  CHECK(c.leg_co == 0);
  CHECK(c.hook == 1);
  CHECK(c.content == 1);

  CHECK_THROWS_AS(cell_stats(Partition({2, 1}), Cell{1, 1}), domain_error);
}

TEST_CASE("partition statistics") {
  Partition la({5, 5, 5, 2, 1});
  CHECK(la.size() == 18);
  CHECK(la.length() == 5);
  CHECK(la.z() == 1500);  // 1 * 2 * 5^3 * 1! * 1! * 3!

  Partition empty;
  CHECK(empty.size() == 0);
  CHECK(empty.length() == 0);
  CHECK(empty.n_stat() == 0);
  CHECK(empty.z() == 1);
  CHECK(empty.conjugate() == empty);

  Partition two_one({2, 1});
  CHECK(two_one.n_stat() == 1);
  CHECK(two_one.conjugate() == two_one);
}

TEST_CASE("hook/colength identities for all |la| <= 8") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& la : partitions_of(n)) {
      Partition conj = la.conjugate();
      int sum_leg = 0, sum_arm = 0, count = 0;
      for (const auto& cell : cells_of(la)) {
        auto s = cell_stats(la, cell);
        CHECK(s.hook == s.arm + s.leg + 1);
        auto sc = cell_stats(conj, Cell{cell.col, cell.row});
        CHECK(sc.arm == s.leg);
        CHECK(sc.leg == s.arm);
        CHECK(sc.arm_co == s.leg_co);
        CHECK(sc.leg_co == s.arm_co);
        sum_leg += s.leg;
        sum_arm += s.arm;
        ++count;
      }
      CHECK(count == n);
      CHECK(sum_leg == la.n_stat());
      CHECK(sum_arm == conj.n_stat());
    }
  }
}

TEST_CASE("generalized partition statistics") {
  GenPartition gp = GenPartition::parse("(-2)^1 (1)^2");
  CHECK(gp.length() == 3);
  CHECK(gp.weight() == 0);
  CHECK(gp.mult_factorial() == 2);
  CHECK(gp.delta() == -1);
  CHECK(gp.s_stat() == 6);
  CHECK(gp.weight_plus() == 2);

  GenPartition empty;
  CHECK(empty.length() == 0);
  CHECK(empty.weight() == 0);
  CHECK(empty.delta() == 0);
  CHECK(empty.s_stat() == 0);
  CHECK(empty.mult_factorial() == 1);

  GenPartition pair = GenPartition::parse("(-1)^1 (1)^1");
  CHECK(pair.weight() == 0);
  CHECK(pair.length() == 2);
  CHECK(pair.delta() == 0);
  CHECK(pair.s_stat() == 2);

  for (long long w = -3; w <= 3; ++w)
    for (const auto& g : gen_partitions_up_to(w, 3, 4)) {
      CHECK(g.negated().delta() == -g.delta());
      CHECK(g.negated().s_stat() == g.s_stat());
      CHECK(g.negated().weight() == -g.weight());
    }
}

TEST_CASE("enumeration") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0] == Partition());

  auto gps = gen_partitions(0, 2, 3);
  REQUIRE(gps.size() == 3);
  CHECK(gps[0] == GenPartition::parse("(-3)^1 (3)^1"));
  CHECK(gps[1] == GenPartition::parse("(-2)^1 (2)^1"));
  CHECK(gps[2] == GenPartition::parse("(-1)^1 (1)^1"));

  CHECK_THROWS_AS(gen_partitions(0, 2, -1), domain_error);

  // enumeration is duplicate-free and deterministic
  auto p6a = partitions_of(6), p6b = partitions_of(6);
  CHECK(p6a == p6b);
  for (size_t i = 0; i + 1 < p6a.size(); ++i) CHECK(p6a[i].parts() > p6a[i + 1].parts());
}

TEST_CASE("dominance order") {
  CHECK(dominance_compare(Partition({2}), Partition({1, 1})) == DomRel::greater);
  CHECK(dominance_compare(Partition({2, 2}), Partition({3, 1})) == DomRel::less);
  CHECK(dominance_compare(Partition({3, 1, 1, 1}), Partition({2, 2, 2})) == DomRel::incomparable);
  CHECK(dominance_compare(Partition({2, 1}), Partition({2, 1})) == DomRel::equal);
  CHECK_THROWS_AS(dominance_compare(Partition({2}), Partition({1})), domain_error);
}

TEST_CASE("text round trip") {
  Partition la({5, 5, 5, 2, 1});
  CHECK(la.str() == "5,5,5,2,1");
  CHECK(Partition::parse("5,5,5,2,1") == la);
  GenPartition gp = GenPartition::parse("(-2)^1 (1)^2");
  CHECK(gp.str() == "(-2)^1 (1)^2");
}
