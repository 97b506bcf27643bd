#include <catch2/catch_amalgamated.hpp>

#include "pcount/oracle.hpp"
#include "pcount/pentagonal.hpp"

using pcount::Count;
using pcount::modulus_free;
using pcount::multiplicity_bound;
namespace oracle = pcount::oracle;

TEST_CASE("enumerate_partitions of 0 is the single empty partition") {
  const auto all = oracle::enumerate_partitions(0);
  REQUIRE(all.size() == 1);
  REQUIRE(all[0].parts.empty());
  REQUIRE(all[0].weight() == 0);
  REQUIRE(all[0].num_parts() == 0);
}

TEST_CASE("enumerate_partitions of 4 in decreasing lexicographic order") {
  const auto all = oracle::enumerate_partitions(4);
  const std::vector<oracle::Partition> expected{
      {{4}}, {{3, 1}}, {{2, 2}}, {{2, 1, 1}}, {{1, 1, 1, 1}},
  };
  REQUIRE(all == expected);
}

TEST_CASE("enumerate_partitions of 17 has 297 members") {
  REQUIRE(oracle::enumerate_partitions(17).size() == 297);
}

TEST_CASE("enumeration guard") {
  REQUIRE_THROWS_AS(oracle::enumerate_partitions(oracle::kMaxEnumerationN + 1),
                    std::invalid_argument);
  REQUIRE_THROWS_WITH(oracle::enumerate_partitions(61), Catch::Matchers::ContainsSubstring("60"));
  REQUIRE_THROWS_AS(oracle::enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("enumerated partitions are non-increasing and sum to n") {
  for (std::int64_t n : {5, 9, 12}) {
    oracle::for_each_partition(n, [&](const std::vector<std::int64_t>& parts) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        REQUIRE(parts[i] >= 1);
        if (i > 0) REQUIRE(parts[i] <= parts[i - 1]);
        sum += parts[i];
      }
      REQUIRE(sum == n);
    });
  }
}

TEST_CASE("count_by_predicate on worked examples") {
  CHECK(oracle::count_by_predicate(17, modulus_free(3)) == 108);
  CHECK(oracle::count_by_predicate(10, modulus_free(2)) == 10);   // odd parts
  CHECK(oracle::count_by_predicate(5, multiplicity_bound(1)) == 0);
  CHECK(oracle::count_by_predicate(0, multiplicity_bound(1)) == 1);
}

TEST_CASE("p_m_dp on worked examples") {
  CHECK(oracle::p_m_dp(3, 17) == 108);
  CHECK(oracle::p_m_dp(1, 7) == 0);
  CHECK(oracle::p_m_dp(2, 10) == 10);
  REQUIRE_THROWS_AS(oracle::p_m_dp(0, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(oracle::p_m_dp(2, -1), std::invalid_argument);
}

TEST_CASE("q_m_dp on worked examples") {
  CHECK(oracle::q_m_dp(3, 17) == 108);
  CHECK(oracle::q_m_dp(2, 10) == 10);
  for (std::int64_t m = 1; m <= 5; ++m) CHECK(oracle::q_m_dp(m, 0) == 1);
  CHECK(oracle::q_m_dp(1, 5) == 0);
}

TEST_CASE("p_dp on worked examples") {
  CHECK(oracle::p_dp(0) == 1);
  CHECK(oracle::p_dp(17) == 297);
  // p(5): brute-force enumeration of the 7 partitions
  CHECK(Count(oracle::enumerate_partitions(5).size()) == oracle::p_dp(5));
  CHECK(oracle::p_dp(5) == 7);
}

TEST_CASE("distinct_signed_sum on hand-enumerated cases") {
  // distinct partitions of 5: (5), (4,1), (3,2) with signs -1, +1, +1
  CHECK(oracle::distinct_signed_sum(5) == 1);
  // distinct partitions of 3: (3), (2,1) with signs -1, +1
  CHECK(oracle::distinct_signed_sum(3) == 0);
  CHECK(oracle::distinct_signed_sum(12) == -1);  // 12 = 3(3*3-1)/2, k = 3
  REQUIRE_THROWS_AS(oracle::distinct_signed_sum(0), std::invalid_argument);
  REQUIRE_THROWS_AS(oracle::distinct_signed_sum(61), std::invalid_argument);
}

TEST_CASE("enumeration count matches the DP everywhere it runs") {
  const auto expected = oracle::p_dp_table(40);
  for (std::int64_t n = 0; n <= 40; ++n) {
    REQUIRE(Count(oracle::enumerate_partitions(n).size()) ==
            expected[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("predicate counts agree with the DP oracles") {
  for (std::int64_t m = 1; m <= 6; ++m) {
    const auto pm = oracle::p_m_dp_table(m, 40);
    const auto qm = oracle::q_m_dp_table(m, 40);
    for (std::int64_t n = 0; n <= 40; ++n) {
      REQUIRE(oracle::count_by_predicate(n, modulus_free(m)) ==
              pm[static_cast<std::size_t>(n)]);
      REQUIRE(oracle::count_by_predicate(n, multiplicity_bound(m)) ==
              qm[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("Euler's classical case: odd parts equal distinct parts") {
  for (std::int64_t n = 0; n <= 40; ++n) {
    REQUIRE(oracle::count_by_predicate(n, modulus_free(2)) ==
            oracle::count_by_predicate(n, multiplicity_bound(2)));
  }
}

TEST_CASE("distinct signed sum matches the pentagonal indicator at desk scale") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    REQUIRE(oracle::distinct_signed_sum(n) == pcount::pentagonal_indicator(n));
  }
}
