#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "pcount/oracle.hpp"
#include "pcount/ptable.hpp"

using pcount::CacheFormatError;
using pcount::Count;
using pcount::PTable;

TEST_CASE("extend reproduces the small worked example") {
  PTable table;
  table.extend(17);
  CHECK(table.at(17) == 297);
  CHECK(table.at(14) == 135);
  CHECK(table.at(11) == 56);
  CHECK(table.at(2) == 2);
}

TEST_CASE("the table starts at p(0) = 1") {
  PTable table;
  table.extend(0);
  REQUIRE(table.highest() == 0);
  REQUIRE(table.at(0) == 1);
}

TEST_CASE("extend reproduces the large worked example") {
  PTable table;
  table.extend(164);
  CHECK(table.at(164) == Count("156919475295"));
  CHECK(table.at(10) == 42);
}

TEST_CASE("lookup convention and auto-extension") {
  PTable table;
  CHECK(table.p(-3) == 0);
  CHECK(table.p(59) == 831820);
  CHECK(table.p(80) == 15796476);
  REQUIRE(table.highest() >= 80);
  REQUIRE_THROWS_AS(table.at(10'000), std::out_of_range);
  REQUIRE_THROWS_AS(table.extend(-1), std::invalid_argument);
}

TEST_CASE("recurrence agrees with the part-size DP") {
  PTable table;
  table.extend(500);
  const auto expected = pcount::oracle::p_dp_table(500);
  for (std::int64_t n = 0; n <= 500; ++n) {
    REQUIRE(table.at(n) == expected[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("table entries satisfy the re-derived pentagonal identity") {
  // Written out with an explicit k loop, independent of gp_terms_up_to.
  PTable table;
  table.extend(300);
  for (std::int64_t n = 1; n <= 300; ++n) {
    Count residue = table.p(n);
    for (std::int64_t k = 1; k * (3 * k - 1) / 2 <= n; ++k) {
      Count inner = table.p(n - k * (3 * k - 1) / 2);
      inner += table.p(n - k * (3 * k + 1) / 2);
      if (k % 2 == 1) {
        residue -= inner;  // (-1)^(k+1) = +1
      } else {
        residue += inner;
      }
    }
    REQUIRE(residue == 0);
  }
}

TEST_CASE("extending in two steps matches extending once") {
  PTable twice;
  twice.extend(100);
  twice.extend(250);
  PTable once;
  once.extend(250);
  REQUIRE(twice.highest() == once.highest());
  for (std::int64_t n = 0; n <= 250; ++n) {
    REQUIRE(twice.at(n) == once.at(n));
  }
}

TEST_CASE("p is positive and monotone") {
  PTable table;
  table.extend(500);
  for (std::int64_t n = 0; n <= 500; ++n) REQUIRE(table.at(n) >= 1);
  for (std::int64_t n = 1; n <= 500; ++n) REQUIRE(table.at(n) >= table.at(n - 1));
}

TEST_CASE("extension counters") {
  PTable table;
  REQUIRE(table.extensions() == 0);
  table.extend(10);
  REQUIRE(table.extensions() == 10);
  table.extend(10);  // no-op
  REQUIRE(table.extensions() == 10);
  table.extend(12);
  REQUIRE(table.extensions() == 12);
  REQUIRE(table.recurrence_terms() > 0);
}

TEST_CASE("serialize emits the documented format") {
  PTable table;
  table.extend(3);
  std::ostringstream out;
  table.serialize(out);
  REQUIRE(out.str() == "pcount-table v1 3\n1\n1\n2\n3\n");
}

TEST_CASE("serialize then deserialize round-trips exactly") {
  PTable table;
  table.extend(164);
  std::ostringstream out;
  table.serialize(out);

  std::istringstream in(out.str());
  PTable loaded = PTable::deserialize(in);
  REQUIRE(loaded.highest() == table.highest());
  for (std::int64_t n = 0; n <= table.highest(); ++n) {
    REQUIRE(loaded.at(n) == table.at(n));
  }
  REQUIRE(loaded.extensions() == 0);  // loading is not extension work
}

TEST_CASE("deserialize rejects malformed input") {
  const auto reject = [](const std::string& text) {
    std::istringstream in(text);
    REQUIRE_THROWS_AS(PTable::deserialize(in), CacheFormatError);
  };
  reject("");
  reject("wrong-magic v1 1\n1\n1\n");
  reject("pcount-table v2 1\n1\n1\n");             // version mismatch
  reject("pcount-table v1 -1\n");
  reject("pcount-table v1 junk\n");
  reject("pcount-table v1 1 extra\n1\n1\n");
  reject("pcount-table v1 2\n1\n1\n");             // truncated
  reject("pcount-table v1 1\n1\nabc\n");           // malformed entry
  reject("pcount-table v1 1\n1\n-2\n");            // sign not allowed
  reject("pcount-table v1 1\n1\n\n");              // empty entry
  reject("pcount-table v1 1\n2\n1\n");             // p(0) != 1
  reject("pcount-table v1 1\n1\n0\n");             // entry below 1
  reject("pcount-table v1 1\n1\n1\n7\n");          // trailing data
}

TEST_CASE("deserialize tolerates a trailing blank line") {
  std::istringstream in("pcount-table v1 2\n1\n1\n2\n\n");
  PTable loaded = PTable::deserialize(in);
  REQUIRE(loaded.highest() == 2);
  REQUIRE(loaded.at(2) == 2);
}
