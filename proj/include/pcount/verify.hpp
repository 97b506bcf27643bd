#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "pcount/oracle.hpp"
#include "pcount/pentagonal.hpp"
#include "pcount/ptable.hpp"
#include "pcount/restricted.hpp"

// Cross-checking suites pitting the pentagonal-sum fast path against the
// oracle module. Each suite stops at its first counterexample.
namespace pcount::verify {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::uint64_t checks = 0;
  std::string counterexample;  // "n=.. m=.. expected=.. got=.." when failed
};

namespace detail {

template <typename T, typename U>
std::string mismatch(std::int64_t n, std::int64_t m, const T& expected, const U& got) {
  std::ostringstream os;
  os << "n=" << n;
  if (m >= 1) os << " m=" << m;
  os << " expected=" << expected << " got=" << got;
  return os.str();
}

}  // namespace detail

// Recurrence table vs the part-size DP, entry by entry.
inline SuiteResult recurrence_vs_dp(PTable& table, std::int64_t dp_max_n) {
  SuiteResult result{"recurrence-vs-dp"};
  table.extend(dp_max_n);
  const std::vector<Count> expected = oracle::p_dp_table(dp_max_n);
  for (std::int64_t n = 0; n <= dp_max_n; ++n) {
    ++result.checks;
    if (table.at(n) != expected[static_cast<std::size_t>(n)]) {
      result.counterexample = detail::mismatch(n, 0, expected[static_cast<std::size_t>(n)], table.at(n));
      return result;
    }
  }
  result.passed = true;
  return result;
}

// Pentagonal formula vs the direct DP for both restricted families.
inline SuiteResult formula_vs_dp(PTable& table, std::int64_t max_m, std::int64_t dp_max_n) {
  SuiteResult result{"formula-vs-dp"};
  for (std::int64_t m = 1; m <= max_m; ++m) {
    const std::vector<Count> pm_expected = oracle::p_m_dp_table(m, dp_max_n);
    const std::vector<Count> qm_expected = oracle::q_m_dp_table(m, dp_max_n);
    for (std::int64_t n = 0; n <= dp_max_n; ++n) {
      ++result.checks;
      const Count pm = p_m(table, m, n);
      if (pm != pm_expected[static_cast<std::size_t>(n)]) {
        result.counterexample = detail::mismatch(n, m, pm_expected[static_cast<std::size_t>(n)], pm);
        return result;
      }
      const Count qm = q_m(table, m, n);
      if (qm != qm_expected[static_cast<std::size_t>(n)]) {
        result.counterexample = detail::mismatch(n, m, qm_expected[static_cast<std::size_t>(n)], qm);
        return result;
      }
    }
  }
  result.passed = true;
  return result;
}

// Exhaustive enumeration vs everything else at desk scale (n <= 60).
inline SuiteResult enumeration_agreement(PTable& table, std::int64_t max_n, std::int64_t max_m) {
  SuiteResult result{"enumeration"};
  const std::vector<Count> p_expected = oracle::p_dp_table(max_n);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    Count total = 0;
    oracle::for_each_partition(n, [&](const std::vector<std::int64_t>&) { ++total; });
    ++result.checks;
    if (total != p_expected[static_cast<std::size_t>(n)]) {
      result.counterexample = detail::mismatch(n, 0, p_expected[static_cast<std::size_t>(n)], total);
      return result;
    }
    for (std::int64_t m = 1; m <= max_m; ++m) {
      const Count by_modulus = oracle::count_by_predicate(n, modulus_free(m));
      ++result.checks;
      if (by_modulus != p_m(table, m, n)) {
        result.counterexample = detail::mismatch(n, m, by_modulus, p_m(table, m, n));
        return result;
      }
      const Count by_multiplicity = oracle::count_by_predicate(n, multiplicity_bound(m));
      ++result.checks;
      if (by_multiplicity != q_m(table, m, n)) {
        result.counterexample = detail::mismatch(n, m, by_multiplicity, q_m(table, m, n));
        return result;
      }
    }
  }
  result.passed = true;
  return result;
}

// Signed sum over distinct partitions vs the pentagonal indicator.
inline SuiteResult pentagonal_theorem(std::int64_t max_n) {
  SuiteResult result{"pentagonal-theorem"};
  for (std::int64_t n = 1; n <= max_n; ++n) {
    ++result.checks;
    const int expected = pentagonal_indicator(n);
    const int got = oracle::distinct_signed_sum(n);
    if (got != expected) {
      result.counterexample = detail::mismatch(n, 0, expected, got);
      return result;
    }
  }
  result.passed = true;
  return result;
}

// Glaisher's identity, cross-wired: the P formula against the Q oracle and
// the Q formula against the P oracle.
inline SuiteResult glaisher_cross(PTable& table, std::int64_t max_m, std::int64_t dp_max_n) {
  SuiteResult result{"glaisher-cross"};
  for (std::int64_t m = 1; m <= max_m; ++m) {
    const std::vector<Count> pm_expected = oracle::p_m_dp_table(m, dp_max_n);
    const std::vector<Count> qm_expected = oracle::q_m_dp_table(m, dp_max_n);
    for (std::int64_t n = 0; n <= dp_max_n; ++n) {
      ++result.checks;
      const Count pm = p_m(table, m, n);
      if (pm != qm_expected[static_cast<std::size_t>(n)]) {
        result.counterexample = detail::mismatch(n, m, qm_expected[static_cast<std::size_t>(n)], pm);
        return result;
      }
      const Count qm = q_m(table, m, n);
      if (qm != pm_expected[static_cast<std::size_t>(n)]) {
        result.counterexample = detail::mismatch(n, m, pm_expected[static_cast<std::size_t>(n)], qm);
        return result;
      }
    }
  }
  result.passed = true;
  return result;
}

// All five suites against one shared table (so a value-corrupted cache is
// caught by the recurrence suite before anything downstream trusts it).
inline std::vector<SuiteResult> run_all(PTable& table, std::int64_t max_n, std::int64_t max_m,
                                        std::int64_t dp_max_n) {
  std::vector<SuiteResult> results;
  results.push_back(recurrence_vs_dp(table, dp_max_n));
  results.push_back(formula_vs_dp(table, max_m, dp_max_n));
  results.push_back(enumeration_agreement(table, max_n, max_m));
  results.push_back(pentagonal_theorem(max_n));
  results.push_back(glaisher_cross(table, max_m, dp_max_n));
  return results;
}

}  // namespace pcount::verify
