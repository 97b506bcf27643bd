#pragma once

#include <cstdint>
#include <stdexcept>

#include "pcount/count.hpp"
#include "pcount/pentagonal.hpp"
#include "pcount/ptable.hpp"

namespace pcount {

enum class RestrictionKind { modulus_free, multiplicity_bound };

// modulus_free(m): no part divisible by m.
// multiplicity_bound(m): every part appears fewer than m times.
// Glaisher's identity makes the two families equinumerous; the library
// computes both through the same pentagonal sum and tests the identity
// against independent oracles instead of assuming it.
struct Restriction {
  RestrictionKind kind;
  std::int64_t m;  // >= 1
};

inline Restriction modulus_free(std::int64_t m) {
  return {RestrictionKind::modulus_free, m};
}

inline Restriction multiplicity_bound(std::int64_t m) {
  return {RestrictionKind::multiplicity_bound, m};
}

namespace detail {

inline void check_restricted_args(std::int64_t m, std::int64_t n) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
}

}  // namespace detail

// P_m(n), the number of partitions of n with no part divisible by m:
//
//   P_m(n) = p(n) + sum_{k>=1} (-1)^k [ p(n - m k(3k-1)/2) + p(n - m k(3k+1)/2) ]
//
// The sum is truncated to offsets m*g <= n; the remaining terms probe
// p(negative) = 0 and are never evaluated. Signs come straight from
// GPTerm.sign = (-1)^k (no sign flip here, unlike PTable::extend).
inline Count p_m(PTable& table, std::int64_t m, std::int64_t n) {
  detail::check_restricted_args(m, n);
  table.extend(n);
  Count result = table.p(n);
  for (const GPTerm& g : gp_terms_up_to(n / m)) {
    const Count& probe = table.p(n - m * g.value);
    if (g.sign < 0) {
      result -= probe;
    } else {
      result += probe;
    }
  }
  return result;
}

// Q_m(n), the number of partitions of n in which every part appears fewer
// than m times. Equal to P_m(n), so it shares the pentagonal sum; the
// direct multiplicity-bounded DP stays in the oracle so the identity
// remains a falsifiable test.
inline Count q_m(PTable& table, std::int64_t m, std::int64_t n) {
  return p_m(table, m, n);
}

// Partitions of n with at least one part divisible by m.
inline Count complement(PTable& table, std::int64_t m, std::int64_t n) {
  detail::check_restricted_args(m, n);
  return table.p(n) - p_m(table, m, n);
}

// Number of pentagonal terms the p_m sum evaluates for (m, n); O(sqrt(n/m)).
inline std::size_t p_m_term_count(std::int64_t m, std::int64_t n) {
  detail::check_restricted_args(m, n);
  return gp_terms_up_to(n / m).size();
}

}  // namespace pcount
