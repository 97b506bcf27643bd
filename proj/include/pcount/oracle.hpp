#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcount/count.hpp"
#include "pcount/restricted.hpp"

// Slow, independently implemented counting paths used only to validate the
// fast pentagonal-sum routines. Nothing here touches pentagonal numbers or
// Euler's recurrence; the DP oracles use the same exact Count type so every
// comparison is exact.
namespace pcount::oracle {

// Hard ceiling for exhaustive enumeration: p(60) = 966467 partitions is the
// practical limit for filtering whole partition sets in a test suite.
inline constexpr std::int64_t kMaxEnumerationN = 60;

struct Partition {
  std::vector<std::int64_t> parts;  // non-increasing, all >= 1

  std::int64_t weight() const {
    std::int64_t w = 0;
    for (std::int64_t part : parts) w += part;
    return w;
  }
  std::size_t num_parts() const { return parts.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;
};

namespace detail {

inline void check_enumeration_n(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("enumeration: n must be >= 0");
  if (n > kMaxEnumerationN) {
    throw std::invalid_argument("enumeration: n exceeds the exhaustive-enumeration limit of " +
                                std::to_string(kMaxEnumerationN));
  }
}

template <typename Visitor>
void descend(std::int64_t remaining, std::int64_t max_part,
             std::vector<std::int64_t>& prefix, Visitor& visit) {
  if (remaining == 0) {
    visit(std::as_const(prefix));
    return;
  }
  for (std::int64_t part = std::min(max_part, remaining); part >= 1; --part) {
    prefix.push_back(part);
    descend(remaining - part, part, prefix, visit);
    prefix.pop_back();
  }
}

// sign tracks (-1)^(parts chosen so far).
inline void distinct_descend(std::int64_t remaining, std::int64_t max_part, int sign, int& sum) {
  if (remaining == 0) {
    sum += sign;
    return;
  }
  for (std::int64_t part = std::min(max_part, remaining); part >= 1; --part) {
    distinct_descend(remaining - part, part - 1, -sign, sum);
  }
}

}  // namespace detail

// Visits every partition of n as a non-increasing part list, in decreasing
// lexicographic order: (n), (n-1,1), ..., (1,1,...,1). n = 0 visits the
// single empty partition.
template <typename Visitor>
void for_each_partition(std::int64_t n, Visitor visit) {
  detail::check_enumeration_n(n);
  std::vector<std::int64_t> prefix;
  detail::descend(n, n, prefix, visit);
}

inline std::vector<Partition> enumerate_partitions(std::int64_t n) {
  std::vector<Partition> all;
  for_each_partition(n, [&](const std::vector<std::int64_t>& parts) {
    all.push_back(Partition{parts});
  });
  return all;
}

inline bool satisfies(const std::vector<std::int64_t>& parts, const Restriction& r) {
  if (r.kind == RestrictionKind::modulus_free) {
    for (std::int64_t part : parts) {
      if (part % r.m == 0) return false;
    }
    return true;
  }
  // parts are non-increasing, so equal values sit in one run
  std::int64_t run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
    if (run >= r.m) return false;
  }
  return true;
}

// Exhaustively counts the partitions of n satisfying the restriction.
inline Count count_by_predicate(std::int64_t n, const Restriction& r) {
  if (r.m < 1) throw std::invalid_argument("count_by_predicate: m must be >= 1");
  Count total = 0;
  for_each_partition(n, [&](const std::vector<std::int64_t>& parts) {
    if (satisfies(parts, r)) ++total;
  });
  return total;
}

// p(t) for every t in [0, limit] by the textbook part-size DP: after
// folding in sizes 1..limit, acc[t] counts partitions of t into parts
// <= limit, which is p(t) for t <= limit. O(limit^2) big-int additions.
inline std::vector<Count> p_dp_table(std::int64_t limit) {
  if (limit < 0) throw std::invalid_argument("p_dp_table: limit must be >= 0");
  std::vector<Count> acc(static_cast<std::size_t>(limit) + 1);
  acc[0] = 1;
  for (std::int64_t s = 1; s <= limit; ++s) {
    for (std::int64_t t = s; t <= limit; ++t) acc[t] += acc[t - s];
  }
  return acc;
}

inline Count p_dp(std::int64_t n) { return p_dp_table(n).back(); }

// P_m(t) for every t in [0, limit]: same DP restricted to part sizes not
// divisible by m.
inline std::vector<Count> p_m_dp_table(std::int64_t m, std::int64_t limit) {
  if (m < 1) throw std::invalid_argument("p_m_dp_table: m must be >= 1");
  if (limit < 0) throw std::invalid_argument("p_m_dp_table: limit must be >= 0");
  std::vector<Count> acc(static_cast<std::size_t>(limit) + 1);
  acc[0] = 1;
  for (std::int64_t s = 1; s <= limit; ++s) {
    if (s % m == 0) continue;
    for (std::int64_t t = s; t <= limit; ++t) acc[t] += acc[t - s];
  }
  return acc;
}

inline Count p_m_dp(std::int64_t m, std::int64_t n) { return p_m_dp_table(m, n).back(); }

// Q_m(t) for every t in [0, limit]: each part size s contributes a chosen
// multiplicity c in [0, m-1] with c*s <= t.
inline std::vector<Count> q_m_dp_table(std::int64_t m, std::int64_t limit) {
  if (m < 1) throw std::invalid_argument("q_m_dp_table: m must be >= 1");
  if (limit < 0) throw std::invalid_argument("q_m_dp_table: limit must be >= 0");
  std::vector<Count> acc(static_cast<std::size_t>(limit) + 1);
  acc[0] = 1;
  for (std::int64_t s = 1; s <= limit; ++s) {
    std::vector<Count> next(static_cast<std::size_t>(limit) + 1);
    for (std::int64_t t = 0; t <= limit; ++t) {
      for (std::int64_t c = 0; c < m && c * s <= t; ++c) next[t] += acc[t - c * s];
    }
    acc = std::move(next);
  }
  return acc;
}

inline Count q_m_dp(std::int64_t m, std::int64_t n) { return q_m_dp_table(m, n).back(); }

// Sum of (-1)^(number of parts) over the nonempty distinct partitions of n.
// Euler's pentagonal number theorem says this equals pentagonal_indicator(n).
inline int distinct_signed_sum(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("distinct_signed_sum: n must be >= 1");
  detail::check_enumeration_n(n);
  int sum = 0;
  detail::distinct_descend(n, n, 1, sum);
  return sum;
}

}  // namespace pcount::oracle
