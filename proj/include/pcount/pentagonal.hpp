#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pcount {

enum class Branch { minus, plus };

// One generalized pentagonal number k(3k-1)/2 (minus branch) or k(3k+1)/2
// (plus branch), together with the sign (-1)^k it carries in the
// alternating pentagonal series.
struct GPTerm {
  std::int64_t k = 0;
  Branch branch = Branch::minus;
  std::int64_t value = 0;
  int sign = 0;

  friend bool operator==(const GPTerm&, const GPTerm&) = default;
};

namespace detail {

inline std::int64_t pentagonal_value(std::int64_t k, Branch branch) {
  const std::int64_t product = k * (branch == Branch::minus ? 3 * k - 1 : 3 * k + 1);
  assert(product % 2 == 0);  // k and 3k-+1 have opposite parity
  return product / 2;
}

}  // namespace detail

// Every generalized pentagonal term with value <= limit, in strictly
// increasing value order: 1, 2, 5, 7, 12, 15, 22, 26, ...
// Interleaving the branches per k is already sorted, since
// k(3k-1)/2 < k(3k+1)/2 < (k+1)(3(k+1)-1)/2.
inline std::vector<GPTerm> gp_terms_up_to(std::int64_t limit) {
  if (limit < 0) throw std::invalid_argument("gp_terms_up_to: limit must be >= 0");
  std::vector<GPTerm> terms;
  for (std::int64_t k = 1;; ++k) {
    const int sign = k % 2 == 0 ? 1 : -1;
    const std::int64_t lo = detail::pentagonal_value(k, Branch::minus);
    if (lo > limit) break;
    terms.push_back({k, Branch::minus, lo, sign});
    const std::int64_t hi = detail::pentagonal_value(k, Branch::plus);
    if (hi <= limit) terms.push_back({k, Branch::plus, hi, sign});
  }
  return terms;
}

// (-1)^k if n = k(3k-1)/2 or k(3k+1)/2 for some k >= 1, else 0.
// n is generalized pentagonal iff 24n+1 is a perfect square, and then
// 24n+1 = (6k-1)^2 on the minus branch, (6k+1)^2 on the plus branch.
inline int pentagonal_indicator(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("pentagonal_indicator: n must be >= 1");
  const std::int64_t square = 24 * n + 1;
  std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(square)));
  while (root * root > square) --root;
  while ((root + 1) * (root + 1) <= square) ++root;
  if (root * root != square) return 0;
  std::int64_t k = 0;
  if ((root + 1) % 6 == 0) {
    k = (root + 1) / 6;
  } else if ((root - 1) % 6 == 0) {
    k = (root - 1) / 6;
  } else {
    return 0;
  }
  return k % 2 == 0 ? 1 : -1;
}

}  // namespace pcount
