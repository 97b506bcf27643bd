#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcount/count.hpp"
#include "pcount/pentagonal.hpp"

namespace pcount {

// Thrown when a serialized table fails validation.
class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Memoized table of the unrestricted partition function, grown with the
// pentagonal-number recurrence
//
//   p(i) = p(i-1) + p(i-2) - p(i-5) - p(i-7) + p(i-12) + p(i-15) - ...
//
// Entries are append-only: extending to a larger index never changes the
// ones already computed. Concurrent reads of computed indices are fine;
// extension is single-writer.
class PTable {
 public:
  PTable() : counts_{Count(1)} {}

  std::int64_t highest() const { return static_cast<std::int64_t>(counts_.size()) - 1; }

  // Entries computed by this object (a table loaded from cache starts at 0,
  // so a warm cache run reports 0 extensions).
  std::uint64_t extensions() const { return extensions_; }

  // Recurrence terms summed while extending.
  std::uint64_t recurrence_terms() const { return recurrence_terms_; }

  // Ensures counts[i] = p(i) for all i <= n.
  void extend(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("PTable::extend: index must be >= 0");
    if (n <= highest()) return;
    const std::vector<GPTerm> terms = gp_terms_up_to(n);
    counts_.reserve(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = highest() + 1; i <= n; ++i) {
      Count acc = 0;
      for (const GPTerm& g : terms) {
        if (g.value > i) break;
        // The recurrence moves the pentagonal series across the equality,
        // so the series' (-1)^k term contributes with sign (-1)^(k+1):
        // the + + - - + + ... pattern.
        const Count& probe = counts_[static_cast<std::size_t>(i - g.value)];
        if (g.sign < 0) {
          acc += probe;
        } else {
          acc -= probe;
        }
        ++recurrence_terms_;
      }
      counts_.push_back(std::move(acc));
      ++extensions_;
    }
  }

  // p(j), auto-extending the table; p(j) = 0 for j < 0 by convention.
  const Count& p(std::int64_t j) {
    if (j < 0) return zero();
    extend(j);
    return counts_[static_cast<std::size_t>(j)];
  }

  // p(j) for an already-computed index; negative j yields 0.
  const Count& at(std::int64_t j) const {
    if (j < 0) return zero();
    if (j > highest()) throw std::out_of_range("PTable::at: index not computed");
    return counts_[static_cast<std::size_t>(j)];
  }

  // Text format: one header line "pcount-table v1 <highest>", then
  // p(0)..p(highest) as decimal strings, one per line.
  void serialize(std::ostream& out) const {
    out << "pcount-table v1 " << highest() << '\n';
    for (const Count& c : counts_) out << c << '\n';
  }

  static PTable deserialize(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw CacheFormatError("cache: empty input");
    std::istringstream hs(header);
    std::string magic, version, extra;
    std::int64_t highest = -1;
    if (!(hs >> magic >> version >> highest) || (hs >> extra) || magic != "pcount-table" ||
        version != "v1" || highest < 0) {
      throw CacheFormatError("cache: bad header: " + header);
    }
    PTable table;
    table.counts_.clear();
    table.counts_.reserve(static_cast<std::size_t>(highest) + 1);
    std::string line;
    for (std::int64_t i = 0; i <= highest; ++i) {
      if (!std::getline(in, line))
        throw CacheFormatError("cache: truncated at index " + std::to_string(i));
      table.counts_.push_back(parse_entry(line, i));
    }
    while (std::getline(in, line)) {
      if (!line.empty())
        throw CacheFormatError("cache: trailing data after index " + std::to_string(highest));
    }
    if (table.counts_[0] != 1) throw CacheFormatError("cache: p(0) != 1");
    return table;
  }

 private:
  static const Count& zero() {
    static const Count z = 0;
    return z;
  }

  static Count parse_entry(const std::string& line, std::int64_t index) {
    if (line.empty())
      throw CacheFormatError("cache: empty entry at index " + std::to_string(index));
    for (char c : line) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw CacheFormatError("cache: malformed entry at index " + std::to_string(index) + ": " + line);
    }
    Count value(line);
    if (value < 1)
      throw CacheFormatError("cache: entry at index " + std::to_string(index) + " violates p >= 1");
    return value;
  }

  std::vector<Count> counts_;  // counts_[i] = p(i)
  std::uint64_t extensions_ = 0;
  std::uint64_t recurrence_terms_ = 0;
};

}  // namespace pcount
