#ifndef DFPAIR_VERIFY_HPP
#define DFPAIR_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dfpair/model.hpp"

namespace dfpair
{

/// A suite row that does not fit its model.
class ValidationError : public std::runtime_error
{
public:
  ValidationError(std::size_t row, std::size_t column, const std::string& what)
    : std::runtime_error(what), row_(row), column_(column)
  {
  }

  [[nodiscard]] std::size_t row() const noexcept { return row_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
  std::size_t row_;
  std::size_t column_;
};

struct CoverageReport
{
  bool complete = false;
  std::vector<Pair> missing;
  std::size_t checked = 0;
};

/**
 * Exhaustive coverage check. For every column pair and value pair, scans
 * the rows directly. Deliberately independent of PairSet and PairIndexer.
 * Missing pairs are listed in (col_i, col_j, val_a, val_b) order.
 */
CoverageReport verify_full_coverage(const TestSuite& suite);

/// Product of the two largest cardinalities.
std::size_t lower_bound(const TestModel& model);

/// Greedy best-of-N uniform random rows, with the generator's fallback.
TestSuite random_baseline(const TestModel& model, std::size_t per_row_samples, std::uint64_t seed);

} // namespace dfpair

#endif
