#ifndef DFPAIR_MODEL_HPP
#define DFPAIR_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dfpair
{

/// Raised for malformed model specs and suite files.
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/**
 * A configuration model: one cardinality per parameter column.
 *
 * Column order is significant. Every column has at least two values and
 * there are at least two columns. Values are 0-based.
 */
class TestModel
{
public:
  explicit TestModel(std::vector<int> cardinalities);

  [[nodiscard]] std::size_t columns() const noexcept { return cardinalities_.size(); }
  [[nodiscard]] int cardinality(std::size_t column) const { return cardinalities_.at(column); }
  [[nodiscard]] std::span<const int> cardinalities() const noexcept { return cardinalities_; }

  /// Compact "V^K" rendering with runs of equal cardinalities collapsed.
  [[nodiscard]] std::string to_spec() const;

  bool operator==(const TestModel&) const = default;

private:
  std::vector<int> cardinalities_;
};

/// One 2-tuple: value val_a in column col_i together with val_b in col_j.
struct Pair
{
  std::size_t col_i = 0;
  std::size_t col_j = 0;
  int val_a = 0;
  int val_b = 0;

  bool operator==(const Pair&) const = default;
};

using TestRow = std::vector<int>;

struct TestSuite
{
  TestModel model;
  std::vector<TestRow> rows;

  [[nodiscard]] std::size_t size() const noexcept { return rows.size(); }
};

/// Parses whitespace-separated "V^K" / "V" tokens, e.g. "5 3^2 2".
TestModel parse_model(std::string_view spec);

/// Number of distinct 2-tuples: sum over column pairs i<j of v_i * v_j.
std::size_t total_pairs(const TestModel& model) noexcept;

/// Throws std::invalid_argument when the row has the wrong length or a value
/// out of range.
void check_row(std::span<const int> row, const TestModel& model);

/**
 * Canonical bijection Pair -> [0, total_pairs).
 *
 * Column pairs are laid out lexicographically by (col_i, col_j); inside a
 * column pair the offset is val_a * v_{col_j} + val_b. Precomputes the
 * per-column-pair offsets once so lookups are O(1).
 */
class PairIndexer
{
public:
  explicit PairIndexer(const TestModel& model);

  [[nodiscard]] std::size_t index(const Pair& pair) const;
  [[nodiscard]] Pair pair_at(std::size_t index) const;
  [[nodiscard]] std::size_t total() const noexcept { return total_; }
  [[nodiscard]] const TestModel& model() const noexcept { return model_; }

  /// Appends the C(k,2) indices covered by a conforming row to out.
  void row_pairs(std::span<const int> row, std::vector<std::size_t>& out) const;

  /// Offset of the first index of column pair (i, j), i < j.
  [[nodiscard]] std::size_t offset(std::size_t i, std::size_t j) const noexcept
  {
    return offsets_[i * model_.columns() + j];
  }

private:
  TestModel model_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

std::size_t pair_index(const Pair& pair, const TestModel& model);

std::vector<std::size_t> row_pairs(const TestRow& row, const TestModel& model);

/**
 * Bitmap of still-uncovered 2-tuples. A set bit means uncovered.
 *
 * Single writer; readers may share it between mutations.
 */
class PairSet
{
public:
  explicit PairSet(const TestModel& model);

  [[nodiscard]] const TestModel& model() const noexcept { return indexer_.model(); }
  [[nodiscard]] const PairIndexer& indexer() const noexcept { return indexer_; }
  [[nodiscard]] std::size_t uncovered_count() const noexcept { return uncovered_; }
  [[nodiscard]] std::size_t size() const noexcept { return indexer_.total(); }
  [[nodiscard]] bool is_uncovered(std::size_t index) const;

  /// Count of the row's pairs that are still uncovered. Does not mutate.
  [[nodiscard]] std::size_t count_uncovered(std::span<const int> row) const;

  /// Clears the row's pairs; returns how many were newly covered.
  std::size_t mark_covered(std::span<const int> row);

  /// Lowest uncovered canonical index, or size() when none remain.
  [[nodiscard]] std::size_t first_uncovered() const noexcept;

  /// Population count recomputed from the bitmap.
  [[nodiscard]] std::size_t popcount() const noexcept;

private:
  PairIndexer indexer_;
  std::vector<std::uint64_t> words_;
  std::size_t uncovered_ = 0;
};

} // namespace dfpair

#endif
