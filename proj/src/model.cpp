#include "dfpair/model.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <limits>

namespace dfpair
{

namespace
{

bool is_space(char c)
{
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Decimal digits only; no sign, no empty string.
bool parse_uint(std::string_view text, long long& out)
{
  if (text.empty())
    return false;
  for (char c : text)
    if (c < '0' || c > '9')
      return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

constexpr long long max_columns = 1 << 16;

} // namespace

TestModel::TestModel(std::vector<int> cardinalities) : cardinalities_(std::move(cardinalities))
{
  if (cardinalities_.size() < 2)
    throw std::invalid_argument("model needs at least 2 columns");
  for (int v : cardinalities_)
    if (v < 2)
      throw std::invalid_argument("every cardinality must be at least 2");
}

std::string TestModel::to_spec() const
{
  std::string out;
  std::size_t i = 0;
  while (i < cardinalities_.size())
  {
    std::size_t run = 1;
    while (i + run < cardinalities_.size() && cardinalities_[i + run] == cardinalities_[i])
      ++run;
    if (!out.empty())
      out += ' ';
    out += std::to_string(cardinalities_[i]);
    if (run > 1)
      out += '^' + std::to_string(run);
    i += run;
  }
  return out;
}

TestModel parse_model(std::string_view spec)
{
  std::vector<int> cards;
  std::size_t pos = 0;
  while (pos < spec.size())
  {
    if (is_space(spec[pos]))
    {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < spec.size() && !is_space(spec[end]))
      ++end;
    const std::string_view token = spec.substr(pos, end - pos);
    pos = end;

    const auto bad = [&](const char* why) {
      return ParseError("bad model token '" + std::string(token) + "': " + why);
    };

    long long value = 0;
    long long count = 1;
    const auto caret = token.find('^');
    if (caret == std::string_view::npos)
    {
      if (!parse_uint(token, value))
        throw bad("expected V or V^K");
    }
    else
    {
      if (!parse_uint(token.substr(0, caret), value) || !parse_uint(token.substr(caret + 1), count))
        throw bad("expected V or V^K");
    }
    if (value < 2)
      throw bad("cardinality below 2");
    if (value > std::numeric_limits<int>::max())
      throw bad("cardinality too large");
    if (count < 1)
      throw bad("repeat count below 1");
    if (count > max_columns || static_cast<long long>(cards.size()) + count > max_columns)
      throw bad("too many columns");
    cards.insert(cards.end(), static_cast<std::size_t>(count), static_cast<int>(value));
  }
  if (cards.size() < 2)
    throw ParseError("model '" + std::string(spec) + "' has fewer than 2 columns");
  return TestModel(std::move(cards));
}

std::size_t total_pairs(const TestModel& model) noexcept
{
  const auto v = model.cardinalities();
  std::size_t total = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      total += static_cast<std::size_t>(v[i]) * static_cast<std::size_t>(v[j]);
  return total;
}

void check_row(std::span<const int> row, const TestModel& model)
{
  if (row.size() != model.columns())
    throw std::invalid_argument("row has " + std::to_string(row.size()) + " values, model has " +
                                std::to_string(model.columns()) + " columns");
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] < 0 || row[c] >= model.cardinality(c))
      throw std::invalid_argument("value " + std::to_string(row[c]) + " out of range in column " +
                                  std::to_string(c));
}

PairIndexer::PairIndexer(const TestModel& model)
  : model_(model), offsets_(model.columns() * model.columns(), 0)
{
  const std::size_t k = model_.columns();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
    {
      offsets_[i * k + j] = total_;
      total_ += static_cast<std::size_t>(model_.cardinality(i)) * static_cast<std::size_t>(model_.cardinality(j));
    }
}

std::size_t PairIndexer::index(const Pair& p) const
{
  const std::size_t k = model_.columns();
  if (p.col_i >= p.col_j || p.col_j >= k)
    throw std::invalid_argument("pair columns out of order or range");
  if (p.val_a < 0 || p.val_a >= model_.cardinality(p.col_i) || p.val_b < 0 ||
      p.val_b >= model_.cardinality(p.col_j))
    throw std::invalid_argument("pair value out of range");
  return offset(p.col_i, p.col_j) + static_cast<std::size_t>(p.val_a) * model_.cardinality(p.col_j) +
         static_cast<std::size_t>(p.val_b);
}

Pair PairIndexer::pair_at(std::size_t index) const
{
  if (index >= total_)
    throw std::invalid_argument("pair index out of range");
  const std::size_t k = model_.columns();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
    {
      const std::size_t vj = model_.cardinality(j);
      const std::size_t span = model_.cardinality(i) * vj;
      const std::size_t start = offset(i, j);
      if (index < start + span)
      {
        const std::size_t local = index - start;
        return {i, j, static_cast<int>(local / vj), static_cast<int>(local % vj)};
      }
    }
  throw std::logic_error("unreachable pair index");
}

void PairIndexer::row_pairs(std::span<const int> row, std::vector<std::size_t>& out) const
{
  const std::size_t k = model_.columns();
  for (std::size_t i = 0; i < k; ++i)
  {
    const std::size_t* base = &offsets_[i * k];
    for (std::size_t j = i + 1; j < k; ++j)
      out.push_back(base[j] + static_cast<std::size_t>(row[i]) * model_.cardinality(j) +
                    static_cast<std::size_t>(row[j]));
  }
}

std::size_t pair_index(const Pair& pair, const TestModel& model)
{
  return PairIndexer(model).index(pair);
}

std::vector<std::size_t> row_pairs(const TestRow& row, const TestModel& model)
{
  check_row(row, model);
  std::vector<std::size_t> out;
  PairIndexer(model).row_pairs(row, out);
  return out;
}

PairSet::PairSet(const TestModel& model)
  : indexer_(model), words_((indexer_.total() + 63) / 64, ~std::uint64_t{0}), uncovered_(indexer_.total())
{
  if (const std::size_t tail = indexer_.total() % 64; tail != 0)
    words_.back() = (std::uint64_t{1} << tail) - 1;
}

bool PairSet::is_uncovered(std::size_t index) const
{
  if (index >= size())
    throw std::invalid_argument("pair index out of range");
  return (words_[index / 64] >> (index % 64)) & 1U;
}

std::size_t PairSet::count_uncovered(std::span<const int> row) const
{
  const TestModel& m = model();
  const std::size_t k = m.columns();
  std::size_t count = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
    {
      const std::size_t idx = indexer_.offset(i, j) + static_cast<std::size_t>(row[i]) * m.cardinality(j) +
                              static_cast<std::size_t>(row[j]);
      count += (words_[idx / 64] >> (idx % 64)) & 1U;
    }
  return count;
}

std::size_t PairSet::mark_covered(std::span<const int> row)
{
  const TestModel& m = model();
  check_row(row, m);
  const std::size_t k = m.columns();
  std::size_t cleared = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
    {
      const std::size_t idx = indexer_.offset(i, j) + static_cast<std::size_t>(row[i]) * m.cardinality(j) +
                              static_cast<std::size_t>(row[j]);
      const std::uint64_t bit = std::uint64_t{1} << (idx % 64);
      if (words_[idx / 64] & bit)
      {
        words_[idx / 64] &= ~bit;
        ++cleared;
      }
    }
  uncovered_ -= cleared;
  return cleared;
}

std::size_t PairSet::first_uncovered() const noexcept
{
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size();
}

std::size_t PairSet::popcount() const noexcept
{
  std::size_t n = 0;
  for (auto w : words_)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

} // namespace dfpair
