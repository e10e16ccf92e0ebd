#include "dfpair/verify.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "dfpair/generator.hpp"
#include "dfpair/rng.hpp"

namespace dfpair
{

CoverageReport verify_full_coverage(const TestSuite& suite)
{
  const TestModel& model = suite.model;
  const std::size_t k = model.columns();
  for (std::size_t r = 0; r < suite.rows.size(); ++r)
  {
    const auto& row = suite.rows[r];
    if (row.size() != k)
      throw ValidationError(r, std::min(row.size(), k),
                            "row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                " values, expected " + std::to_string(k));
    for (std::size_t c = 0; c < k; ++c)
      if (row[c] < 0 || row[c] >= model.cardinality(c))
        throw ValidationError(r, c,
                              "row " + std::to_string(r) + " column " + std::to_string(c) + ": value " +
                                  std::to_string(row[c]) + " out of range [0," +
                                  std::to_string(model.cardinality(c)) + ")");
  }

  CoverageReport report;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (int a = 0; a < model.cardinality(i); ++a)
        for (int b = 0; b < model.cardinality(j); ++b)
        {
          ++report.checked;
          const bool seen = std::any_of(suite.rows.begin(), suite.rows.end(),
                                        [&](const TestRow& row) { return row[i] == a && row[j] == b; });
          if (!seen)
            report.missing.push_back({i, j, a, b});
        }
  report.complete = report.missing.empty();
  return report;
}

std::size_t lower_bound(const TestModel& model)
{
  std::vector<int> v(model.cardinalities().begin(), model.cardinalities().end());
  std::partial_sort(v.begin(), v.begin() + 2, v.end(), std::greater<>());
  return static_cast<std::size_t>(v[0]) * static_cast<std::size_t>(v[1]);
}

TestSuite random_baseline(const TestModel& model, std::size_t per_row_samples, std::uint64_t seed)
{
  if (per_row_samples < 1)
    throw std::invalid_argument("per_row_samples must be at least 1");
  const std::size_t k = model.columns();
  PairSet pairs(model);
  TestSuite suite{model, {}};
  TestRow candidate(k);
  TestRow best(k);
  const std::size_t per_row_max = k * (k - 1) / 2;

  while (pairs.uncovered_count() > 0)
  {
    Rng rng(derive_seed(seed, suite.rows.size()));
    std::size_t best_gain = 0;
    for (std::size_t s = 0; s < per_row_samples; ++s)
    {
      for (std::size_t c = 0; c < k; ++c)
        candidate[c] = static_cast<int>(rng.below(static_cast<std::uint64_t>(model.cardinality(c))));
      const std::size_t gain = pairs.count_uncovered(candidate);
      if (s == 0 || gain > best_gain)
      {
        best_gain = gain;
        best = candidate;
      }
      // Later samples can only tie, and ties keep the earlier row.
      if (best_gain == std::min(per_row_max, pairs.uncovered_count()))
        break;
    }
    TestRow row = best_gain > 0 ? best : greedy_fallback_row(pairs);
    pairs.mark_covered(row);
    suite.rows.push_back(std::move(row));
  }
  return suite;
}

} // namespace dfpair
