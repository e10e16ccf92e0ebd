#include "dfpair/generator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace dfpair
{

TestRow decode_row(std::span<const double> position, const TestModel& model)
{
  if (position.size() != model.columns())
    throw std::invalid_argument("position dimension does not match the model");
  TestRow row(position.size());
  for (std::size_t i = 0; i < row.size(); ++i)
  {
    const double rounded = std::floor(position[i] + 0.5);
    const double top = static_cast<double>(model.cardinality(i) - 1);
    row[i] = static_cast<int>(std::clamp(rounded, 0.0, top));
  }
  return row;
}

std::size_t row_fitness(std::span<const double> position, const PairSet& pairs)
{
  return pairs.count_uncovered(decode_row(position, pairs.model()));
}

TestRow greedy_fallback_row(const PairSet& pairs)
{
  if (pairs.uncovered_count() == 0)
    throw std::invalid_argument("no uncovered pairs left");
  const TestModel& model = pairs.model();
  const PairIndexer& indexer = pairs.indexer();
  const std::size_t k = model.columns();
  const Pair seed = indexer.pair_at(pairs.first_uncovered());

  TestRow row(k, 0);
  std::vector<bool> fixed(k, false);
  row[seed.col_i] = seed.val_a;
  row[seed.col_j] = seed.val_b;
  fixed[seed.col_i] = fixed[seed.col_j] = true;

  for (std::size_t c = 0; c < k; ++c)
  {
    if (fixed[c])
      continue;
    int best_value = 0;
    std::size_t best_gain = 0;
    for (int v = 0; v < model.cardinality(c); ++v)
    {
      std::size_t gain = 0;
      for (std::size_t o = 0; o < k; ++o)
      {
        if (!fixed[o])
          continue;
        const Pair p = o < c ? Pair{o, c, row[o], v} : Pair{c, o, v, row[o]};
        gain += pairs.is_uncovered(indexer.index(p)) ? 1 : 0;
      }
      if (gain > best_gain)
      {
        best_gain = gain;
        best_value = v;
      }
    }
    row[c] = best_value;
    fixed[c] = true;
  }
  return row;
}

dfa::SwarmConfig row_swarm_config(const TestModel& model, const SwarmSettings& settings, std::size_t row)
{
  dfa::SwarmConfig cfg;
  cfg.population_size = settings.population_size;
  cfg.max_iterations = settings.iterations_per_row;
  cfg.seed = derive_seed(settings.seed, row);
  cfg.bounds.reserve(model.columns());
  for (int v : model.cardinalities())
    cfg.bounds.push_back({0.0, static_cast<double>(v - 1)});
  return cfg;
}

GenerationResult generate(const GeneratorConfig& config)
{
  const auto start = std::chrono::steady_clock::now();
  const TestModel& model = config.model;
  const std::size_t k = model.columns();
  const std::size_t per_row_max = k * (k - 1) / 2;

  PairSet pairs(model);
  GenerationResult out{TestSuite{model, {}}, {}};

  while (pairs.uncovered_count() > 0)
  {
    const std::size_t row_number = out.suite.rows.size();
    dfa::SwarmConfig cfg = row_swarm_config(model, config.swarm, row_number);
    cfg.target_fitness = static_cast<double>(std::min(per_row_max, pairs.uncovered_count()));

    const auto best = dfa::optimize(
        [&pairs](std::span<const double> x) { return static_cast<double>(row_fitness(x, pairs)); }, cfg);

    TestRow row = decode_row(best.position, model);
    if (pairs.count_uncovered(row) == 0)
    {
      row = greedy_fallback_row(pairs);
      ++out.stats.fallback_rows;
    }
    out.stats.fitness_per_row.push_back(pairs.mark_covered(row));
    out.suite.rows.push_back(std::move(row));
  }

  out.stats.rows_emitted = out.suite.rows.size();
  out.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

} // namespace dfpair
