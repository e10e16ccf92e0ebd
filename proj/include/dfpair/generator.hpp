#ifndef DFPAIR_GENERATOR_HPP
#define DFPAIR_GENERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dfpair/dfa.hpp"
#include "dfpair/model.hpp"

namespace dfpair
{

/// Swarm settings applied to every row search. Bounds come from the model.
struct SwarmSettings
{
  std::size_t population_size = 50;
  std::size_t iterations_per_row = 100;
  std::uint64_t seed = 0;
};

struct GeneratorConfig
{
  TestModel model;
  SwarmSettings swarm;
};

struct GenerationStats
{
  std::size_t rows_emitted = 0;
  /// Newly covered pairs per emitted row, fallback rows included.
  std::vector<std::size_t> fitness_per_row;
  std::size_t fallback_rows = 0;
  double wall_seconds = 0.0;
};

struct GenerationResult
{
  TestSuite suite;
  GenerationStats stats;
};

/// Rounds half up and clamps each coordinate into [0, v_i - 1].
TestRow decode_row(std::span<const double> position, const TestModel& model);

/// Uncovered pairs the decoded row would cover. Does not touch the set.
std::size_t row_fitness(std::span<const double> position, const PairSet& pairs);

/**
 * Row that covers the lowest uncovered pair, with every other column set
 * left to right to the value covering the most uncovered pairs against the
 * columns already fixed (ties to the lower value).
 */
TestRow greedy_fallback_row(const PairSet& pairs);

/// Swarm config for one row search: one dimension per column, [0, v-1].
dfa::SwarmConfig row_swarm_config(const TestModel& model, const SwarmSettings& settings, std::size_t row);

/**
 * Builds a pairwise suite one row at a time. Each row is the best
 * position of a fresh swarm maximizing row_fitness; a row that covers
 * nothing new is replaced by greedy_fallback_row. Stops once every pair is
 * covered.
 */
GenerationResult generate(const GeneratorConfig& config);

} // namespace dfpair

#endif
