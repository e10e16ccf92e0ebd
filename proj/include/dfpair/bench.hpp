#ifndef DFPAIR_BENCH_HPP
#define DFPAIR_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dfpair/generator.hpp"
#include "dfpair/model.hpp"

namespace dfpair
{

/// A generated suite failed independent verification. Always a bug.
class VerificationFailure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct BenchmarkConfig
{
  std::string name;
  TestModel model;
  SwarmSettings swarm; // seed is ignored; runs use base_seed + run index
  /// Published suite sizes by tool name. Static data, never recomputed.
  std::map<std::string, int> references;
  /// Where the reference numbers come from, e.g. "Table 2".
  std::string origin;
};

struct ConfigResult
{
  std::string name;
  std::string model; // model spec
  std::string origin;
  std::size_t runs = 0;
  std::vector<std::size_t> sizes; // indexed by run
  std::size_t best = 0;
  double mean = 0.0;
  std::size_t worst = 0;
  double stddev = 0.0; // sample standard deviation, 0 for a single run
  double mean_seconds = 0.0;
  std::map<std::string, int> references;

  bool operator==(const ConfigResult&) const = default;
};

struct BenchReport
{
  std::vector<ConfigResult> configs;

  bool operator==(const BenchReport&) const = default;
};

enum class SuiteSet
{
  table1,
  table2,
  all
};

/// The unambiguous rows of the published comparison tables.
std::vector<BenchmarkConfig> builtin_suites(SuiteSet set = SuiteSet::all);

SuiteSet parse_suite_set(std::string_view name);

/**
 * Runs `runs` generations per config with seeds base_seed + run index and
 * aggregates sizes. Every suite is checked with verify_full_coverage before
 * it counts; a failure throws VerificationFailure. Work is spread over
 * `threads` workers (0 means hardware concurrency); results do not depend
 * on the thread count.
 */
BenchReport run_benchmark(const std::vector<BenchmarkConfig>& configs, std::size_t runs, std::uint64_t base_seed,
                          std::size_t threads = 0);

/// Fills best/mean/worst/stddev from sizes.
void summarize(ConfigResult& result);

enum class ReportFormat
{
  csv,
  markdown,
  json
};

/// Throws std::invalid_argument for anything other than csv, markdown, json.
ReportFormat parse_report_format(std::string_view name);

std::string emit_report(const BenchReport& report, ReportFormat format);

/// Inverse of emit_report(report, ReportFormat::json).
BenchReport parse_report_json(std::string_view text);

} // namespace dfpair

#endif
