#include "dfpair/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dfpair/verify.hpp"

namespace dfpair
{

namespace
{

using Refs = std::map<std::string, int>;

// Column order of the published comparison tables.
constexpr std::array<std::string_view, 10> tool_order = {"AETG", "mAETG", "GA",      "ACA", "IPOG",
                                                         "Jenny", "TConfig", "PICT", "PSO", "DFA"};

BenchmarkConfig make(std::string name, std::vector<int> cards, Refs refs, std::string origin)
{
  return {std::move(name), TestModel(std::move(cards)), SwarmSettings{}, std::move(refs), std::move(origin)};
}

std::vector<BenchmarkConfig> table1()
{
  std::vector<BenchmarkConfig> out;
  // Printed as "3^3" but the result columns are those of the 4-parameter
  // benchmark, so it is read as 3^4.
  out.push_back(make("table1/3^4", std::vector<int>(4, 3),
                     {{"IPOG", 11}, {"Jenny", 9}, {"TConfig", 10}, {"PICT", 10}, {"PSO", 9}, {"DFA", 9}}, "Table 1"));
  out.push_back(make("table1/10^10", std::vector<int>(10, 10),
                     {{"GA", 157},
                      {"ACA", 159},
                      {"IPOG", 176},
                      {"Jenny", 157},
                      {"TConfig", 170},
                      {"PICT", 170},
                      {"PSO", 170},
                      {"DFA", 168}},
                     "Table 1"));
  return out;
}

std::vector<BenchmarkConfig> table2()
{
  // v, IPOG, Jenny, TConfig, PICT, PSO, DFA
  constexpr int rows[8][7] = {
      {3, 20, 19, 17, 18, 17, 17},      {4, 31, 30, 31, 31, 29, 30},      {5, 50, 45, 48, 47, 45, 45},
      {6, 68, 62, 64, 66, 62, 61},      {7, 90, 83, 85, 88, 81, 83},      {8, 117, 104, 114, 112, 109, 107},
      {9, 142, 129, 139, 139, 139, 141}, {10, 176, 157, 170, 170, 170, 170},
  };
  std::vector<BenchmarkConfig> out;
  for (const auto& r : rows)
  {
    const int v = r[0];
    out.push_back(make("table2/" + std::to_string(v) + "^10", std::vector<int>(10, v),
                       {{"IPOG", r[1]}, {"Jenny", r[2]}, {"TConfig", r[3]}, {"PICT", r[4]}, {"PSO", r[5]}, {"DFA", r[6]}},
                       "Table 2"));
  }
  return out;
}

std::string fmt_number(double x)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
  {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

std::string ref_cell(const Refs& refs, std::string_view tool)
{
  const auto it = refs.find(std::string(tool));
  return it == refs.end() ? std::string() : std::to_string(it->second);
}

std::string emit_csv(const BenchReport& report)
{
  std::ostringstream os;
  os << "config,runs,best,mean,worst,stddev,mean_seconds,ref_DFA,ref_PSO\n";
  for (const auto& c : report.configs)
    os << csv_field(c.name) << ',' << c.runs << ',' << c.best << ',' << fmt_number(c.mean) << ',' << c.worst << ','
       << fmt_number(c.stddev) << ',' << fmt_number(c.mean_seconds) << ',' << ref_cell(c.references, "DFA") << ','
       << ref_cell(c.references, "PSO") << '\n';
  return os.str();
}

std::string emit_markdown(const BenchReport& report)
{
  std::vector<std::string_view> tools;
  for (auto tool : tool_order)
    if (std::any_of(report.configs.begin(), report.configs.end(),
                    [&](const ConfigResult& c) { return c.references.contains(std::string(tool)); }))
      tools.push_back(tool);

  std::ostringstream os;
  os << "| Configuration | Model | Runs | Best | Mean | Worst | Std dev | Mean s |";
  for (auto t : tools)
    os << ' ' << t << (t == "DFA" ? " (published)" : "") << " |";
  os << "\n|---|---|---:|---:|---:|---:|---:|---:|";
  for (std::size_t i = 0; i < tools.size(); ++i)
    os << "---:|";
  os << '\n';
  for (const auto& c : report.configs)
  {
    os << "| " << c.name << " | " << c.model << " | " << c.runs << " | " << c.best << " | " << fmt_number(c.mean)
       << " | " << c.worst << " | " << fmt_number(c.stddev) << " | " << fmt_number(c.mean_seconds) << " |";
    for (auto t : tools)
    {
      const std::string cell = ref_cell(c.references, t);
      os << ' ' << (cell.empty() ? "NA" : cell) << " |";
    }
    os << '\n';
  }
  return os.str();
}

std::string emit_json(const BenchReport& report)
{
  nlohmann::json configs = nlohmann::json::array();
  for (const auto& c : report.configs)
    configs.push_back({{"name", c.name},
                       {"model", c.model},
                       {"origin", c.origin},
                       {"runs", c.runs},
                       {"sizes", c.sizes},
                       {"best", c.best},
                       {"mean", c.mean},
                       {"worst", c.worst},
                       {"stddev", c.stddev},
                       {"mean_seconds", c.mean_seconds},
                       {"references", c.references}});
  return nlohmann::json{{"configs", configs}}.dump(2) + "\n";
}

} // namespace

std::vector<BenchmarkConfig> builtin_suites(SuiteSet set)
{
  std::vector<BenchmarkConfig> out;
  if (set != SuiteSet::table2)
    out = table1();
  if (set != SuiteSet::table1)
  {
    auto t2 = table2();
    out.insert(out.end(), std::make_move_iterator(t2.begin()), std::make_move_iterator(t2.end()));
  }
  return out;
}

SuiteSet parse_suite_set(std::string_view name)
{
  if (name == "table1")
    return SuiteSet::table1;
  if (name == "table2")
    return SuiteSet::table2;
  if (name == "all")
    return SuiteSet::all;
  throw std::invalid_argument("unknown suite set '" + std::string(name) + "'");
}

void summarize(ConfigResult& r)
{
  r.runs = r.sizes.size();
  if (r.sizes.empty())
    return;
  const auto [lo, hi] = std::minmax_element(r.sizes.begin(), r.sizes.end());
  r.best = *lo;
  r.worst = *hi;
  const double n = static_cast<double>(r.sizes.size());
  r.mean = std::accumulate(r.sizes.begin(), r.sizes.end(), 0.0) / n;
  double ss = 0.0;
  for (auto s : r.sizes)
    ss += (static_cast<double>(s) - r.mean) * (static_cast<double>(s) - r.mean);
  r.stddev = r.sizes.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
}

BenchReport run_benchmark(const std::vector<BenchmarkConfig>& configs, std::size_t runs, std::uint64_t base_seed,
                          std::size_t threads)
{
  if (runs < 1)
    throw std::invalid_argument("runs must be at least 1");

  struct Slot
  {
    std::size_t size = 0;
    double seconds = 0.0;
  };
  const std::size_t jobs = configs.size() * runs;
  std::vector<Slot> slots(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++)
    {
      const auto& cfg = configs[job / runs];
      const std::size_t run = job % runs;
      try
      {
        SwarmSettings swarm = cfg.swarm;
        swarm.seed = base_seed + run;
        const auto result = generate({cfg.model, swarm});
        const auto report = verify_full_coverage(result.suite);
        if (!report.complete)
          throw VerificationFailure(cfg.name + " run " + std::to_string(run) + " (seed " +
                                    std::to_string(swarm.seed) + "): suite of " +
                                    std::to_string(result.suite.size()) + " rows misses " +
                                    std::to_string(report.missing.size()) + " pairs");
        slots[job] = {result.suite.size(), result.stats.wall_seconds};
      }
      catch (...)
      {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next = jobs;
      }
    }
  };

  if (threads == 0)
    threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(jobs, 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t)
      pool.emplace_back(worker);
    worker();
  }
  if (failure)
    std::rethrow_exception(failure);

  BenchReport report;
  for (std::size_t c = 0; c < configs.size(); ++c)
  {
    ConfigResult r;
    r.name = configs[c].name;
    r.model = configs[c].model.to_spec();
    r.origin = configs[c].origin;
    r.references = configs[c].references;
    double seconds = 0.0;
    for (std::size_t run = 0; run < runs; ++run)
    {
      r.sizes.push_back(slots[c * runs + run].size);
      seconds += slots[c * runs + run].seconds;
    }
    r.mean_seconds = seconds / static_cast<double>(runs);
    summarize(r);
    report.configs.push_back(std::move(r));
  }
  return report;
}

ReportFormat parse_report_format(std::string_view name)
{
  if (name == "csv")
    return ReportFormat::csv;
  if (name == "markdown")
    return ReportFormat::markdown;
  if (name == "json")
    return ReportFormat::json;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string emit_report(const BenchReport& report, ReportFormat format)
{
  switch (format)
  {
  case ReportFormat::csv:
    return emit_csv(report);
  case ReportFormat::markdown:
    return emit_markdown(report);
  case ReportFormat::json:
    return emit_json(report);
  }
  throw std::invalid_argument("unknown report format");
}

BenchReport parse_report_json(std::string_view text)
{
  const auto doc = nlohmann::json::parse(text);
  BenchReport report;
  for (const auto& c : doc.at("configs"))
  {
    ConfigResult r;
    r.name = c.at("name").get<std::string>();
    r.model = c.at("model").get<std::string>();
    r.origin = c.at("origin").get<std::string>();
    r.runs = c.at("runs").get<std::size_t>();
    r.sizes = c.at("sizes").get<std::vector<std::size_t>>();
    r.best = c.at("best").get<std::size_t>();
    r.mean = c.at("mean").get<double>();
    r.worst = c.at("worst").get<std::size_t>();
    r.stddev = c.at("stddev").get<double>();
    r.mean_seconds = c.at("mean_seconds").get<double>();
    r.references = c.at("references").get<Refs>();
    report.configs.push_back(std::move(r));
  }
  return report;
}

} // namespace dfpair
