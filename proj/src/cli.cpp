#include "dfpair/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dfpair/bench.hpp"
#include "dfpair/generator.hpp"
#include "dfpair/suite_file.hpp"
#include "dfpair/verify.hpp"

namespace dfpair::cli
{

namespace
{

struct GenerateOptions
{
  std::string model;
  std::size_t pop = 50;
  std::size_t iters = 100;
  std::uint64_t seed = 0;
  std::string out;
  std::string stats = "none";
};

struct VerifyOptions
{
  std::string suite;
  std::string model;
};

struct BenchOptions
{
  std::string suite_set;
  std::string model;
  std::size_t runs = 10;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
  std::size_t pop = 50;
  std::size_t iters = 100;
  std::size_t threads = 0;
};

// Writes text to path, or to out when path is empty.
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err)
{
  if (path.empty())
  {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  file.close();
  if (!file)
  {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err)
{
  std::optional<TestModel> model;
  try
  {
    model = parse_model(o.model);
  }
  catch (const std::exception& e)
  {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  if (o.pop < 1 || o.iters < 1)
  {
    err << "error: --pop and --iters must be at least 1\n";
    return usage_error;
  }

  const auto result = generate({*model, {o.pop, o.iters, o.seed}});
  if (!emit(o.out, format_suite(result.suite), out, err))
    return usage_error;
  if (o.stats == "json")
    out << nlohmann::json{{"size", result.suite.size()},
                          {"seed", o.seed},
                          {"seconds", result.stats.wall_seconds},
                          {"fallback_rows", result.stats.fallback_rows}}
                .dump()
        << '\n';
  return ok;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err)
{
  TestSuite suite{TestModel({2, 2}), {}};
  try
  {
    std::optional<TestModel> model;
    if (!o.model.empty())
      model = parse_model(o.model);
    std::ifstream file(o.suite, std::ios::binary);
    if (!file)
    {
      err << "error: cannot open " << o.suite << '\n';
      return usage_error;
    }
    suite = read_suite(file, model);
  }
  catch (const std::exception& e)
  {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  CoverageReport report;
  try
  {
    report = verify_full_coverage(suite);
  }
  catch (const ValidationError& e)
  {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  if (report.complete)
  {
    out << "COMPLETE (" << report.checked << " pairs)\n";
    return ok;
  }
  for (const auto& p : report.missing)
    out << "MISSING " << p.col_i << ' ' << p.col_j << ' ' << p.val_a << ' ' << p.val_b << '\n';
  return incomplete;
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err)
{
  std::vector<BenchmarkConfig> configs;
  ReportFormat format;
  try
  {
    format = parse_report_format(o.format);
    if (o.suite_set.empty() == o.model.empty())
      throw std::invalid_argument("give exactly one of --suite-set or --model");
    if (!o.model.empty())
    {
      TestModel model = parse_model(o.model);
      configs.push_back({model.to_spec(), model, {}, {}, ""});
    }
    else
      configs = builtin_suites(parse_suite_set(o.suite_set));
    if (o.runs < 1 || o.pop < 1 || o.iters < 1)
      throw std::invalid_argument("--runs, --pop and --iters must be at least 1");
  }
  catch (const std::exception& e)
  {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  for (auto& c : configs)
    c.swarm = {o.pop, o.iters, 0};

  BenchReport report;
  try
  {
    report = run_benchmark(configs, o.runs, o.seed, o.threads);
  }
  catch (const VerificationFailure& e)
  {
    err << "internal error: " << e.what() << '\n';
    return internal_failure;
  }
  return emit(o.out, emit_report(report, format), out, err) ? ok : usage_error;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Pairwise test suite generation with the Dragonfly algorithm", "dfpair"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Generate a pairwise suite for a model");
  g->add_option("--model", gen.model, "Model spec, e.g. \"3^4\" or \"5 3^2 2\"")->required();
  g->add_option("--pop", gen.pop, "Swarm population per row")->capture_default_str();
  g->add_option("--iters", gen.iters, "Swarm iterations per row")->capture_default_str();
  g->add_option("--seed", gen.seed, "Run seed")->capture_default_str();
  g->add_option("--out", gen.out, "Suite file (default: standard output)");
  g->add_option("--stats", gen.stats, "Print run statistics")
      ->check(CLI::IsMember({"json", "none"}))
      ->capture_default_str();

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Check that a suite covers every pair");
  v->add_option("--suite", ver.suite, "Suite file")->required();
  v->add_option("--model", ver.model, "Model spec overriding the file header");

  BenchOptions ben;
  auto* b = app.add_subcommand("bench", "Repeat generation over benchmark models");
  b->add_option("--suite-set", ben.suite_set, "Built-in set: table1, table2 or all");
  b->add_option("--model", ben.model, "Single model spec");
  b->add_option("--runs", ben.runs, "Runs per configuration")->capture_default_str();
  b->add_option("--seed", ben.seed, "Base seed; run i uses seed + i")->capture_default_str();
  b->add_option("--format", ben.format, "csv, markdown or json")->capture_default_str();
  b->add_option("--out", ben.out, "Report file (default: standard output)");
  b->add_option("--pop", ben.pop, "Swarm population per row")->capture_default_str();
  b->add_option("--iters", ben.iters, "Swarm iterations per row")->capture_default_str();
  b->add_option("--threads", ben.threads, "Worker threads, 0 for all cores")->capture_default_str();

  try
  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (const CLI::CallForHelp&)
  {
    out << app.help();
    return ok;
  }
  catch (const CLI::ParseError& e)
  {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  if (g->parsed())
    return cmd_generate(gen, out, err);
  if (v->parsed())
    return cmd_verify(ver, out, err);
  return cmd_bench(ben, out, err);
}

} // namespace dfpair::cli
