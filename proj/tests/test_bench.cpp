#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "dfpair/bench.hpp"

using namespace dfpair;

namespace
{

std::vector<std::string> lines(const std::string& text)
{
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    out.push_back(line);
  return out;
}

BenchmarkConfig single(std::vector<int> cards)
{
  TestModel m(std::move(cards));
  return {m.to_spec(), m, {20, 30, 0}, {}, ""};
}

} // namespace

TEST_CASE("builtin suites carry the published numbers")
{
  const auto t2 = builtin_suites(SuiteSet::table2);
  REQUIRE(t2.size() == 8);
  CHECK(t2[0].model == TestModel(std::vector<int>(10, 3)));
  CHECK(t2[0].references == std::map<std::string, int>{
                                {"IPOG", 20}, {"Jenny", 19}, {"TConfig", 17}, {"PICT", 18}, {"PSO", 17}, {"DFA", 17}});
  CHECK(t2[3].model == TestModel(std::vector<int>(10, 6)));
  CHECK(t2[3].references.at("DFA") == 61);
  CHECK(t2[7].references.at("DFA") == 170);
  CHECK(t2[7].references.at("Jenny") == 157);

  const auto t1 = builtin_suites(SuiteSet::table1);
  REQUIRE(t1.size() == 2);
  CHECK(t1[0].model == TestModel({3, 3, 3, 3}));
  CHECK(t1[0].references.at("DFA") == 9);
  CHECK(t1[0].references.at("PSO") == 9);
  CHECK(t1[0].references.at("Jenny") == 9);
  CHECK(t1[0].references.at("IPOG") == 11);
  CHECK_FALSE(t1[0].references.contains("AETG"));
  CHECK(t1[1].references.at("DFA") == 168);

  CHECK(builtin_suites(SuiteSet::all).size() == 10);
  CHECK(parse_suite_set("table2") == SuiteSet::table2);
  CHECK_THROWS_AS(parse_suite_set("table3"), std::invalid_argument);
}

TEST_CASE("run_benchmark aggregates per config")
{
  const auto one = run_benchmark({single({3, 3, 3})}, 1, 5);
  REQUIRE(one.configs.size() == 1);
  CHECK(one.configs[0].best == one.configs[0].worst);
  CHECK(one.configs[0].mean == doctest::Approx(static_cast<double>(one.configs[0].best)));
  CHECK(one.configs[0].stddev == 0.0);

  const auto r = run_benchmark({single({2, 2})}, 4, 0);
  CHECK(r.configs[0].best == 4);
  CHECK(r.configs[0].worst == 4);
  CHECK(r.configs[0].sizes.size() == 4);
}

TEST_CASE("run_benchmark does not depend on the thread count")
{
  const std::vector<BenchmarkConfig> cfgs{single({3, 3, 3, 3}), single({4, 3, 2, 2})};
  auto a = run_benchmark(cfgs, 6, 100, 1);
  auto b = run_benchmark(cfgs, 6, 100, 4);
  REQUIRE(a.configs.size() == b.configs.size());
  for (std::size_t i = 0; i < a.configs.size(); ++i)
  {
    CHECK(a.configs[i].sizes == b.configs[i].sizes);
    CHECK(a.configs[i].best <= a.configs[i].mean);
    CHECK(a.configs[i].mean <= a.configs[i].worst);
  }
}

TEST_CASE("summarize")
{
  ConfigResult r;
  r.sizes = {10, 12, 14};
  summarize(r);
  CHECK(r.runs == 3);
  CHECK(r.best == 10);
  CHECK(r.worst == 14);
  CHECK(r.mean == doctest::Approx(12.0));
  CHECK(r.stddev == doctest::Approx(2.0));
}

TEST_CASE("csv report")
{
  CHECK(emit_report({}, ReportFormat::csv) == "config,runs,best,mean,worst,stddev,mean_seconds,ref_DFA,ref_PSO\n");

  ConfigResult r{"table1/3^4", "3^4", "Table 1", 1, {9}, 9, 9.0, 9, 0.0, 0.25, {{"DFA", 9}, {"IPOG", 11}}};
  const auto out = lines(emit_report({{r}}, ReportFormat::csv));
  REQUIRE(out.size() == 2);
  CHECK(out[1] == "table1/3^4,1,9,9,9,0,0.25,9,");

  r.name = "a,b";
  CHECK(lines(emit_report({{r}}, ReportFormat::csv))[1].starts_with("\"a,b\",1,"));
}

TEST_CASE("markdown report mirrors the comparison tables")
{
  ConfigResult r{"table2/3^10", "3^10", "Table 2", 2, {18, 20}, 18, 19.0, 20, 1.41421, 0.5, {{"DFA", 17}, {"PSO", 17}}};
  const auto out = lines(emit_report({{r}}, ReportFormat::markdown));
  REQUIRE(out.size() == 3);
  CHECK(out[0].find("PSO") != std::string::npos);
  CHECK(out[0].find("DFA (published)") != std::string::npos);
  CHECK(out[0].find("IPOG") == std::string::npos);
  CHECK(out[2].starts_with("| table2/3^10 | 3^10 | 2 | 18 | 19 | 20 |"));
}

TEST_CASE("json report round-trips")
{
  const auto report = run_benchmark({single({3, 3, 3}), single({2, 3, 2})}, 3, 42);
  BenchReport with_refs = report;
  with_refs.configs[0].references = {{"DFA", 9}};
  with_refs.configs[0].origin = "Table 1";
  CHECK(parse_report_json(emit_report(with_refs, ReportFormat::json)) == with_refs);
  CHECK(parse_report_json(emit_report({}, ReportFormat::json)) == BenchReport{});
}

TEST_CASE("report format names")
{
  CHECK(parse_report_format("csv") == ReportFormat::csv);
  CHECK(parse_report_format("markdown") == ReportFormat::markdown);
  CHECK(parse_report_format("json") == ReportFormat::json);
  CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);
}
