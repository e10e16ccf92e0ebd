#include "dfpair/suite_file.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace dfpair
{

namespace
{

constexpr std::string_view header_prefix = "# model: ";

TestRow parse_row(std::string_view line, std::size_t line_no)
{
  const auto fail = [&](const std::string& why) {
    return ParseError("line " + std::to_string(line_no) + ": " + why);
  };
  TestRow row;
  std::size_t pos = 0;
  while (true)
  {
    const std::size_t comma = std::min(line.find(',', pos), line.size());
    const std::string_view field = line.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || field.front() == '-')
      throw fail("bad field '" + std::string(field) + "'");
    row.push_back(value);
    if (comma == line.size())
      break;
    pos = comma + 1;
  }
  return row;
}

} // namespace

void write_suite(std::ostream& os, const TestSuite& suite)
{
  os << header_prefix << suite.model.to_spec() << '\n';
  for (const auto& row : suite.rows)
  {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << row[c];
    os << '\n';
  }
}

std::string format_suite(const TestSuite& suite)
{
  std::ostringstream os;
  write_suite(os, suite);
  return os.str();
}

TestSuite read_suite(std::istream& is, const std::optional<TestModel>& model)
{
  std::string line;
  if (!std::getline(is, line))
    throw ParseError("empty suite file");
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  if (!line.starts_with(header_prefix))
    throw ParseError("line 1: expected '# model: <spec>' header");
  const TestModel header_model = parse_model(std::string_view(line).substr(header_prefix.size()));
  TestSuite suite{model.value_or(header_model), {}};

  std::size_t line_no = 1;
  while (std::getline(is, line))
  {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    TestRow row = parse_row(line, line_no);
    try
    {
      check_row(row, suite.model);
    }
    catch (const std::invalid_argument& e)
    {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    suite.rows.push_back(std::move(row));
  }
  return suite;
}

} // namespace dfpair
