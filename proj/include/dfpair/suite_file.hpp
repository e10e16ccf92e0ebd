#ifndef DFPAIR_SUITE_FILE_HPP
#define DFPAIR_SUITE_FILE_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "dfpair/model.hpp"

namespace dfpair
{

/**
 * Suite file format:
 *
 *     # model: 3^4
 *     0,1,2,0
 *     ...
 *
 * One comma-separated row per line, no spaces, newline terminated.
 */
void write_suite(std::ostream& os, const TestSuite& suite);

std::string format_suite(const TestSuite& suite);

/// Parses a suite file. When `model` is given it replaces the header model;
/// every row must fit whichever model applies. Throws ParseError.
TestSuite read_suite(std::istream& is, const std::optional<TestModel>& model = std::nullopt);

} // namespace dfpair

#endif
