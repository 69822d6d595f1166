#include "blocklat/error.hpp"

#include <sstream>
#include <utility>

namespace blocklat
{

namespace
{

std::string describe(std::string const &message,
                     std::size_t position,
                     std::vector<std::string> const &expected,
                     std::size_t line)
{
  std::ostringstream ss;
  if (line > 0)
    ss << "line " << line << ", ";

  ss << "position " << position << ": " << message;

  if (!expected.empty()) {
    ss << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      ss << (i ? ", " : "") << expected[i];
    ss << ")";
  }
  return ss.str();
}

} // anonymous namespace

ParseError::ParseError(std::string const &message,
                       std::size_t position,
                       std::vector<std::string> expected,
                       std::size_t line)
: Error(describe(message, position, expected, line)),
  _message(message),
  _position(position),
  _line(line),
  _expected(std::move(expected))
{}

CapExceeded::CapExceeded(std::size_t cap)
: Error("group order exceeds the element cap of " + std::to_string(cap)),
  _cap(cap)
{}

} // namespace blocklat
