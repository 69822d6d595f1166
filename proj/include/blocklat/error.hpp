#ifndef BLOCKLAT_ERROR_HPP
#define BLOCKLAT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace blocklat
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed. `position` is a 0-based offset into the
// parsed text (or line), `line` is 1-based when the input was a file.
class ParseError : public Error
{
public:
  ParseError(std::string const &message,
             std::size_t position,
             std::vector<std::string> expected = {},
             std::size_t line = 0);

  // The bare message, without position information.
  std::string const &message() const { return _message; }
  std::size_t position() const { return _position; }
  std::size_t line() const { return _line; }
  std::vector<std::string> const &expected() const { return _expected; }

private:
  std::string _message;
  std::size_t _position;
  std::size_t _line;
  std::vector<std::string> _expected;
};

// Group closure grew beyond the configured element cap.
class CapExceeded : public Error
{
public:
  CapExceeded(std::size_t cap);

  std::size_t cap() const { return _cap; }

private:
  std::size_t _cap;
};

// A documented precondition of an operation was violated.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

} // namespace blocklat

#endif // BLOCKLAT_ERROR_HPP
