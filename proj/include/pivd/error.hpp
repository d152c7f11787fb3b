#ifndef PIVD_ERROR_HPP
#define PIVD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pivd {

// Bad arguments or violated preconditions (self-loops, out-of-range ids, ...).
class InvalidArgument : public std::runtime_error {
 public:
  explicit InvalidArgument(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Requested operation does not apply to the given family/variant pairing.
class IncompatibleError : public std::runtime_error {
 public:
  explicit IncompatibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pivd

#endif
