#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcat {

// Caller passed arguments outside an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A guaranteed property failed at runtime. Indicates a bug, not bad input.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class EnumerationBoundError : public std::length_error {
 public:
  EnumerationBoundError(std::size_t n, std::size_t cap)
      : std::length_error("enumeration of P_" + std::to_string(n) +
                          " exceeds the safety cap of " + std::to_string(cap) +
                          " (override with QCAT_MAX_ENUM or --allow-large)"),
        n_(n),
        cap_(cap) {}

  std::size_t requested() const { return n_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qcat
