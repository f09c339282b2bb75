#pragma once

#include <stdexcept>
#include <string>

namespace plrigid {

// Input rejected while reading a graph description. line() is 1-based and 0
// when the position is not line-addressable (e.g. JSON semantic errors).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : msg),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An enumeration or capacity limit was exceeded (oracle size caps, generator
// asking for more edges than a simple graph admits). CLI maps this to exit 3.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace plrigid
