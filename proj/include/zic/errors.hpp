#pragma once

#include <stdexcept>
#include <string>

namespace zic {

// Bad inputs: parameter values, malformed files, regime preconditions.
// The CLI maps this family to exit code 2.
struct param_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct regime_error : param_error {
  using param_error::param_error;
};

// Scheme file problems; message always carries the 1-based source line.
struct parse_error : param_error {
  parse_error(int line_no, const std::string& what)
      : param_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

// Input exceeds an enumeration or representation budget.
struct resource_error : param_error {
  using param_error::param_error;
};

// Internal evaluation failures; the CLI maps these to exit code 1.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zic
