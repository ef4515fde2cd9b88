#pragma once

#include <stdexcept>
#include <string>

namespace bloblint {

struct LexError : std::runtime_error {
  int line;
  int col;
  LexError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line(line),
        col(col) {}
};

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line(line),
        col(col) {}
};

struct OverlapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CorpusMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bloblint
