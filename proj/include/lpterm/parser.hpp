#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "lpterm/program.hpp"

namespace lpterm {

struct SyntaxError : std::runtime_error {
  int line, col;
  SyntaxError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_), col(col_) {}
};

struct UnsupportedFeature : std::runtime_error {
  int line, col;
  UnsupportedFeature(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_), col(col_) {}
};

struct UnknownSymbol : std::runtime_error {
  explicit UnknownSymbol(const std::string& msg) : std::runtime_error(msg) {}
};

// Parses a definite logic program. List sugar is normalized to './2' and
// '[]'; "%query:" / "%filter:" comment lines are left for parse_query_spec.
Program parse_program(const std::string& text,
                      std::shared_ptr<SymbolTable> table = nullptr);

// Reads the "%query: p(i,o)" / "%filter: f = [2]" directives of a source
// file against an already-parsed program.
QuerySpec parse_query_spec(const std::string& text, const Program& program);

}  // namespace lpterm
