#pragma once

#include "bicumulant/expr.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bicumulant {

/// Syntax error carrying the 0-based offset of the first violation.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("at offset " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// term := slot | "(" op ws term (ws term)+ ")" ; op := "*" | "."
Term parse_term(std::string_view text);
/// Signed sum of optionally rational-weighted terms, or "0".
Expr parse_expr(std::string_view text);

}  // namespace bicumulant
