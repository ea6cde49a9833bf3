#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynzsig/polynomial.hpp"

namespace dynzsig {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Non-literal, negative or oversized exponent.
class ExponentError : public ParseError {
 public:
  using ParseError::ParseError;
};

inline constexpr unsigned kMaxExponent = 4096;

using FactoredForm = std::vector<std::pair<Polynomial, unsigned>>;

struct ParsedPoly {
  Polynomial poly;
  /// Present when the whole input is a single product of factors, each
  /// optionally raised to a literal power.
  std::optional<FactoredForm> factored;
};

/// Grammar (whitespace ignored):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := integer ['/' integer] | 'z' | '(' expr ')'
ParsedPoly parse_poly(std::string_view text);

/// Parses a rational literal "a" or "a/b" with the same error reporting.
Rational parse_rational_literal(std::string_view text);

}  // namespace dynzsig
