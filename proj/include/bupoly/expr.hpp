#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bupoly/factor.hpp"
#include "bupoly/poly.hpp"

namespace bupoly {

/// Parse failure with the 1-based column where it was detected.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::invalid_argument(message + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Evaluates a polynomial expression:
///
///   expr    := product ('+' product)*
///   product := power ('*' power)*
///   power   := atom ('^' uint)?
///   atom    := 'x' | '0' | '1' | hex | name | '(' expr ')'
///   hex     := '0x' hexdigits          (bit i = coefficient of x^i)
///   name    := 'M1'..'M5' | 'C1'..'C15'
///
/// Whitespace is ignored. Names resolve against constants().
Poly parse_poly(std::string_view text);

/// "x^3*(1+x)^4*(1+x+x^2)"; "1" for the empty factorization. With
/// use_names, table entries print as their names ("x^3*(1+x)^4*M1").
/// Either form parses back to the expanded polynomial.
std::string format_factorization(const Factorization& f, bool use_names = false);

}  // namespace bupoly
