#pragma once

// Text syntax for cyclotomic numbers:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] INT)?
//   primary := INT ['/' INT] | 'z' '(' INT ')' | '(' expr ')'
//
// `z(m)` is zeta_m, e.g. "z(8) + z(8)^-1" is sqrt(2).

#include <stdexcept>
#include <string>
#include <string_view>

#include "mckay/cyclotomic.hpp"

namespace mckay {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

CyclotomicNumber parse_cyclotomic(std::string_view text);

/// Power-basis rendering at the stored conductor, parseable by parse_cyclotomic.
std::string to_string(const CyclotomicNumber& a);

/// Renders minimize_conductor(a); the form used for display.
std::string to_display_string(const CyclotomicNumber& a);

}  // namespace mckay
