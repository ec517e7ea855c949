#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sbq/number.hpp"

namespace sbq::cli {

/// Raised on malformed number literals; position indexes the original text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& reason);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/**
 * Parse a number literal. Two forms:
 *
 *   vector form    "[a0,a1,a2,a3,a4,a5,a6,a7]"
 *   symbolic form  "a0 + a1e1 - a2e2 ..."  (terms in any order, e0 implied
 *                  for bare coefficients, missing terms are 0, duplicate
 *                  basis terms are summed)
 *
 * Whitespace is ignored and the Unicode minus sign is accepted. In symbolic
 * form, "e"/"E" followed by a bare digit 0..7 at a term boundary names a
 * basis element ("2e1" is 2*e1); a scientific exponent needs a sign or two
 * or more digits ("2e-3" is 0.002, "2e12" is 2*10^12). format_number always
 * writes exponents with a sign, so its output never hits the ambiguity.
 */
Number parse_number(std::string_view text);

/// Symbolic form with the given number of significant digits, omitting zero
/// terms ("0" for the zero element). parse_number(format_number(x, 17)) == x
/// exactly for every finite x.
std::string format_number(const Number& x, int precision = 12);

}  // namespace sbq::cli
