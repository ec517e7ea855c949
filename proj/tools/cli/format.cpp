#include "format.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <vector>

namespace sbq::cli {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Input with whitespace removed and U+2212 folded to '-', keeping a map
// back to positions in the original text for error reporting.
struct CleanText {
  std::string text;
  std::vector<std::size_t> origin;

  std::size_t origin_at(std::size_t pos) const {
    return pos < origin.size() ? origin[pos]
                               : (origin.empty() ? 0 : origin.back() + 1);
  }
};

CleanText clean(std::string_view raw) {
  CleanText out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(raw[i]);
    if (std::isspace(c)) continue;
    // U+2212 minus sign, UTF-8 e2 88 92
    if (c == 0xe2 && i + 2 < raw.size() &&
        static_cast<unsigned char>(raw[i + 1]) == 0x88 &&
        static_cast<unsigned char>(raw[i + 2]) == 0x92) {
      out.text += '-';
      out.origin.push_back(i);
      i += 2;
      continue;
    }
    out.text += raw[i];
    out.origin.push_back(i);
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const CleanText& in) : in_(in) {}

  Number run() {
    if (in_.text.empty()) fail(0, "empty number literal");
    Number::Coeffs c =
        in_.text[0] == '[' ? parse_vector() : parse_symbolic();
    return Number(c);
  }

 private:
  [[noreturn]] void fail(std::size_t pos, const std::string& reason) const {
    throw ParseError(in_.origin_at(pos), reason);
  }

  bool done() const { return pos_ >= in_.text.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < in_.text.size() ? in_.text[pos_ + ahead] : '\0';
  }

  double parse_double(std::size_t begin, std::size_t end) {
    double value = 0.0;
    const char* first = in_.text.data() + begin;
    const char* last = in_.text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      fail(begin, "malformed numeric literal");
    if (!std::isfinite(value)) fail(begin, "coefficient is out of range");
    return value;
  }

  Number::Coeffs parse_vector() {
    Number::Coeffs c{};
    ++pos_;  // '['
    for (int i = 0; i < 8; ++i) {
      const std::size_t begin = pos_;
      while (!done() && peek() != ',' && peek() != ']') ++pos_;
      if (begin == pos_) fail(begin, "expected a number");
      c[static_cast<std::size_t>(i)] = parse_double(begin, pos_);
      const char sep = i < 7 ? ',' : ']';
      if (peek() != sep)
        fail(pos_, i < 7 ? "expected ',' (vector form takes 8 components)"
                         : "expected ']' after 8 components");
      ++pos_;
    }
    if (!done()) fail(pos_, "trailing characters after ']'");
    return c;
  }

  // True when text[pos_] starts a basis name: 'e' or 'E', one digit 0..7,
  // then a term boundary.
  bool at_basis() const {
    if (peek() != 'e' && peek() != 'E') return false;
    const char d = peek(1);
    if (d < '0' || d > '7') return false;
    const char after = peek(2);
    return after == '\0' || after == '+' || after == '-';
  }

  Number::Coeffs parse_symbolic() {
    Number::Coeffs c{};
    bool first = true;
    while (!done()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
      } else if (!first) {
        fail(pos_, "expected '+' or '-' between terms");
      }
      first = false;

      bool has_coeff = false;
      double coeff = 1.0;
      if (is_digit(peek()) || peek() == '.') {
        const std::size_t begin = pos_;
        while (is_digit(peek())) ++pos_;
        if (peek() == '.') {
          ++pos_;
          while (is_digit(peek())) ++pos_;
        }
        if (pos_ == begin || (pos_ == begin + 1 && in_.text[begin] == '.'))
          fail(begin, "expected digits in numeric literal");
        // exponent, unless the 'e' names a basis element
        if ((peek() == 'e' || peek() == 'E') && !at_basis()) {
          const char s = peek(1);
          std::size_t d = (s == '+' || s == '-') ? 2 : 1;
          if (!is_digit(peek(d))) fail(pos_, "malformed exponent");
          pos_ += d;
          while (is_digit(peek())) ++pos_;
        }
        coeff = parse_double(begin, pos_);
        has_coeff = true;
      }

      if (peek() == 'e' || peek() == 'E') {
        const char d = peek(1);
        if (!is_digit(d)) fail(pos_, "expected a basis index after 'e'");
        if (d > '7') fail(pos_ + 1, "basis index must be 0..7");
        if (is_digit(peek(2)))
          fail(pos_, "basis index must be a single digit 0..7");
        c[static_cast<std::size_t>(d - '0')] += sign * coeff;
        pos_ += 2;
      } else if (has_coeff) {
        c[0] += sign * coeff;
      } else {
        fail(pos_, "expected a coefficient or basis element");
      }
    }
    return c;
  }

  const CleanText& in_;
  std::size_t pos_ = 0;
};

std::string coeff_text(double magnitude, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, magnitude);
  return buf;
}

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& reason)
    : std::runtime_error("parse error at position " +
                         std::to_string(position) + ": " + reason),
      position_(position) {}

Number parse_number(std::string_view text) {
  const CleanText ct = clean(text);
  return Parser(ct).run();
}

std::string format_number(const Number& x, int precision) {
  if (precision < 1) precision = 1;
  std::string out;
  for (std::size_t i = 0; i < 8; ++i) {
    const double v = x[i];
    if (v == 0.0) continue;
    const std::string mag = coeff_text(std::abs(v), precision);
    if (out.empty()) {
      if (v < 0.0) out += '-';
    } else {
      out += v < 0.0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += 'e';
      out += static_cast<char>('0' + i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace sbq::cli
