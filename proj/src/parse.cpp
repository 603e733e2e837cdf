#include "bicumulant/parse.hpp"

#include <cctype>

namespace bicumulant {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term whole_term() {
    skip_ws();
    Term t = normalize(term());
    skip_ws();
    if (!at_end()) fail("trailing input");
    return t;
  }

  Expr whole_expr() {
    skip_ws();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return {};
      pos_ = save;
    }
    ExprSum sum;
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (consume_minus()) {
        negative = true;
      } else if (peek() == '+') {
        if (first) fail("leading '+'");
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      Rational coeff = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = rational();
        if (!skip_ws()) fail("expected whitespace after coefficient");
      }
      if (negative) coeff = -coeff;
      sum.add(normalize(term()), coeff);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return std::move(sum).finish();
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  bool skip_ws() {
    std::size_t start = pos_;
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ > start;
  }

  bool consume_minus() {
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    // U+2212 MINUS SIGN
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  unsigned number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    unsigned long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned long>(peek() - '0');
      if (value > 100000) fail("number too large");
      ++pos_;
    }
    return static_cast<unsigned>(value);
  }

  Rational rational() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    std::string digits(text_.substr(start, pos_ - start));
    Rational q(digits, 10);
    if (q.get_den() == 0) {
      pos_ = start;
      fail("zero denominator");
    }
    q.canonicalize();
    return q;
  }

  RawTerm term() {
    if (peek() == 'a') return RawTerm::of(slot());
    if (peek() != '(') fail("expected slot or '('");
    ++pos_;
    Op op;
    if (peek() == '*')
      op = Op::star;
    else if (peek() == '.')
      op = Op::dot;
    else
      fail("expected '*' or '.'");
    ++pos_;
    std::vector<RawTerm> kids;
    while (true) {
      bool had_ws = skip_ws();
      if (peek() == ')') {
        if (kids.size() < 2) fail("a product needs at least two factors");
        ++pos_;
        break;
      }
      if (!had_ws) fail("expected whitespace");
      kids.push_back(term());
    }
    return RawTerm::node(op, std::move(kids));
  }

  Slot slot() {
    ++pos_;  // 'a'
    std::size_t at = pos_;
    unsigned group = number();
    if (peek() != '_') fail("expected '_'");
    ++pos_;
    unsigned position = number();
    if (group < 1 || position < 1 || group > 255 || position > 255) {
      pos_ = at;
      fail("slot indices must lie in [1, 255]");
    }
    return {static_cast<std::uint16_t>(group), static_cast<std::uint16_t>(position)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).whole_term(); }

Expr parse_expr(std::string_view text) { return Parser(text).whole_expr(); }

}  // namespace bicumulant
