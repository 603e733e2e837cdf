#include "bicumulant/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bicumulant {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
    } else {
      throw std::invalid_argument("bad rational '" + text + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash))
    throw std::invalid_argument("bad rational '" + text + "'");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q(body, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace bicumulant
