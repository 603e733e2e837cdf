#pragma once

#include <gmpxx.h>

#include <string>

namespace bicumulant {

using Rational = mpq_class;

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);
/// Accepts "p" or "p/q" with an optional leading sign; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace bicumulant
