#pragma once

#include "bicumulant/expr.hpp"
#include "bicumulant/rational.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace bicumulant {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first, trailing zeros trimmed (the zero polynomial has no coefficients).
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(Rational c);
  static Poly monomial(int degree, Rational c = 1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int k) const;

  Poly& operator+=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& q, const Poly& p);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// "3/2 x^2 - x + 5", highest degree first; "0" for zero.
  std::string to_string() const;
  static Poly parse(const std::string& text);

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Ordinary product.
Poly dot(const Poly& p, const Poly& q);
/// Basis map x^n -> x (x-1) ... (x-n+1).
Poly to_falling(const Poly& p);
/// Inverse basis map, x^n -> sum_k S(n,k) x^k with Stirling numbers of the
/// second kind.
Poly from_falling(const Poly& p);
/// Transported product from_falling(to_falling(p) . to_falling(q)).
Poly star(const Poly& p, const Poly& q);

/// Interprets STAR nodes by `star` and DOT nodes by `dot`. Throws
/// std::invalid_argument for a slot missing from `assignment`.
Poly evaluate(const Expr& e, const std::map<Slot, Poly>& assignment);
Poly evaluate(const Term& t, const std::map<Slot, Poly>& assignment);

/// Degree <= max_degree, coefficients p/q with |p| <= 5, 1 <= q <= 4.
Poly random_poly(std::mt19937_64& rng, int max_degree);

}  // namespace bicumulant
