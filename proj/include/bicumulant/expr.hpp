#pragma once

#include "bicumulant/rational.hpp"
#include "bicumulant/term.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bicumulant {

/// Finite rational-linear combination of canonical terms.
///
/// Terms are kept sorted in canonical order with nonzero coefficients, so
/// structural equality is algebraic equality.
class Expr {
public:
  using Entry = std::pair<Term, Rational>;

  Expr() = default;
  static Expr generator(Slot s);
  static Expr of(Term t, Rational coeff = 1);

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }
  /// Zero when `t` is absent.
  Rational coefficient(const Term& t) const;

  Expr& operator+=(const Expr& other);
  Expr& operator-=(const Expr& other);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator-(Expr a);

  friend bool operator==(const Expr&, const Expr&) = default;

  /// Checks sortedness, absence of zeros and canonical term codes.
  bool is_valid() const;

private:
  friend class ExprSum;
  std::vector<Entry> entries_;
};

Expr add(const Expr& a, const Expr& b);
Expr scale(const Rational& q, const Expr& e);
/// Bilinear extension of the canonical term product.
Expr multiply(Op op, const Expr& a, const Expr& b);
/// Left fold of `multiply`; `factors` must be nonempty.
Expr multiply_all(Op op, const std::vector<Expr>& factors);

/// Hash-based accumulator for sums with many summands.
class ExprSum {
public:
  void add(const Term& t, const Rational& coeff);
  void add(const Expr& e, const Rational& coeff = 1);
  Expr finish() &&;
  Expr snapshot() const;

private:
  std::unordered_map<Term, Rational> acc_;
};

/// Signed sum "c1 t1 + c2 t2 - ..." in canonical order; "0" when empty.
std::string render_text(const Expr& e);
std::string render_latex(const Expr& e);

}  // namespace bicumulant
