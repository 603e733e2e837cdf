#include "bicumulant/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicumulant {

Expr Expr::generator(Slot s) { return of(Term::leaf(s)); }

Expr Expr::of(Term t, Rational coeff) {
  Expr e;
  if (coeff != 0) e.entries_.emplace_back(std::move(t), std::move(coeff));
  return e;
}

Rational Expr::coefficient(const Term& t) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), t,
                             [](const Entry& e, const Term& key) { return e.first < key; });
  if (it != entries_.end() && it->first == t) return it->second;
  return 0;
}

namespace {

// Sorted merge of two entry lists with sign applied to the right side.
std::vector<Expr::Entry> merge(const std::vector<Expr::Entry>& a,
                               const std::vector<Expr::Entry>& b, bool negate) {
  std::vector<Expr::Entry> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, negate ? Rational(-j->second) : j->second);
      ++j;
    } else {
      Rational c = negate ? Rational(i->second - j->second) : Rational(i->second + j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Expr& Expr::operator+=(const Expr& other) {
  entries_ = merge(entries_, other.entries_, false);
  return *this;
}

Expr& Expr::operator-=(const Expr& other) {
  entries_ = merge(entries_, other.entries_, true);
  return *this;
}

Expr operator-(Expr a) {
  for (auto& [t, c] : a.entries_) c = -c;
  return a;
}

bool Expr::is_valid() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].second == 0) return false;
    if (!Term::is_canonical_code(entries_[i].first.code())) return false;
    if (i > 0 && !(entries_[i - 1].first < entries_[i].first)) return false;
  }
  return true;
}

Expr add(const Expr& a, const Expr& b) { return a + b; }

Expr scale(const Rational& q, const Expr& e) {
  if (q == 0) return {};
  ExprSum sum;
  sum.add(e, q);
  return std::move(sum).finish();
}

Expr multiply(Op op, const Expr& a, const Expr& b) {
  ExprSum sum;
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) sum.add(Term::product(op, ta, tb), ca * cb);
  return std::move(sum).finish();
}

Expr multiply_all(Op op, const std::vector<Expr>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  Expr acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = multiply(op, acc, factors[i]);
  return acc;
}

void ExprSum::add(const Term& t, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = acc_.try_emplace(t, coeff);
  if (!inserted) it->second += coeff;
}

void ExprSum::add(const Expr& e, const Rational& coeff) {
  if (coeff == 0) return;
  for (const auto& [t, c] : e) add(t, c * coeff);
}

Expr ExprSum::snapshot() const {
  Expr e;
  for (const auto& [t, c] : acc_)
    if (c != 0) e.entries_.emplace_back(t, c);
  std::sort(e.entries_.begin(), e.entries_.end(),
            [](const Expr::Entry& x, const Expr::Entry& y) { return x.first < y.first; });
  return e;
}

Expr ExprSum::finish() && {
  Expr e;
  e.entries_.reserve(acc_.size());
  for (auto& [t, c] : acc_)
    if (c != 0) e.entries_.emplace_back(t, std::move(c));
  acc_.clear();
  std::sort(e.entries_.begin(), e.entries_.end(),
            [](const Expr::Entry& x, const Expr::Entry& y) { return x.first < y.first; });
  return e;
}

namespace {

template <class RenderTerm>
std::string render_sum(const Expr& e, RenderTerm render_term) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : e) {
    Rational mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + " ";
    out += render_term(t);
    first = false;
  }
  return out;
}

}  // namespace

std::string render_text(const Expr& e) {
  return render_sum(e, [](const Term& t) { return render_text(t); });
}

std::string render_latex(const Expr& e) {
  return render_sum(e, [](const Term& t) {
    std::string body = render_latex(t);
    return t.is_leaf() ? body : "\\left(" + body + "\\right)";
  });
}

}  // namespace bicumulant
