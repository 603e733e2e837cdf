#include "bicumulant/model.hpp"

#include <cctype>
#include <stdexcept>

namespace bicumulant {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rational c) { return Poly({std::move(c)}); }

Poly Poly::monomial(int degree, Rational c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1), 0);
  v.back() = std::move(c);
  return Poly(std::move(v));
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Rational& q, const Poly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (Rational& c : v) c *= q;
  return Poly(std::move(v));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string x = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (x.empty())
      out += bicumulant::to_string(mag);
    else if (mag == 1)
      out += x;
    else
      out += bicumulant::to_string(mag) + " " + x;
  }
  return out;
}

Poly Poly::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("poly parse error at offset " + std::to_string(pos) + ": " + what);
  };
  Poly result;
  bool first = true;
  skip();
  if (pos == text.size()) fail("empty input");
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '-' || text[pos] == '+') {
      negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    skip();
    Rational c = 1;
    bool have_coeff = false;
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    if (pos > start) {
      c = parse_rational(text.substr(start, pos - start));
      have_coeff = true;
    }
    skip();
    int k = 0;
    if (pos < text.size() && text[pos] == 'x') {
      ++pos;
      k = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t d = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (d == pos) fail("expected exponent");
        k = std::stoi(text.substr(d, pos - d));
      }
    } else if (!have_coeff) {
      fail("expected coefficient or 'x'");
    }
    result += Poly::monomial(k, negative ? Rational(-c) : c);
    first = false;
    skip();
  }
  return result;
}

Poly dot(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> v(p.coeffs().size() + q.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) v[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return Poly(std::move(v));
}

Poly to_falling(const Poly& p) {
  Poly out;
  Poly falling = Poly::constant(1);  // x (x-1) ... (x-k+1)
  for (int k = 0; k <= p.degree(); ++k) {
    out += p.coeff(k) * falling;
    falling = dot(falling, Poly({Rational(-k), Rational(1)}));
  }
  return out;
}

Poly from_falling(const Poly& p) {
  // Row n of S(n, k), built with S(n+1, k) = k S(n, k) + S(n, k-1).
  Poly out;
  std::vector<Rational> row{1};
  for (int n = 0; n <= p.degree(); ++n) {
    if (n > 0) {
      std::vector<Rational> next(static_cast<std::size_t>(n + 1), 0);
      for (int k = 1; k <= n; ++k) {
        Rational prev_k = k < n ? row[static_cast<std::size_t>(k)] : Rational(0);
        next[static_cast<std::size_t>(k)] = Rational(k) * prev_k + row[static_cast<std::size_t>(k - 1)];
      }
      row = std::move(next);
    }
    out += p.coeff(n) * Poly(row);
  }
  return out;
}

Poly star(const Poly& p, const Poly& q) { return from_falling(dot(to_falling(p), to_falling(q))); }

Poly evaluate(const Term& t, const std::map<Slot, Poly>& assignment) {
  if (t.is_leaf()) {
    auto it = assignment.find(t.slot());
    if (it == assignment.end()) throw std::invalid_argument("no polynomial assigned to " + label(t.slot()));
    return it->second;
  }
  auto kids = t.children();
  Poly acc = evaluate(kids.front(), assignment);
  for (std::size_t i = 1; i < kids.size(); ++i) {
    Poly next = evaluate(kids[i], assignment);
    acc = t.op() == Op::star ? star(acc, next) : dot(acc, next);
  }
  return acc;
}

Poly evaluate(const Expr& e, const std::map<Slot, Poly>& assignment) {
  Poly out;
  for (const auto& [t, c] : e) out += c * evaluate(t, assignment);
  return out;
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), deg(0, max_degree);
  int d = deg(rng);
  std::vector<Rational> v;
  for (int k = 0; k <= d; ++k) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    v.push_back(c);
  }
  return Poly(std::move(v));
}

}  // namespace bicumulant
