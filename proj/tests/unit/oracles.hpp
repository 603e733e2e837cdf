#pragma once

// Independent reference computations used by the tests. None of these call
// the library's enumerators or cumulant engine.

#include "bicumulant/expr.hpp"
#include "bicumulant/parse.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using bicumulant::Expr;
using bicumulant::Op;
using bicumulant::Rational;
using bicumulant::Slot;

inline Slot slot(int group, int position) {
  return Slot{static_cast<std::uint16_t>(group), static_cast<std::uint16_t>(position)};
}
inline Expr gen(int group, int position) { return Expr::generator(slot(group, position)); }
inline Expr expr(const char* text) { return bicumulant::parse_expr(text); }

/// Set partitions of {0..n-1} by inserting each element into an existing
/// block or a new one.
inline void set_partitions(int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> place = [&](int i) {
    if (i == n) {
      visit(blocks);
      return;
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      blocks[k].push_back(i);
      place(i + 1);
      blocks[k].pop_back();
    }
    blocks.push_back({i});
    place(i + 1);
    blocks.pop_back();
  };
  place(0);
}

inline Rational factorial(int n) {
  Rational out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

/// Closed Moebius form: sum over partitions pi of
/// (-1)^{|pi|-1} (|pi|-1)! times the `combine` product over blocks of the
/// `moment` product inside each block.
inline Expr mobius_cumulant(const std::vector<Expr>& args, Op moment, Op combine) {
  Expr total;
  set_partitions(static_cast<int>(args.size()), [&](const std::vector<std::vector<int>>& pi) {
    std::vector<Expr> factors;
    for (const auto& b : pi) {
      std::vector<Expr> inner;
      for (int i : b) inner.push_back(args[static_cast<std::size_t>(i)]);
      factors.push_back(bicumulant::multiply_all(moment, inner));
    }
    int k = static_cast<int>(pi.size());
    Rational c = factorial(k - 1) * (k % 2 == 1 ? 1 : -1);
    total += bicumulant::scale(c, bicumulant::multiply_all(combine, factors));
  });
  return total;
}
inline Expr kappa(const std::vector<Expr>& args) { return mobius_cumulant(args, Op::star, Op::dot); }
inline Expr kappa_star(const std::vector<Expr>& args) { return mobius_cumulant(args, Op::dot, Op::star); }

/// Bell numbers from the Bell triangle.
inline std::vector<long> bell_numbers(int n) {
  std::vector<long> out{1};
  std::vector<long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long> next{row.back()};
    for (long x : row) next.push_back(next.back() + x);
    out.push_back(next.front());
    row = next;
  }
  return out;
}

/// Stirling numbers of the second kind by counting surjections-up-to-order.
inline long stirling2(int n, int k) {
  long count = 0;
  set_partitions(n, [&](const std::vector<std::vector<int>>& pi) { count += static_cast<int>(pi.size()) == k; });
  return count;
}

/// Signed count of lattice paths from 0 to x with nonzero 0/1 steps, each
/// path weighted -(-1)^{steps}, by explicit depth-first walking.
inline long brute_paths(const std::vector<int>& x) {
  for (int c : x)
    if (c < 0) return 0;
  const int r = static_cast<int>(x.size());
  long total = 0;
  std::vector<int> at(static_cast<std::size_t>(r), 0);
  std::function<void(int)> walk = [&](int steps) {
    if (at == x) {
      total += steps % 2 == 0 ? -1 : 1;
      return;
    }
    for (int mask = 1; mask < (1 << r); ++mask) {
      bool ok = true;
      for (int i = 0; i < r; ++i)
        if ((mask >> i & 1) && at[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(i)]) ok = false;
      if (!ok) continue;
      for (int i = 0; i < r; ++i) at[static_cast<std::size_t>(i)] += mask >> i & 1;
      walk(steps + 1);
      for (int i = 0; i < r; ++i) at[static_cast<std::size_t>(i)] -= mask >> i & 1;
    }
  };
  walk(0);
  return total;
}

}  // namespace oracle
