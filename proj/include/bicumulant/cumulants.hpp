#pragma once

#include "bicumulant/expr.hpp"
#include "bicumulant/forests.hpp"
#include "bicumulant/partitions.hpp"

#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bicumulant {

/// kappa: cumulants of the identity from (A, *) moments to (A, .) products,
///   x_1 * ... * x_n = sum over partitions of the .-product of block cumulants.
/// kappa_star: the same with the two products exchanged.
enum class CumulantKind { kappa, kappa_star };

/// Product inside the moment: STAR for kappa, DOT for kappa_star.
constexpr Op moment_op(CumulantKind k) { return k == CumulantKind::kappa ? Op::star : Op::dot; }
/// Product combining block cumulants: DOT for kappa, STAR for kappa_star.
constexpr Op combine_op(CumulantKind k) { return other(moment_op(k)); }
constexpr CumulantKind dual(CumulantKind k) {
  return k == CumulantKind::kappa ? CumulantKind::kappa_star : CumulantKind::kappa;
}

/// Evaluates cumulants on expressions by multilinear expansion into term
/// tuples. Cumulants of term tuples are memoized; an engine is meant to live
/// for one verification task and is not safe for concurrent use.
class CumulantEngine {
public:
  /// Throws std::invalid_argument on an empty argument list.
  Expr cumulant(CumulantKind kind, std::span<const Expr> args);
  Expr kappa(std::span<const Expr> args) { return cumulant(CumulantKind::kappa, args); }
  Expr kappa_star(std::span<const Expr> args) { return cumulant(CumulantKind::kappa_star, args); }

  /// Cumulant of canonical terms (order irrelevant).
  const Expr& of_terms(CumulantKind kind, std::vector<Term> terms);

  std::size_t cache_size() const { return cache_[0].size() + cache_[1].size(); }

private:
  std::unordered_map<std::string, Expr> cache_[2];
};

/// kappa_nu: block cumulants of generators combined with `combine`.
Expr kappa_of_partition(CumulantEngine& engine, const SetPartition& nu, Op combine,
                        CumulantKind kind = CumulantKind::kappa);

/// kappa_v = slot at leaves, cumulant of the children values elsewhere; the
/// forest value is the moment product (STAR for kappa) over the roots.
Expr kappa_of_tree(CumulantEngine& engine, const Tree& t, CumulantKind kind = CumulantKind::kappa);
Expr kappa_of_forest(CumulantEngine& engine, const ReducedForest& f,
                     CumulantKind kind = CumulantKind::kappa);

/// Per-group products with moment_op(kind), combined with combine_op(kind).
/// For kappa: (a_1^1 * ... * a_k1^1) . ... . (a_1^n * ... * a_kn^n).
Expr lhs_product(const Shape& shape, CumulantKind kind = CumulantKind::kappa);
/// Per-group products taken with `op`.
std::vector<Expr> group_products(const Shape& shape, Op op);

/// Signed forest sum over mixing forests, sum (-1)^{w_F} kappa_F.
Expr expand_main(CumulantEngine& engine, const Shape& shape, CumulantKind kind = CumulantKind::kappa);
/// Same sum restricted to strongly-mixing forests.
Expr expand_ls_analogue(CumulantEngine& engine, const Shape& shape,
                        CumulantKind kind = CumulantKind::kappa);
/// Left side of the analogue: the dual cumulant of the per-group moment
/// products, e.g. kappa*(a^1_1 * ... , ..., a^n_1 * ...) for kind = kappa.
Expr ls_analogue_lhs(CumulantEngine& engine, const Shape& shape,
                     CumulantKind kind = CumulantKind::kappa);

/// Sum over partitions nu of the *-product over blocks of the signed sums
/// over mixing trees on each block.
Expr expand_grouped(CumulantEngine& engine, const Shape& shape);

/// Which product forms the cumulant arguments in the classical formula.
enum class ClassicalVariant { dot_args, star_args };

struct ExpansionPair {
  Expr lhs;
  Expr rhs;
};

/// Classical Leonov-Shiryaev formula over strongly-mixing partitions:
///   star_args: kappa(per-group *-products)  = sum_nu  .-product of kappa blocks
///   dot_args:  kappa*(per-group .-products) = sum_nu  *-product of kappa* blocks
ExpansionPair expand_ls_classical(CumulantEngine& engine, const Shape& shape,
                                  ClassicalVariant variant);

/// Colouring-weighted sum over all reduced forests,
/// sum_F kappa_F sum_{c in C_F} (-1)^{|c|}.
Expr expand_colouring_weighted(CumulantEngine& engine, const Shape& shape);

/// Upper bound sum(deg) - 2|A| + 2f for kappa_F, f the number of trees.
long degree_bound_of_forest(const ReducedForest& f, const std::vector<std::pair<Slot, long>>& degrees);

}  // namespace bicumulant
