#include "bicumulant/cumulants.hpp"

#include "bicumulant/colourings.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bicumulant {

const Expr& CumulantEngine::of_terms(CumulantKind kind, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  // Term codes are prefix-free, so the concatenation identifies the tuple.
  std::string key;
  for (const Term& t : terms) key += t.code();
  auto& cache = cache_[kind == CumulantKind::kappa ? 0 : 1];
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  Expr value;
  if (terms.size() == 1) {
    value = Expr::of(terms.front());
  } else {
    ExprSum sum;
    sum.add(Term::product(moment_op(kind), terms), 1);
    const Op combine = combine_op(kind);
    std::vector<IndexPartition> parts = index_partitions(static_cast<int>(terms.size()));
    for (const IndexPartition& p : parts) {
      if (p.size() < 2) continue;
      std::vector<Expr> factors;
      factors.reserve(p.size());
      for (const auto& block : p) {
        std::vector<Term> sub;
        for (int i : block) sub.push_back(terms[static_cast<std::size_t>(i)]);
        factors.push_back(of_terms(kind, std::move(sub)));
      }
      sum.add(multiply_all(combine, factors), -1);
    }
    value = std::move(sum).finish();
  }
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

Expr CumulantEngine::cumulant(CumulantKind kind, std::span<const Expr> args) {
  if (args.empty()) throw std::invalid_argument("cumulant of no arguments");
  if (args.size() == 1) return args.front();
  for (const Expr& a : args)
    if (a.is_zero()) return {};
  // Odometer over one term from each argument.
  std::vector<std::size_t> pick(args.size(), 0);
  ExprSum sum;
  std::vector<Term> terms(args.size(), args.front().begin()->first);
  while (true) {
    Rational coeff = 1;
    for (std::size_t i = 0; i < args.size(); ++i) {
      const auto& entry = args[i].entries()[pick[i]];
      terms[i] = entry.first;
      coeff *= entry.second;
    }
    sum.add(of_terms(kind, terms), coeff);
    std::size_t i = 0;
    while (i < args.size() && ++pick[i] == args[i].size()) pick[i++] = 0;
    if (i == args.size()) break;
  }
  return std::move(sum).finish();
}

Expr kappa_of_partition(CumulantEngine& engine, const SetPartition& nu, Op combine,
                        CumulantKind kind) {
  std::vector<Expr> factors;
  for (const Block& b : nu.blocks()) {
    std::vector<Term> gens;
    for (Slot s : b) gens.push_back(Term::leaf(s));
    factors.push_back(engine.of_terms(kind, std::move(gens)));
  }
  return multiply_all(combine, factors);
}

Expr kappa_of_tree(CumulantEngine& engine, const Tree& t, CumulantKind kind) {
  if (t.is_leaf()) return Expr::generator(t.slot());
  std::vector<Expr> values;
  values.reserve(t.children().size());
  for (const Tree& c : t.children()) values.push_back(kappa_of_tree(engine, c, kind));
  return engine.cumulant(kind, values);
}

Expr kappa_of_forest(CumulantEngine& engine, const ReducedForest& f, CumulantKind kind) {
  std::vector<Expr> roots;
  for (const Tree& t : f.trees()) roots.push_back(kappa_of_tree(engine, t, kind));
  return multiply_all(moment_op(kind), roots);
}

std::vector<Expr> group_products(const Shape& shape, Op op) {
  std::vector<Expr> out;
  for (int g = 1; g <= shape.groups(); ++g) {
    std::vector<Term> gens;
    for (Slot s : shape.group_slots(g)) gens.push_back(Term::leaf(s));
    out.push_back(Expr::of(Term::product(op, gens)));
  }
  return out;
}

Expr lhs_product(const Shape& shape, CumulantKind kind) {
  return multiply_all(combine_op(kind), group_products(shape, moment_op(kind)));
}

namespace {

Rational sign_of(int w) { return w % 2 == 0 ? 1 : -1; }

template <class Keep>
Expr signed_forest_sum(CumulantEngine& engine, const Shape& shape, CumulantKind kind, Keep keep) {
  auto slots = shape.slots();
  ExprSum sum;
  for (const ReducedForest& f : enumerate_reduced_forests(slots)) {
    if (!keep(f)) continue;
    auto w = w_of_forest(f, shape);
    sum.add(kappa_of_forest(engine, f, kind), sign_of(*w));
  }
  return std::move(sum).finish();
}

}  // namespace

Expr expand_main(CumulantEngine& engine, const Shape& shape, CumulantKind kind) {
  return signed_forest_sum(engine, shape, kind,
                           [&](const ReducedForest& f) { return is_mixing_forest(f, shape); });
}

Expr expand_ls_analogue(CumulantEngine& engine, const Shape& shape, CumulantKind kind) {
  return signed_forest_sum(engine, shape, kind, [&](const ReducedForest& f) {
    return is_strongly_mixing_forest(f, shape);
  });
}

Expr ls_analogue_lhs(CumulantEngine& engine, const Shape& shape, CumulantKind kind) {
  return engine.cumulant(dual(kind), group_products(shape, moment_op(kind)));
}

Expr expand_grouped(CumulantEngine& engine, const Shape& shape) {
  auto slots = shape.slots();
  // Signed mixing-tree sums per block, keyed by the block's slots.
  std::map<Block, Expr> block_sums;
  auto block_sum = [&](const Block& b) -> const Expr& {
    if (auto it = block_sums.find(b); it != block_sums.end()) return it->second;
    ExprSum sum;
    for (const Tree& t : enumerate_reduced_trees(b)) {
      ReducedForest single({t});
      auto w = w_of_forest(single, shape);
      if (w) sum.add(kappa_of_tree(engine, t), sign_of(*w));
    }
    return block_sums.emplace(b, std::move(sum).finish()).first->second;
  };
  ExprSum total;
  for (const SetPartition& nu : enumerate_set_partitions(slots)) {
    std::vector<Expr> factors;
    for (const Block& b : nu.blocks()) factors.push_back(block_sum(b));
    total.add(multiply_all(Op::star, factors));
  }
  return std::move(total).finish();
}

ExpansionPair expand_ls_classical(CumulantEngine& engine, const Shape& shape,
                                  ClassicalVariant variant) {
  const CumulantKind kind =
      variant == ClassicalVariant::star_args ? CumulantKind::kappa : CumulantKind::kappa_star;
  ExpansionPair out;
  out.lhs = engine.cumulant(kind, group_products(shape, moment_op(kind)));
  ExprSum sum;
  for (const SetPartition& nu : enumerate_set_partitions(shape.slots()))
    if (is_strongly_mixing(nu, shape)) sum.add(kappa_of_partition(engine, nu, combine_op(kind), kind));
  out.rhs = std::move(sum).finish();
  return out;
}

Expr expand_colouring_weighted(CumulantEngine& engine, const Shape& shape) {
  ExprSum sum;
  for (const ReducedForest& f : enumerate_reduced_forests(shape.slots())) {
    std::int64_t weight = colouring_sign_sum(f, shape);
    if (weight != 0) sum.add(kappa_of_forest(engine, f), Rational(static_cast<long>(weight)));
  }
  return std::move(sum).finish();
}

long degree_bound_of_forest(const ReducedForest& f,
                            const std::vector<std::pair<Slot, long>>& degrees) {
  auto leaves = f.leaves();
  long total = 0;
  for (Slot s : leaves) {
    auto it = std::find_if(degrees.begin(), degrees.end(),
                           [&](const auto& d) { return d.first == s; });
    if (it == degrees.end()) throw std::invalid_argument("no degree for " + label(s));
    total += it->second;
  }
  return total - 2 * static_cast<long>(leaves.size()) + 2 * static_cast<long>(f.tree_count());
}

}  // namespace bicumulant
