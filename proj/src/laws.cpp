#include "bicumulant/laws.hpp"

#include "bicumulant/colourings.hpp"
#include "bicumulant/paths.hpp"
#include "bicumulant/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <set>
#include <thread>

namespace bicumulant {

namespace {

struct LawInfo {
  Law law;
  const char* name;
  bool expression;
};

constexpr LawInfo kLaws[] = {
    {Law::moment_cumulant, "moment-cumulant", true},
    {Law::moment_cumulant_dual, "moment-cumulant-dual", true},
    {Law::main, "main", true},
    {Law::ls_analogue, "ls-analogue", true},
    {Law::ls_classical_star, "ls-classical-star", true},
    {Law::ls_classical_dot, "ls-classical-dot", true},
    {Law::grouped, "grouped", true},
    {Law::dual_main, "dual-main", true},
    {Law::dual_analogue, "dual-analogue", true},
    {Law::prop_colouring, "prop-colouring", true},
    {Law::prop_colouring_sign, "prop-colouring-sign", false},
    {Law::prop_mixing_seq, "prop-mixing-seq", true},
    {Law::seq_bijection, "seq-bijection", false},
    {Law::halving, "halving", false},
    {Law::degree_bound, "degree-bound", false},
    {Law::path_fg, "path-fg", false},
};

const LawInfo& info(Law law) {
  for (const LawInfo& i : kLaws)
    if (i.law == law) return i;
  throw std::logic_error("unregistered law");
}

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Rational sign_of(int k) { return k % 2 == 0 ? 1 : -1; }

Expr sum_over_partitions(CumulantEngine& engine, const Shape& shape, Op combine, CumulantKind kind,
                         bool mixing_only) {
  ExprSum sum;
  for (const SetPartition& nu : enumerate_set_partitions(shape.slots()))
    if (!mixing_only || is_mixing_partition(nu, shape))
      sum.add(kappa_of_partition(engine, nu, combine, kind));
  return std::move(sum).finish();
}

Expr signed_sequence_sum(CumulantEngine& engine, const Shape& shape) {
  ExprSum sum;
  for (const UpwardSequence& w : enumerate_sequences(shape, true))
    sum.add(kappa_of_sequence(engine, w), -sign_of(w.length()));
  return std::move(sum).finish();
}

std::string check_colouring_signs(const Shape& shape, bool& ok) {
  std::size_t checked = 0;
  for (const ReducedForest& f : enumerate_reduced_forests(shape.slots())) {
    auto w = w_of_forest(f, shape);
    std::int64_t expected = w ? (*w % 2 == 0 ? 1 : -1) : 0;
    std::int64_t got = colouring_sign_sum(f, shape);
    ++checked;
    if (got != expected) {
      ok = false;
      return "forest " + render_forest_text(f) + ": sign sum " + std::to_string(got) + ", expected " +
             std::to_string(expected);
    }
  }
  ok = true;
  return std::to_string(checked) + " forests";
}

std::string check_bijection(const Shape& shape, bool& ok) {
  CumulantEngine engine;
  auto fail = [&](const std::string& why) {
    ok = false;
    return why;
  };
  std::size_t sequences = 0;
  std::set<std::pair<ReducedForest, Colouring>> images;
  for (const UpwardSequence& w : enumerate_sequences(shape, true)) {
    ++sequences;
    ColouredForest fc = phi(w);
    if (fc.colouring.length() != w.length()) return fail("length not preserved");
    if (!is_gap_free(fc.forest, fc.colouring) || !is_weakly_mixing(fc.forest, shape, fc.colouring))
      return fail("image colouring outside C_F for " + render_forest_text(fc.forest));
    if (phi_inverse(fc.forest, fc.colouring) != w) return fail("round trip failed at " + render_forest_text(fc.forest));
    if (kappa_of_sequence(engine, w) != kappa_of_forest(engine, fc.forest))
      return fail("cumulant differs at " + render_forest_text(fc.forest));
    if (!images.emplace(fc.forest, fc.colouring).second) return fail("image repeated");
  }
  std::size_t pairs = 0;
  for (const ReducedForest& f : enumerate_reduced_forests(shape.slots())) {
    for (const Colouring& c : enumerate_colourings(f, shape, ColouringFilter::weakly_mixing)) {
      if (c.length() == 0) continue;
      ++pairs;
      if (!images.contains({f, c})) return fail("pair not reached: " + render_forest_text(f));
      ColouredForest back = phi(phi_inverse(f, c));
      if (!(back.forest == f && back.colouring == c)) return fail("inverse round trip failed");
    }
  }
  if (pairs != sequences) return fail("sizes differ");
  ok = true;
  return std::to_string(sequences) + " sequences";
}

std::string check_halving(const Shape& shape, bool& ok) {
  auto slots = shape.slots();
  std::size_t forests = enumerate_reduced_forests(slots).size();
  std::size_t trees = enumerate_reduced_trees(slots).size();
  ok = slots.size() < 2 || forests == 2 * trees;
  return std::to_string(forests) + " forests, " + std::to_string(trees) + " trees";
}

std::string check_degree_bound(const Shape& shape, bool& ok) {
  std::vector<std::pair<Slot, long>> degrees;
  for (Slot s : shape.slots()) degrees.emplace_back(s, 2 * s.group + s.position);
  long total_degree = 0;
  for (const auto& d : degrees) total_degree += d.second;
  const long n = static_cast<long>(degrees.size());
  std::size_t checked = 0;
  for (const ReducedForest& f : enumerate_reduced_forests(shape.slots())) {
    ++checked;
    long bound = degree_bound_of_forest(f, degrees);
    long parts = 0;
    for (const Tree& t : f.trees()) parts += degree_bound_of_forest(ReducedForest({t}), degrees);
    ok = bound == parts;
    if (static_cast<long>(f.tree_count()) == n) ok = ok && bound == total_degree;
    if (f.is_tree()) ok = ok && bound == total_degree - 2 * n + 2;
    if (!ok) return "bound arithmetic fails at " + render_forest_text(f);
  }
  return std::to_string(checked) + " forests";
}

}  // namespace

std::optional<Mismatch> find_mismatch(const Expr& lhs, const Expr& rhs) {
  Expr diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  const Term& t = diff.begin()->first;
  return Mismatch{t, lhs.coefficient(t), rhs.coefficient(t)};
}

std::string law_name(Law law) { return info(law).name; }

std::vector<std::string> law_names() {
  std::vector<std::string> out;
  for (const LawInfo& i : kLaws) out.push_back(i.name);
  out.push_back("ls-classical");
  out.push_back("dual");
  return out;
}

std::vector<Law> parse_laws(const std::string& name) {
  if (name == "ls-classical") return {Law::ls_classical_star, Law::ls_classical_dot};
  if (name == "dual") return {Law::dual_main, Law::dual_analogue};
  for (const LawInfo& i : kLaws)
    if (name == i.name) return {i.law};
  throw std::invalid_argument("unknown law '" + name + "'");
}

bool is_expression_law(Law law) { return info(law).expression; }

CapExceeded::CapExceeded(int total, int cap)
    : std::runtime_error([&] {
        char estimate[64];
        std::snprintf(estimate, sizeof estimate, "%.3g", reduced_forest_count(total));
        return "shape has " + std::to_string(total) + " slots, above the cap of " + std::to_string(cap) +
               " (about " + estimate + " reduced forests); pass --unsafe-cap to override";
      }()),
      total_(total),
      cap_(cap) {}

double reduced_forest_count(int n) {
  // F(m) = sum_k C(m-1, k-1) T(k) F(m-k) with T(1) = 1 and T(k) = F(k)/2
  // for k >= 2; the k = m term contains F(m)/2 itself.
  std::vector<double> forests(static_cast<std::size_t>(std::max(n, 1)) + 1, 0.0), trees = forests;
  forests[0] = 1;
  for (int m = 1; m <= n; ++m) {
    double rest = 0, binom = 1;  // C(m-1, k-1)
    for (int k = 1; k < m; ++k) {
      rest += binom * trees[static_cast<std::size_t>(k)] * forests[static_cast<std::size_t>(m - k)];
      binom = binom * (m - k) / k;
    }
    forests[static_cast<std::size_t>(m)] = m == 1 ? 1 : 2 * rest;
    trees[static_cast<std::size_t>(m)] = m == 1 ? 1 : rest;
  }
  return forests[static_cast<std::size_t>(n)];
}

ExpansionPair law_sides(CumulantEngine& engine, Law law, const Shape& shape) {
  using K = CumulantKind;
  switch (law) {
    case Law::moment_cumulant: {
      std::vector<Term> gens;
      for (Slot s : shape.slots()) gens.push_back(Term::leaf(s));
      return {Expr::of(Term::product(Op::star, gens)),
              sum_over_partitions(engine, shape, Op::dot, K::kappa, false)};
    }
    case Law::moment_cumulant_dual: {
      std::vector<Term> gens;
      for (Slot s : shape.slots()) gens.push_back(Term::leaf(s));
      return {Expr::of(Term::product(Op::dot, gens)),
              sum_over_partitions(engine, shape, Op::star, K::kappa_star, false)};
    }
    case Law::main:
      return {lhs_product(shape), expand_main(engine, shape)};
    case Law::ls_analogue:
      return {ls_analogue_lhs(engine, shape), expand_ls_analogue(engine, shape)};
    case Law::ls_classical_star:
      return expand_ls_classical(engine, shape, ClassicalVariant::star_args);
    case Law::ls_classical_dot:
      return expand_ls_classical(engine, shape, ClassicalVariant::dot_args);
    case Law::grouped:
      return {lhs_product(shape), expand_grouped(engine, shape)};
    case Law::dual_main:
      return {lhs_product(shape, K::kappa_star), expand_main(engine, shape, K::kappa_star)};
    case Law::dual_analogue:
      return {ls_analogue_lhs(engine, shape, K::kappa_star),
              expand_ls_analogue(engine, shape, K::kappa_star)};
    case Law::prop_colouring:
      return {lhs_product(shape), expand_colouring_weighted(engine, shape)};
    case Law::prop_mixing_seq:
      return {sum_over_partitions(engine, shape, Op::dot, K::kappa, true),
              signed_sequence_sum(engine, shape)};
    default:
      throw std::invalid_argument("law '" + law_name(law) + "' does not compare two expressions");
  }
}

LawReport verify(Law law, const Shape& shape, int cap) {
  if (law == Law::path_fg) throw std::invalid_argument("path-fg takes an arity, not a shape");
  if (shape.total() > cap) throw CapExceeded(shape.total(), cap);
  const auto start = Clock::now();
  LawReport report;
  report.law = law_name(law);
  report.shape = shape.to_string();
  if (is_expression_law(law)) {
    CumulantEngine engine;
    ExpansionPair sides = law_sides(engine, law, shape);
    report.mismatch = find_mismatch(sides.lhs, sides.rhs);
    report.equal = !report.mismatch;
    report.lhs = std::move(sides.lhs);
    report.rhs = std::move(sides.rhs);
  } else {
    bool ok = false;
    switch (law) {
      case Law::prop_colouring_sign: report.detail = check_colouring_signs(shape, ok); break;
      case Law::seq_bijection: report.detail = check_bijection(shape, ok); break;
      case Law::halving: report.detail = check_halving(shape, ok); break;
      case Law::degree_bound: report.detail = check_degree_bound(shape, ok); break;
      default: throw std::logic_error("unhandled law");
    }
    report.equal = ok;
  }
  report.millis = millis_since(start);
  return report;
}

std::vector<LawReport> verify_sweep(Law law, int max_total, int cap, unsigned threads) {
  if (max_total > cap) throw CapExceeded(max_total, cap);
  std::vector<Shape> shapes = shapes_up_to(max_total);
  std::vector<LawReport> reports(shapes.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(shapes.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < shapes.size(); ++i) reports[i] = verify(law, shapes[i], cap);
    return reports;
  }
  // Largest shapes last in the list; hand them out first.
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t k = next.fetch_add(1);
      if (k >= shapes.size()) return;
      std::size_t i = shapes.size() - 1 - k;
      try {
        reports[i] = verify(law, shapes[i], cap);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return reports;
}

LawReport verify_paths(int arity, int max_coord) {
  if (arity < 1 || arity > 16) throw std::invalid_argument("arity must be in 1..16");
  if (max_coord < 0) throw std::invalid_argument("max-coord must be nonnegative");
  const auto start = Clock::now();
  LawReport report;
  report.law = law_name(Law::path_fg);
  report.shape = "arity " + std::to_string(arity) + ", max-coord " + std::to_string(max_coord);
  report.equal = true;
  std::size_t points = 0;
  auto fail = [&](const PathPoint& p, const std::string& what) {
    report.equal = false;
    std::string coords;
    for (int x : p.coords) coords += (coords.empty() ? "" : ",") + std::to_string(x);
    report.detail = what + " at (" + coords + ")";
  };
  // Grid extended by one in every direction so the off-orthant ring is
  // covered too.
  PathPoint p{std::vector<int>(static_cast<std::size_t>(arity), -1)};
  while (report.equal) {
    ++points;
    bool on = std::all_of(p.coords.begin(), p.coords.end(), [](int x) { return x >= 0; });
    std::int64_t f = path_F(p);
    if (f != path_G(p)) fail(p, "F " + std::to_string(f) + " differs from G " + std::to_string(path_G(p)));
    else if (!on && f != 0) fail(p, "nonzero off the orthant");
    std::size_t i = 0;
    while (i < p.coords.size() && ++p.coords[i] > max_coord) p.coords[i++] = -1;
    if (i == p.coords.size()) break;
  }
  if (report.equal && path_F(PathPoint{std::vector<int>(static_cast<std::size_t>(arity), 0)}) != -1)
    fail(PathPoint{std::vector<int>(static_cast<std::size_t>(arity), 0)}, "F at the origin is not -1");
  if (report.equal) report.detail = std::to_string(points) + " points";
  report.millis = millis_since(start);
  return report;
}

ModelReport model_check(Law law, const Shape& shape, std::uint64_t seed, int trials, int max_degree,
                        bool corrupt_sign, int cap) {
  if (!is_expression_law(law))
    throw std::invalid_argument("law '" + law_name(law) + "' has no model interpretation");
  if (shape.total() > cap) throw CapExceeded(shape.total(), cap);
  const auto start = Clock::now();
  CumulantEngine engine;
  ExpansionPair sides = law_sides(engine, law, shape);
  if (corrupt_sign && !sides.rhs.is_zero()) {
    const Term t = sides.rhs.begin()->first;
    sides.rhs -= scale(2 * sides.rhs.coefficient(t), Expr::of(t));
  }
  ModelReport report;
  report.law = law_name(law);
  report.shape = shape.to_string();
  report.seed = seed;
  report.equal = true;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    std::map<Slot, Poly> assignment;
    for (Slot s : shape.slots()) assignment[s] = random_poly(rng, max_degree);
    Poly lhs = evaluate(sides.lhs, assignment);
    Poly rhs = evaluate(sides.rhs, assignment);
    ++report.trials;
    if (lhs != rhs) {
      report.equal = false;
      report.assignment = std::move(assignment);
      report.lhs = std::move(lhs);
      report.rhs = std::move(rhs);
      break;
    }
  }
  report.millis = millis_since(start);
  return report;
}

}  // namespace bicumulant
