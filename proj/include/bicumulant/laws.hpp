#pragma once

#include "bicumulant/cumulants.hpp"
#include "bicumulant/model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicumulant {

enum class Law {
  moment_cumulant,
  moment_cumulant_dual,
  main,
  ls_analogue,
  ls_classical_star,
  ls_classical_dot,
  grouped,
  dual_main,
  dual_analogue,
  prop_colouring,
  prop_colouring_sign,
  prop_mixing_seq,
  seq_bijection,
  halving,
  degree_bound,
  path_fg,
};

std::string law_name(Law law);
/// Resolves a law name; "ls-classical" and "dual" expand to both variants.
/// Throws std::invalid_argument for an unknown name.
std::vector<Law> parse_laws(const std::string& name);
std::vector<std::string> law_names();
/// Laws whose check compares two expressions (and so can be evaluated in
/// the polynomial model).
bool is_expression_law(Law law);

struct Mismatch {
  Term term;
  Rational lhs;
  Rational rhs;
};

/// First term, in canonical order, whose coefficients differ.
std::optional<Mismatch> find_mismatch(const Expr& lhs, const Expr& rhs);

struct LawReport {
  std::string law;
  std::string shape;
  Expr lhs;
  Expr rhs;
  bool equal = false;
  std::optional<Mismatch> mismatch;
  /// Free-form summary for laws that are not expression comparisons.
  std::string detail;
  double millis = 0;
};

/// Thrown when a shape exceeds the slot cap.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(int total, int cap);
  int total() const { return total_; }
  int cap() const { return cap_; }

private:
  int total_;
  int cap_;
};

constexpr int default_cap = 7;

/// Number of reduced forests on n labelled leaves, as a floating estimate.
double reduced_forest_count(int n);

/// Both sides of an expression law at `shape`.
ExpansionPair law_sides(CumulantEngine& engine, Law law, const Shape& shape);

/// Throws CapExceeded when shape.total() > cap, std::invalid_argument for
/// path-fg (use verify_paths).
LawReport verify(Law law, const Shape& shape, int cap = default_cap);
/// Every shape with total <= max_total, totals ascending, compositions
/// lexicographic. Shapes run on `threads` workers, each with its own engine;
/// the report order does not depend on scheduling.
std::vector<LawReport> verify_sweep(Law law, int max_total, int cap = default_cap,
                                    unsigned threads = 0);
/// F = G on {0..max_coord}^arity, zero just off the orthant, F(0) = -1.
LawReport verify_paths(int arity, int max_coord);

struct ModelReport {
  std::string law;
  std::string shape;
  std::uint64_t seed = 0;
  int trials = 0;
  bool equal = false;
  /// First failing assignment with both evaluated sides.
  std::map<Slot, Poly> assignment;
  Poly lhs;
  Poly rhs;
  double millis = 0;
};

/// Evaluates both sides of an expression law under `trials` random
/// assignments of degree <= max_degree. With `corrupt_sign` the right side
/// has its first term negated, as a negative control.
ModelReport model_check(Law law, const Shape& shape, std::uint64_t seed, int trials = 20,
                        int max_degree = 3, bool corrupt_sign = false, int cap = default_cap);

}  // namespace bicumulant
