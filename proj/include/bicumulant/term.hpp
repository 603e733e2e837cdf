#pragma once

#include "bicumulant/slot.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bicumulant {

/// The two commutative multiplications. STAR sorts before DOT.
enum class Op : std::uint8_t { star = 1, dot = 2 };

constexpr Op other(Op op) { return op == Op::star ? Op::dot : Op::star; }
char op_symbol(Op op);

/// Canonical element of the free two-product commutative (non-unital)
/// monoid over slots.
///
/// A term is stored as a self-delimiting byte code:
///   leaf:  [0, group, position]
///   node:  [op, child count, child codes...]
/// Children of a node are sorted by code, and since the code is prefix-free
/// the byte-lexicographic order on codes is exactly the canonical order
/// (Leaf < Node; leaves by slot; nodes by op, arity, then children).
/// Invariants: every node has >= 2 children and no child shares the op of
/// its parent.
class Term {
public:
  static Term leaf(Slot s);
  /// Canonical product of two terms: flattens operands carrying `op` and
  /// merges their factor lists.
  static Term product(Op op, const Term& a, const Term& b);
  static Term product(Op op, std::span<const Term> factors);

  bool is_leaf() const { return code_[0] == 0; }
  Slot slot() const;
  Op op() const;
  std::size_t arity() const;
  std::vector<Term> children() const;
  std::vector<Slot> slots() const;
  std::size_t leaf_count() const;

  const std::string& code() const { return code_; }
  /// Rebuilds a term from a code, checking every canonical invariant.
  static Term from_code(std::string code);
  /// True when `code` encodes a canonical term.
  static bool is_canonical_code(std::string_view code);

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    return a.code_.compare(b.code_) <=> 0;
  }

private:
  explicit Term(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

/// Unnormalized term tree as a user or parser builds it.
struct RawTerm {
  bool is_leaf = true;
  Slot slot{};
  Op op = Op::star;
  std::vector<RawTerm> children;

  static RawTerm of(Slot s);
  static RawTerm node(Op op, std::vector<RawTerm> children);
};

/// Flattens same-op nesting, collapses single-child nodes and sorts
/// children. Throws std::invalid_argument on an empty node.
Term normalize(const RawTerm& raw);

std::string render_text(const Term& t);
std::string render_latex(const Term& t);

}  // namespace bicumulant

template <>
struct std::hash<bicumulant::Term> {
  std::size_t operator()(const bicumulant::Term& t) const noexcept {
    return std::hash<std::string>{}(t.code());
  }
};
