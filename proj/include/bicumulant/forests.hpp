#pragma once

#include "bicumulant/partitions.hpp"
#include "bicumulant/slot.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bicumulant {

/// Series-reduced rooted tree with slot-labelled leaves. Children are kept
/// sorted by their minimal leaf slot, which makes structural equality the
/// right notion of identity for leaf-labelled trees.
class Tree {
public:
  static Tree leaf(Slot s);
  /// Throws std::invalid_argument for fewer than two children or shared leaves.
  static Tree node(std::vector<Tree> children);

  bool is_leaf() const { return is_leaf_; }
  Slot slot() const;
  const std::vector<Tree>& children() const { return children_; }
  Slot min_slot() const { return min_slot_; }

  std::vector<Slot> leaves() const;
  int internal_count() const;
  int vertex_count() const;
  /// Edges on the longest root-to-leaf path.
  int height() const;

  friend bool operator==(const Tree& a, const Tree& b);
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

private:
  bool is_leaf_ = true;
  Slot min_slot_{};
  std::vector<Tree> children_;
};

/// Disjoint union of reduced trees, ordered by minimal leaf slot.
class ReducedForest {
public:
  ReducedForest() = default;
  explicit ReducedForest(std::vector<Tree> trees);

  const std::vector<Tree>& trees() const { return trees_; }
  std::size_t tree_count() const { return trees_.size(); }
  bool is_tree() const { return trees_.size() == 1; }
  std::vector<Slot> leaves() const;
  int internal_count() const;
  int vertex_count() const;
  int height() const;

  friend bool operator==(const ReducedForest&, const ReducedForest&) = default;
  friend auto operator<=>(const ReducedForest&, const ReducedForest&) = default;

private:
  std::vector<Tree> trees_;
};

/// One vertex of a forest in canonical preorder (trees in order, each root
/// before its subtrees, subtrees in order).
struct Vertex {
  int parent = -1;
  std::vector<int> children;
  std::optional<Slot> slot;  ///< set on leaves
  /// Root-path index list: tree index, then child indices.
  std::vector<int> address;
};

std::vector<Vertex> vertices(const ReducedForest& f);

/// All reduced trees with leaf set `leaves`, each once, in increasing order.
std::vector<Tree> enumerate_reduced_trees(std::span<const Slot> leaves);
/// All reduced forests with leaf set `leaves`, each once, in increasing order.
std::vector<ReducedForest> enumerate_reduced_forests(std::span<const Slot> leaves);

/// Every internal vertex whose children are all leaves sees >= 2 groups.
bool is_mixing_forest(const ReducedForest& f, const Shape& shape);
/// Internal vertex count when mixing, std::nullopt (infinity) otherwise.
std::optional<int> w_of_forest(const ReducedForest& f, const Shape& shape);
/// Height-recursive value of w for a single tree; std::nullopt is infinity.
std::optional<int> w_inductive(const Tree& t, const Shape& shape);
/// Blocks are the leaf sets of the component trees.
SetPartition nu_of_forest(const ReducedForest& f);
bool is_strongly_mixing_forest(const ReducedForest& f, const Shape& shape);

/// Forest of the root's subtrees. Throws on a single-leaf tree.
ReducedForest root_deletion(const Tree& t);
/// Joins the trees of `f` under a new root. Throws when `f` has < 2 trees.
Tree root_insertion(const ReducedForest& f);

/// Nested κ notation, e.g. "k(k(a1_1, a2_1), a1_2)" joined by " * ".
std::string render_forest_text(const ReducedForest& f);
/// LaTeX κ notation; `dual` switches to κ* and the ·-product between roots.
std::string render_forest_latex(const ReducedForest& f, bool dual = false);

}  // namespace bicumulant
