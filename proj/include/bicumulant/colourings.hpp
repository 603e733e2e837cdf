#pragma once

#include "bicumulant/forests.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace bicumulant {

/// Vertex colouring of a forest, indexed by the canonical preorder of
/// `vertices()`. Leaves carry 0; the length is the largest colour.
struct Colouring {
  std::vector<int> colours;

  int length() const;
  friend bool operator==(const Colouring&, const Colouring&) = default;
  friend auto operator<=>(const Colouring&, const Colouring&) = default;
};

enum class ColouringFilter { gap_free, weakly_mixing };

/// Leaves 0, colours strictly increasing from each leaf toward its root,
/// every colour in {0, ..., length} used.
bool is_gap_free(const ReducedForest& f, const Colouring& c);
/// A 1-coloured vertex with children from two groups, or colour 1 unused.
bool is_weakly_mixing(const ReducedForest& f, const Shape& shape, const Colouring& c);

/// Ordered by length, then lexicographically.
std::vector<Colouring> enumerate_colourings(const ReducedForest& f, const Shape& shape,
                                            ColouringFilter filter);

/// Sum of (-1)^|c| over gap-free weakly-mixing colourings.
std::int64_t colouring_sign_sum(const ReducedForest& f, const Shape& shape);

/// Restriction of `c` to the subtree at root child `child`, with its used
/// colours relabelled order-isomorphically onto {0, ..., l}. `f` must be a
/// single tree of height >= 1; throws std::out_of_range on a bad index.
Colouring project_colouring(const ReducedForest& f, const Colouring& c, std::size_t child);

/// Drops the root's colour; the result colours root_deletion(tree).
Colouring root_deletion_colouring(const ReducedForest& tree, const Colouring& c);
/// Inverse of root_deletion_colouring: the new root takes length + 1.
Colouring root_insertion_colouring(const ReducedForest& forest, const Colouring& c);

/// Keyed by root-path address, for serialization.
std::map<std::vector<int>, int> colouring_by_address(const ReducedForest& f, const Colouring& c);

}  // namespace bicumulant
