#pragma once

#include "bicumulant/colourings.hpp"
#include "bicumulant/cumulants.hpp"
#include "bicumulant/partitions.hpp"

#include <utility>
#include <vector>

namespace bicumulant {

/// Nested upward sequence nu^1 -> ... -> nu^r.
///
/// Each level partitions the blocks of the previous one. A level is stored
/// as the slot partition it induces, so level i+1 is a coarsening of level
/// i; nestedness means every level merges at least two blocks (no level is
/// the all-singletons partition of its predecessor).
class UpwardSequence {
public:
  /// Throws std::invalid_argument when the chain is empty, not upward, or
  /// not nested.
  explicit UpwardSequence(std::vector<SetPartition> levels);

  const std::vector<SetPartition>& levels() const { return levels_; }
  int length() const { return static_cast<int>(levels_.size()); }
  /// Level i+1 (1-based i) as a partition of the block indices of level i.
  IndexPartition grouping(int level) const;

  friend bool operator==(const UpwardSequence&, const UpwardSequence&) = default;
  friend auto operator<=>(const UpwardSequence&, const UpwardSequence&) = default;

private:
  std::vector<SetPartition> levels_;
};

/// Every nested upward sequence on the slots of `shape`, optionally only
/// those whose first level is a mixing partition.
std::vector<UpwardSequence> enumerate_sequences(const Shape& shape, bool require_mixing_start);

/// Applies the block cumulant level by level through nu^r, then takes the
/// *-product of the top-level values.
Expr kappa_of_sequence(CumulantEngine& engine, const UpwardSequence& w);

struct ColouredForest {
  ReducedForest forest;
  Colouring colouring;
  friend bool operator==(const ColouredForest&, const ColouredForest&) = default;
};

/// One vertex per block per level coloured by its level, joined by
/// containment, single-child vertices spliced out.
ColouredForest phi(const UpwardSequence& w);
/// Inverse of phi. Throws std::invalid_argument for the length-0 colouring
/// or a colouring that is not gap-free.
UpwardSequence phi_inverse(const ReducedForest& f, const Colouring& c);

}  // namespace bicumulant
