#pragma once

#include "bicumulant/slot.hpp"

#include <compare>
#include <functional>
#include <span>
#include <vector>

namespace bicumulant {

/// Partition of {0, ..., n-1}: blocks sorted by minimum, entries ascending.
using IndexPartition = std::vector<std::vector<int>>;

/// Visits every partition of {0, ..., n-1} exactly once, generated from
/// restricted growth strings. n = 0 yields the empty partition once.
void for_each_index_partition(int n, const std::function<void(const IndexPartition&)>& visit);
std::vector<IndexPartition> index_partitions(int n);

using Block = std::vector<Slot>;

/// Set partition of a slot set, held in canonical form (slots ascending
/// inside each block, blocks ordered by their minimal slot).
class SetPartition {
public:
  SetPartition() = default;
  /// Canonicalizes; throws std::invalid_argument on empty or overlapping blocks.
  explicit SetPartition(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  std::vector<Slot> ground() const;
  /// Index of the block holding `s`, or -1.
  int block_of(Slot s) const;
  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const SetPartition& coarser) const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
  std::vector<Block> blocks_;
};

/// Every set partition of `ground`, each once, in restricted-growth order.
/// Throws std::invalid_argument on an empty ground set.
/// In increasing order.
std::vector<SetPartition> enumerate_set_partitions(std::span<const Slot> ground);

/// Partitions of the block set of `nu` (blocks referenced by index).
std::vector<IndexPartition> partitions_of_blocks(const SetPartition& nu);
/// Merges the blocks of `nu` along `grouping`.
SetPartition coarsen(const SetPartition& nu, const IndexPartition& grouping);

/// Two blocks, each group of `shape` entirely inside one of them.
bool is_row_partition(const SetPartition& lambda, const Shape& shape);
/// Some block meets at least two groups.
bool is_mixing_partition(const SetPartition& nu, const Shape& shape);
/// No row partition absorbs every block of `nu`. Decided through
/// connectivity of the group graph whose edges are the blocks of `nu`.
bool is_strongly_mixing(const SetPartition& nu, const Shape& shape);
/// Same predicate by scanning all row partitions (2^(n-1) - 1 of them).
bool is_strongly_mixing_literal(const SetPartition& nu, const Shape& shape);
/// All row partitions of `shape`, built from bipartitions of the groups.
std::vector<SetPartition> row_partitions(const Shape& shape);

}  // namespace bicumulant
