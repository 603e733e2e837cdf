#include "bicumulant/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bicumulant {

void for_each_index_partition(int n, const std::function<void(const IndexPartition&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (n == 0) {
    visit({});
    return;
  }
  // rgs[i] = block of element i; rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  IndexPartition blocks;
  while (true) {
    int block_count = prefix_max.back() + 1;
    blocks.assign(static_cast<std::size_t>(block_count), {});
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(rgs[i])].push_back(i);
    visit(blocks);

    int i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<IndexPartition> index_partitions(int n) {
  std::vector<IndexPartition> out;
  for_each_index_partition(n, [&](const IndexPartition& p) { out.push_back(p); });
  return out;
}

SetPartition::SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::set<Slot> seen;
  for (Block& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    for (Slot s : b)
      if (!seen.insert(s).second) throw std::invalid_argument("blocks overlap at " + label(s));
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& x, const Block& y) { return x.front() < y.front(); });
}

std::vector<Slot> SetPartition::ground() const {
  std::vector<Slot> out;
  for (const Block& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

int SetPartition::block_of(Slot s) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), s)) return static_cast<int>(i);
  return -1;
}

bool SetPartition::refines(const SetPartition& coarser) const {
  for (const Block& b : blocks_) {
    int target = coarser.block_of(b.front());
    if (target < 0) return false;
    for (Slot s : b)
      if (coarser.block_of(s) != target) return false;
  }
  return true;
}

std::vector<SetPartition> enumerate_set_partitions(std::span<const Slot> ground) {
  if (ground.empty()) throw std::invalid_argument("empty ground set");
  std::vector<Slot> sorted(ground.begin(), ground.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<SetPartition> out;
  for_each_index_partition(static_cast<int>(sorted.size()), [&](const IndexPartition& p) {
    std::vector<Block> blocks;
    blocks.reserve(p.size());
    for (const auto& idx : p) {
      Block b;
      for (int i : idx) b.push_back(sorted[static_cast<std::size_t>(i)]);
      blocks.push_back(std::move(b));
    }
    out.emplace_back(std::move(blocks));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexPartition> partitions_of_blocks(const SetPartition& nu) {
  return index_partitions(static_cast<int>(nu.size()));
}

SetPartition coarsen(const SetPartition& nu, const IndexPartition& grouping) {
  std::vector<Block> merged;
  for (const auto& group : grouping) {
    Block b;
    for (int i : group) {
      const Block& part = nu.blocks().at(static_cast<std::size_t>(i));
      b.insert(b.end(), part.begin(), part.end());
    }
    merged.push_back(std::move(b));
  }
  return SetPartition(std::move(merged));
}

bool is_row_partition(const SetPartition& lambda, const Shape& shape) {
  if (lambda.size() != 2) return false;
  for (int g = 1; g <= shape.groups(); ++g) {
    std::vector<Slot> members = shape.group_slots(g);
    int side = lambda.block_of(members.front());
    for (Slot s : members)
      if (lambda.block_of(s) != side) return false;
  }
  return true;
}

bool is_mixing_partition(const SetPartition& nu, const Shape&) {
  for (const Block& b : nu.blocks())
    for (Slot s : b)
      if (s.group != b.front().group) return true;
  return false;
}

bool is_strongly_mixing(const SetPartition& nu, const Shape& shape) {
  int n = shape.groups();
  if (n == 1) return true;
  // Union-find over groups; each block glues the groups it meets.
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const Block& b : nu.blocks()) {
    int root = find(b.front().group);
    for (Slot s : b) {
      int r = find(s.group);
      if (r != root) {
        parent[r] = root;
        --components;
      }
    }
  }
  return components == 1;
}

std::vector<SetPartition> row_partitions(const Shape& shape) {
  int n = shape.groups();
  std::vector<SetPartition> out;
  if (n < 2) return out;
  // Group 1 always sits in the first part; the mask picks the other groups
  // joining it. The all-ones mask would leave the second part empty.
  unsigned limit = 1u << (n - 1);
  for (unsigned mask = 0; mask + 1 < limit; ++mask) {
    Block first = shape.group_slots(1), second;
    for (int g = 2; g <= n; ++g) {
      std::vector<Slot> members = shape.group_slots(g);
      Block& target = (mask >> (g - 2)) & 1u ? first : second;
      target.insert(target.end(), members.begin(), members.end());
    }
    out.emplace_back(std::vector<Block>{std::move(first), std::move(second)});
  }
  return out;
}

bool is_strongly_mixing_literal(const SetPartition& nu, const Shape& shape) {
  for (const SetPartition& lambda : row_partitions(shape))
    if (nu.refines(lambda)) return false;
  return true;
}

}  // namespace bicumulant
