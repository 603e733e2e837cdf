#include "bicumulant/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicumulant {

UpwardSequence::UpwardSequence(std::vector<SetPartition> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw std::invalid_argument("sequence needs at least one level");
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    if (levels_[i].ground() != levels_[0].ground())
      throw std::invalid_argument("levels cover different ground sets");
    if (!levels_[i - 1].refines(levels_[i]))
      throw std::invalid_argument("level does not partition the previous blocks");
    if (levels_[i].size() == levels_[i - 1].size())
      throw std::invalid_argument("identity level breaks nestedness");
  }
}

IndexPartition UpwardSequence::grouping(int level) const {
  const SetPartition& lower = levels_.at(static_cast<std::size_t>(level - 1));
  const SetPartition& upper = levels_.at(static_cast<std::size_t>(level));
  IndexPartition out(upper.size());
  for (std::size_t b = 0; b < lower.size(); ++b)
    out[static_cast<std::size_t>(upper.block_of(lower.blocks()[b].front()))].push_back(
        static_cast<int>(b));
  return out;
}

namespace {

void extend(std::vector<SetPartition>& chain, std::vector<UpwardSequence>& out) {
  out.emplace_back(chain);
  const SetPartition top = chain.back();
  for (const IndexPartition& g : partitions_of_blocks(top)) {
    if (g.size() == top.size()) continue;  // identity
    chain.push_back(coarsen(top, g));
    extend(chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<UpwardSequence> enumerate_sequences(const Shape& shape, bool require_mixing_start) {
  std::vector<UpwardSequence> out;
  auto slots = shape.slots();
  for (const SetPartition& first : enumerate_set_partitions(slots)) {
    if (require_mixing_start && !is_mixing_partition(first, shape)) continue;
    std::vector<SetPartition> chain{first};
    extend(chain, out);
  }
  return out;
}

Expr kappa_of_sequence(CumulantEngine& engine, const UpwardSequence& w) {
  const SetPartition& first = w.levels().front();
  std::vector<Expr> values;
  for (const Block& b : first.blocks()) {
    std::vector<Term> gens;
    for (Slot s : b) gens.push_back(Term::leaf(s));
    values.push_back(engine.of_terms(CumulantKind::kappa, std::move(gens)));
  }
  for (int level = 1; level < w.length(); ++level) {
    std::vector<Expr> next;
    for (const auto& group : w.grouping(level)) {
      std::vector<Expr> args;
      for (int i : group) args.push_back(values[static_cast<std::size_t>(i)]);
      next.push_back(engine.kappa(args));
    }
    values = std::move(next);
  }
  return multiply_all(Op::star, values);
}

namespace {

struct Built {
  Tree tree;
  // Preorder colours of `tree`.
  std::vector<int> colours;
};

Built assemble(std::vector<Built> kids, int colour) {
  std::sort(kids.begin(), kids.end(),
            [](const Built& a, const Built& b) { return a.tree.min_slot() < b.tree.min_slot(); });
  std::vector<Tree> trees;
  std::vector<int> colours{colour};
  for (Built& k : kids) {
    trees.push_back(std::move(k.tree));
    colours.insert(colours.end(), k.colours.begin(), k.colours.end());
  }
  return {Tree::node(std::move(trees)), std::move(colours)};
}

}  // namespace

ColouredForest phi(const UpwardSequence& w) {
  // current[b]: the built subtree standing for block b of the current level.
  std::vector<Built> current;
  for (const Block& b : w.levels().front().blocks()) {
    if (b.size() == 1) {
      current.push_back({Tree::leaf(b.front()), {0}});
      continue;
    }
    std::vector<Built> leaves;
    for (Slot s : b) leaves.push_back({Tree::leaf(s), {0}});
    current.push_back(assemble(std::move(leaves), 1));
  }
  for (int level = 1; level < w.length(); ++level) {
    std::vector<Built> next;
    for (const auto& group : w.grouping(level)) {
      if (group.size() == 1) {
        // A single-child vertex is spliced out.
        next.push_back(std::move(current[static_cast<std::size_t>(group.front())]));
        continue;
      }
      std::vector<Built> kids;
      for (int i : group) kids.push_back(std::move(current[static_cast<std::size_t>(i)]));
      next.push_back(assemble(std::move(kids), level + 1));
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(),
            [](const Built& a, const Built& b) { return a.tree.min_slot() < b.tree.min_slot(); });
  ColouredForest out;
  std::vector<Tree> trees;
  for (Built& b : current) {
    trees.push_back(std::move(b.tree));
    out.colouring.colours.insert(out.colouring.colours.end(), b.colours.begin(), b.colours.end());
  }
  out.forest = ReducedForest(std::move(trees));
  return out;
}

UpwardSequence phi_inverse(const ReducedForest& f, const Colouring& c) {
  if (!is_gap_free(f, c)) throw std::invalid_argument("colouring is not gap-free");
  const int r = c.length();
  if (r == 0) throw std::invalid_argument("the length-0 colouring has no sequence");
  auto vs = vertices(f);
  auto colour = [&](int v) { return c.colours[static_cast<std::size_t>(v)]; };

  // Leaf sets below every vertex.
  std::vector<Block> below(vs.size());
  for (int v = static_cast<int>(vs.size()) - 1; v >= 0; --v) {
    const Vertex& vx = vs[static_cast<std::size_t>(v)];
    if (vx.slot) below[static_cast<std::size_t>(v)].push_back(*vx.slot);
    for (int ch : vx.children) {
      const Block& sub = below[static_cast<std::size_t>(ch)];
      below[static_cast<std::size_t>(v)].insert(below[static_cast<std::size_t>(v)].end(),
                                                sub.begin(), sub.end());
    }
  }
  // Level i consists of the vertices u with colour(u) <= i and either u a
  // root or colour(parent(u)) > i.
  std::vector<SetPartition> levels;
  for (int i = 1; i <= r; ++i) {
    std::vector<Block> blocks;
    for (std::size_t v = 0; v < vs.size(); ++v) {
      int p = vs[v].parent;
      if (colour(static_cast<int>(v)) <= i && (p < 0 || colour(p) > i)) blocks.push_back(below[v]);
    }
    levels.emplace_back(std::move(blocks));
  }
  return UpwardSequence(std::move(levels));
}

}  // namespace bicumulant
