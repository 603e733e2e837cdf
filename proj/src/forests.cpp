#include "bicumulant/forests.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bicumulant {

Tree Tree::leaf(Slot s) {
  Tree t;
  t.min_slot_ = s;
  return t;
}

Tree Tree::node(std::vector<Tree> children) {
  if (children.size() < 2) throw std::invalid_argument("internal vertex needs >= 2 children");
  std::sort(children.begin(), children.end(),
            [](const Tree& a, const Tree& b) { return a.min_slot_ < b.min_slot_; });
  for (std::size_t i = 1; i < children.size(); ++i)
    if (children[i - 1].min_slot_ == children[i].min_slot_)
      throw std::invalid_argument("subtrees share a leaf");
  Tree t;
  t.is_leaf_ = false;
  t.min_slot_ = children.front().min_slot_;
  t.children_ = std::move(children);
  return t;
}

Slot Tree::slot() const {
  if (!is_leaf_) throw std::logic_error("slot() on an internal vertex");
  return min_slot_;
}

std::vector<Slot> Tree::leaves() const {
  if (is_leaf_) return {min_slot_};
  std::vector<Slot> out;
  for (const Tree& c : children_) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Tree::internal_count() const {
  if (is_leaf_) return 0;
  int n = 1;
  for (const Tree& c : children_) n += c.internal_count();
  return n;
}

int Tree::vertex_count() const {
  int n = 1;
  for (const Tree& c : children_) n += c.vertex_count();
  return n;
}

int Tree::height() const {
  int h = 0;
  for (const Tree& c : children_) h = std::max(h, 1 + c.height());
  return h;
}

bool operator==(const Tree& a, const Tree& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (a.is_leaf_ != b.is_leaf_) return a.is_leaf_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_leaf_) return a.min_slot_ <=> b.min_slot_;
  std::size_t n = std::min(a.children_.size(), b.children_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a.children_[i] <=> b.children_[i]; c != 0) return c;
  return a.children_.size() <=> b.children_.size();
}

ReducedForest::ReducedForest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end(),
            [](const Tree& a, const Tree& b) { return a.min_slot() < b.min_slot(); });
  std::set<Slot> seen;
  for (const Tree& t : trees_)
    for (Slot s : t.leaves())
      if (!seen.insert(s).second) throw std::invalid_argument("trees share leaf " + label(s));
}

std::vector<Slot> ReducedForest::leaves() const {
  std::vector<Slot> out;
  for (const Tree& t : trees_) {
    auto sub = t.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int ReducedForest::internal_count() const {
  int n = 0;
  for (const Tree& t : trees_) n += t.internal_count();
  return n;
}

int ReducedForest::vertex_count() const {
  int n = 0;
  for (const Tree& t : trees_) n += t.vertex_count();
  return n;
}

int ReducedForest::height() const {
  int h = 0;
  for (const Tree& t : trees_) h = std::max(h, t.height());
  return h;
}

namespace {

void flatten(const Tree& t, int parent, std::vector<int> address, std::vector<Vertex>& out) {
  int id = static_cast<int>(out.size());
  out.push_back({parent, {}, std::nullopt, address});
  if (parent >= 0) out[static_cast<std::size_t>(parent)].children.push_back(id);
  if (t.is_leaf()) {
    out[static_cast<std::size_t>(id)].slot = t.slot();
    return;
  }
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    std::vector<int> sub = address;
    sub.push_back(static_cast<int>(i));
    flatten(t.children()[i], id, std::move(sub), out);
  }
}

using Mask = unsigned;

class TreeEnumerator {
public:
  explicit TreeEnumerator(std::vector<Slot> slots) : slots_(std::move(slots)) {
    if (slots_.size() > 20) throw std::length_error("too many leaves to enumerate");
  }

  const std::vector<Tree>& trees(Mask mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::vector<Tree> out;
    std::vector<int> members;
    for (int i = 0; i < static_cast<int>(slots_.size()); ++i)
      if (mask >> i & 1u) members.push_back(i);
    if (members.size() == 1) {
      out.push_back(Tree::leaf(slots_[static_cast<std::size_t>(members[0])]));
    } else {
      for_each_index_partition(static_cast<int>(members.size()), [&](const IndexPartition& p) {
        if (p.size() < 2) return;
        std::vector<Mask> parts;
        for (const auto& block : p) {
          Mask m = 0;
          for (int i : block) m |= 1u << members[static_cast<std::size_t>(i)];
          parts.push_back(m);
        }
        product(parts, [&](std::vector<Tree> kids) { out.push_back(Tree::node(std::move(kids))); });
      });
    }
    return memo_.emplace(mask, std::move(out)).first->second;
  }

  // Calls `emit` once per choice of one tree on each mask.
  template <class Emit>
  void product(const std::vector<Mask>& parts, Emit&& emit) {
    std::vector<const std::vector<Tree>*> options;
    for (Mask m : parts) options.push_back(&trees(m));
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
      std::vector<Tree> chosen;
      chosen.reserve(parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i) chosen.push_back((*options[i])[pick[i]]);
      emit(std::move(chosen));
      std::size_t i = 0;
      while (i < parts.size() && ++pick[i] == options[i]->size()) pick[i++] = 0;
      if (i == parts.size()) return;
    }
  }

  Mask full() const { return (Mask{1} << slots_.size()) - 1; }
  std::size_t size() const { return slots_.size(); }

private:
  std::vector<Slot> slots_;
  std::map<Mask, std::vector<Tree>> memo_;
};

std::vector<Slot> checked_leaf_set(std::span<const Slot> leaves) {
  if (leaves.empty()) throw std::invalid_argument("empty leaf set");
  std::vector<Slot> sorted(leaves.begin(), leaves.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated leaf slot");
  return sorted;
}

bool bottom_vertices_mix(const Tree& t) {
  if (t.is_leaf()) return true;
  bool all_leaves = true;
  for (const Tree& c : t.children()) all_leaves = all_leaves && c.is_leaf();
  if (all_leaves) {
    for (const Tree& c : t.children())
      if (c.slot().group != t.children().front().slot().group) return true;
    return false;
  }
  for (const Tree& c : t.children())
    if (!bottom_vertices_mix(c)) return false;
  return true;
}

void render_tree_text(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out += label(t.slot());
    return;
  }
  out += "k(";
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ", ";
    render_tree_text(t.children()[i], out);
  }
  out += ')';
}

void render_tree_latex(const Tree& t, bool dual, std::string& out) {
  if (t.is_leaf()) {
    out += latex_label(t.slot());
    return;
  }
  out += dual ? "\\kappa^{*}\\left(" : "\\kappa\\left(";
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ", ";
    render_tree_latex(t.children()[i], dual, out);
  }
  out += "\\right)";
}

}  // namespace

std::vector<Vertex> vertices(const ReducedForest& f) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < f.trees().size(); ++i)
    flatten(f.trees()[i], -1, {static_cast<int>(i)}, out);
  return out;
}

std::vector<Tree> enumerate_reduced_trees(std::span<const Slot> leaves) {
  TreeEnumerator e(checked_leaf_set(leaves));
  std::vector<Tree> out = e.trees(e.full());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ReducedForest> enumerate_reduced_forests(std::span<const Slot> leaves) {
  std::vector<Slot> sorted = checked_leaf_set(leaves);
  TreeEnumerator e(sorted);
  std::vector<ReducedForest> out;
  for_each_index_partition(static_cast<int>(sorted.size()), [&](const IndexPartition& p) {
    std::vector<Mask> parts;
    for (const auto& block : p) {
      Mask m = 0;
      for (int i : block) m |= 1u << i;
      parts.push_back(m);
    }
    e.product(parts, [&](std::vector<Tree> trees) { out.emplace_back(std::move(trees)); });
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_mixing_forest(const ReducedForest& f, const Shape&) {
  for (const Tree& t : f.trees())
    if (!bottom_vertices_mix(t)) return false;
  return true;
}

std::optional<int> w_of_forest(const ReducedForest& f, const Shape& shape) {
  if (!is_mixing_forest(f, shape)) return std::nullopt;
  return f.vertex_count() - static_cast<int>(f.leaves().size());
}

std::optional<int> w_inductive(const Tree& t, const Shape& shape) {
  int h = t.height();
  if (h == 0) return 0;
  if (h == 1) {
    for (const Tree& c : t.children())
      if (c.slot().group != t.children().front().slot().group) return 1;
    return std::nullopt;
  }
  int sum = 1;
  for (const Tree& c : t.children()) {
    auto w = w_inductive(c, shape);
    if (!w) return std::nullopt;
    sum += *w;
  }
  return sum;
}

SetPartition nu_of_forest(const ReducedForest& f) {
  std::vector<Block> blocks;
  for (const Tree& t : f.trees()) blocks.push_back(t.leaves());
  return SetPartition(std::move(blocks));
}

bool is_strongly_mixing_forest(const ReducedForest& f, const Shape& shape) {
  return is_mixing_forest(f, shape) && is_strongly_mixing(nu_of_forest(f), shape);
}

ReducedForest root_deletion(const Tree& t) {
  if (t.is_leaf()) throw std::invalid_argument("cannot delete the root of a single-leaf tree");
  return ReducedForest(t.children());
}

Tree root_insertion(const ReducedForest& f) { return Tree::node(f.trees()); }

std::string render_forest_text(const ReducedForest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.trees().size(); ++i) {
    if (i) out += " * ";
    render_tree_text(f.trees()[i], out);
  }
  return out;
}

std::string render_forest_latex(const ReducedForest& f, bool dual) {
  std::string out;
  for (std::size_t i = 0; i < f.trees().size(); ++i) {
    if (i) out += dual ? " \\cdot " : " \\ast ";
    render_tree_latex(f.trees()[i], dual, out);
  }
  return out;
}

}  // namespace bicumulant
