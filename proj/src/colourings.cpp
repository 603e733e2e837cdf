#include "bicumulant/colourings.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bicumulant {

int Colouring::length() const {
  return colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end());
}

bool is_gap_free(const ReducedForest& f, const Colouring& c) {
  auto vs = vertices(f);
  if (c.colours.size() != vs.size()) return false;
  int r = c.length();
  std::vector<bool> used(static_cast<std::size_t>(r + 1), false);
  for (std::size_t v = 0; v < vs.size(); ++v) {
    int col = c.colours[v];
    if (col < 0) return false;
    if (vs[v].slot && col != 0) return false;
    if (!vs[v].slot && col == 0) return false;
    if (vs[v].parent >= 0 && c.colours[static_cast<std::size_t>(vs[v].parent)] <= col) return false;
    used[static_cast<std::size_t>(col)] = true;
  }
  return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

bool is_weakly_mixing(const ReducedForest& f, const Shape&, const Colouring& c) {
  auto vs = vertices(f);
  bool colour_one_used = false;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (c.colours[v] != 1) continue;
    colour_one_used = true;
    std::set<int> groups;
    for (int ch : vs[v].children) {
      const Vertex& child = vs[static_cast<std::size_t>(ch)];
      if (child.slot) groups.insert(child.slot->group);
    }
    if (groups.size() >= 2) return true;
  }
  return !colour_one_used;
}

std::vector<Colouring> enumerate_colourings(const ReducedForest& f, const Shape& shape,
                                            ColouringFilter filter) {
  auto vs = vertices(f);
  std::vector<int> internal;  // reverse preorder: children before parents
  for (int v = static_cast<int>(vs.size()) - 1; v >= 0; --v)
    if (!vs[static_cast<std::size_t>(v)].slot) internal.push_back(v);

  std::vector<Colouring> out;
  const int m = static_cast<int>(internal.size());
  const int min_length = m == 0 ? 0 : f.height();
  Colouring current{std::vector<int>(vs.size(), 0)};

  for (int r = min_length; r <= m; ++r) {
    std::vector<int> uses(static_cast<std::size_t>(r + 1), 0);
    uses[0] = static_cast<int>(vs.size()) - m;
    auto recurse = [&](auto&& self, std::size_t k) -> void {
      if (k == internal.size()) {
        for (int u : uses)
          if (u == 0) return;
        if (filter == ColouringFilter::weakly_mixing && !is_weakly_mixing(f, shape, current)) return;
        out.push_back(current);
        return;
      }
      int v = internal[k];
      int lo = 1;
      for (int ch : vs[static_cast<std::size_t>(v)].children)
        lo = std::max(lo, current.colours[static_cast<std::size_t>(ch)] + 1);
      for (int col = lo; col <= r; ++col) {
        current.colours[static_cast<std::size_t>(v)] = col;
        ++uses[static_cast<std::size_t>(col)];
        self(self, k + 1);
        --uses[static_cast<std::size_t>(col)];
      }
      current.colours[static_cast<std::size_t>(v)] = 0;
    };
    recurse(recurse, 0);
  }
  std::sort(out.begin(), out.end(), [](const Colouring& a, const Colouring& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.colours < b.colours;
  });
  return out;
}

std::int64_t colouring_sign_sum(const ReducedForest& f, const Shape& shape) {
  std::int64_t sum = 0;
  for (const Colouring& c : enumerate_colourings(f, shape, ColouringFilter::weakly_mixing))
    sum += c.length() % 2 == 0 ? 1 : -1;
  return sum;
}

Colouring project_colouring(const ReducedForest& f, const Colouring& c, std::size_t child) {
  if (!f.is_tree() || f.trees().front().is_leaf())
    throw std::invalid_argument("projection needs a single tree of height >= 1");
  auto vs = vertices(f);
  if (c.colours.size() != vs.size()) throw std::invalid_argument("colouring size mismatch");
  const auto& kids = vs.front().children;
  if (child >= kids.size()) throw std::out_of_range("no such root child");
  // Preorder lays each subtree out contiguously.
  std::size_t begin = static_cast<std::size_t>(kids[child]);
  std::size_t end = child + 1 < kids.size() ? static_cast<std::size_t>(kids[child + 1]) : vs.size();
  std::vector<int> sub(c.colours.begin() + static_cast<std::ptrdiff_t>(begin),
                       c.colours.begin() + static_cast<std::ptrdiff_t>(end));
  std::vector<int> used(sub);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (int& col : sub)
    col = static_cast<int>(std::lower_bound(used.begin(), used.end(), col) - used.begin());
  return {std::move(sub)};
}

Colouring root_deletion_colouring(const ReducedForest& tree, const Colouring& c) {
  if (!tree.is_tree() || tree.trees().front().is_leaf())
    throw std::invalid_argument("root deletion needs a tree with >= 2 leaves");
  if (c.colours.size() != static_cast<std::size_t>(tree.vertex_count()))
    throw std::invalid_argument("colouring size mismatch");
  return {std::vector<int>(c.colours.begin() + 1, c.colours.end())};
}

Colouring root_insertion_colouring(const ReducedForest& forest, const Colouring& c) {
  if (forest.tree_count() < 2) throw std::invalid_argument("root insertion needs >= 2 trees");
  std::vector<int> out{c.length() + 1};
  out.insert(out.end(), c.colours.begin(), c.colours.end());
  return {std::move(out)};
}

std::map<std::vector<int>, int> colouring_by_address(const ReducedForest& f, const Colouring& c) {
  auto vs = vertices(f);
  std::map<std::vector<int>, int> out;
  for (std::size_t v = 0; v < vs.size(); ++v) out[vs[v].address] = c.colours.at(v);
  return out;
}

}  // namespace bicumulant
