#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bicumulant {

/// One generator a_j^i: `group` is i, `position` is j. Both are 1-based.
struct Slot {
  std::uint16_t group = 0;
  std::uint16_t position = 0;

  friend constexpr auto operator<=>(const Slot&, const Slot&) = default;
};

/// Text label "a<group>_<position>".
std::string label(Slot s);
/// LaTeX label "a_<position>^<group>".
std::string latex_label(Slot s);

/// Group sizes (k_1, ..., k_n) of the multisets A_1, ..., A_n.
class Shape {
public:
  explicit Shape(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int groups() const { return static_cast<int>(sizes_.size()); }
  int total() const { return total_; }
  /// All slots, in lexicographic (group, position) order.
  std::vector<Slot> slots() const;
  /// Slots of group `g` (1-based).
  std::vector<Slot> group_slots(int g) const;
  bool contains(Slot s) const;

  /// Parses "k1,k2,...".
  static Shape parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

private:
  std::vector<int> sizes_;
  int total_ = 0;
};

/// Compositions of every total in [1, max_total]: totals ascending,
/// compositions of one total in lexicographic order.
std::vector<Shape> shapes_up_to(int max_total);

}  // namespace bicumulant
