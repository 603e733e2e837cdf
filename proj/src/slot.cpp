#include "bicumulant/slot.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bicumulant {

std::string label(Slot s) {
  return "a" + std::to_string(s.group) + "_" + std::to_string(s.position);
}

std::string latex_label(Slot s) {
  return "a_{" + std::to_string(s.position) + "}^{" + std::to_string(s.group) + "}";
}

Shape::Shape(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("shape needs at least one group");
  for (int k : sizes_) {
    if (k < 1) throw std::invalid_argument("group sizes must be positive");
    if (k > 255) throw std::invalid_argument("group size exceeds 255");
  }
  if (sizes_.size() > 255) throw std::invalid_argument("more than 255 groups");
  total_ = std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

std::vector<Slot> Shape::slots() const {
  std::vector<Slot> out;
  out.reserve(static_cast<std::size_t>(total_));
  for (int g = 1; g <= groups(); ++g)
    for (int j = 1; j <= sizes_[g - 1]; ++j)
      out.push_back({static_cast<std::uint16_t>(g), static_cast<std::uint16_t>(j)});
  return out;
}

std::vector<Slot> Shape::group_slots(int g) const {
  std::vector<Slot> out;
  for (int j = 1; j <= sizes_.at(static_cast<std::size_t>(g - 1)); ++j)
    out.push_back({static_cast<std::uint16_t>(g), static_cast<std::uint16_t>(j)});
  return out;
}

bool Shape::contains(Slot s) const {
  return s.group >= 1 && s.group <= groups() && s.position >= 1 &&
         s.position <= sizes_[s.group - 1];
}

Shape Shape::parse(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad shape entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad shape entry '" + item + "'");
    sizes.push_back(k);
  }
  return Shape(std::move(sizes));
}

std::string Shape::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

namespace {

void compositions(int remaining, std::vector<int>& prefix, std::vector<Shape>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = 1; k <= remaining; ++k) {
    prefix.push_back(k);
    compositions(remaining - k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Shape> shapes_up_to(int max_total) {
  std::vector<Shape> out;
  std::vector<int> prefix;
  for (int t = 1; t <= max_total; ++t) compositions(t, prefix, out);
  return out;
}

}  // namespace bicumulant
