#include "bicumulant/paths.hpp"

#include <map>
#include <stdexcept>

namespace bicumulant {

namespace {

class PathMemo {
public:
  std::int64_t value(const std::vector<int>& x) {
    bool origin = true;
    for (int v : x) {
      if (v < 0) return 0;
      origin = origin && v == 0;
    }
    if (origin) return -1;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    const std::size_t r = x.size();
    std::int64_t total = 0;
    std::vector<int> y(r);
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
      for (std::size_t i = 0; i < r; ++i) y[i] = x[i] - static_cast<int>(mask >> i & 1u);
      total -= value(y);
    }
    memo_.emplace(x, total);
    return total;
  }

private:
  std::map<std::vector<int>, std::int64_t> memo_;
};

void check_arity(const PathPoint& x) {
  if (x.coords.empty()) throw std::invalid_argument("path point needs arity >= 1");
  if (x.coords.size() > 16) throw std::invalid_argument("path point arity above 16");
}

}  // namespace

std::int64_t path_F(const PathPoint& x) {
  check_arity(x);
  PathMemo memo;
  return memo.value(x.coords);
}

std::int64_t path_G(const PathPoint& x) {
  check_arity(x);
  int parity = 0;
  for (int v : x.coords) {
    if (v < 0) return 0;
    parity ^= v & 1;
  }
  return parity ? 1 : -1;
}

}  // namespace bicumulant
