#pragma once

#include <cstdint>
#include <vector>

namespace bicumulant {

/// Integer point (x_1, ..., x_r), r >= 1.
struct PathPoint {
  std::vector<int> coords;
  friend auto operator<=>(const PathPoint&, const PathPoint&) = default;
};

/// Signed count of lattice paths from the origin to `x` with steps in
/// {0,1}^r \ {0}, each path weighted by (-1)^(steps + 1). Evaluated through
/// F(x) = -sum_{X != {}} F(x - e_X), F(0) = -1, F = 0 off the orthant,
/// memoized per call.
std::int64_t path_F(const PathPoint& x);
/// Closed form: -prod (-1)^{x_i} on the nonnegative orthant, 0 elsewhere.
std::int64_t path_G(const PathPoint& x);

}  // namespace bicumulant
