#include "oracles.hpp"

#include "bicumulant/paths.hpp"

#include <doctest.h>

using namespace bicumulant;

TEST_CASE("recursion agrees with explicit path walks") {
  for (int r = 1; r <= 3; ++r) {
    std::vector<int> x(static_cast<std::size_t>(r), 0);
    while (true) {
      CHECK(path_F(PathPoint{x}) == oracle::brute_paths(x));
      std::size_t i = 0;
      while (i < x.size() && ++x[i] > 3) x[i++] = 0;
      if (i == x.size()) break;
    }
  }
}

TEST_CASE("closed form on the grid") {
  for (int r = 1; r <= 4; ++r) {
    std::vector<int> x(static_cast<std::size_t>(r), -1);
    while (true) {
      CHECK(path_F(PathPoint{x}) == path_G(PathPoint{x}));
      std::size_t i = 0;
      while (i < x.size() && ++x[i] > 4) x[i++] = -1;
      if (i == x.size()) break;
    }
  }
}

TEST_CASE("boundary values") {
  CHECK(path_F(PathPoint{{0}}) == -1);
  CHECK(path_F(PathPoint{{0, 0, 0, 0}}) == -1);
  CHECK(path_F(PathPoint{{1, 0}}) == 1);
  CHECK(path_F(PathPoint{{1, 1}}) == -1);
  CHECK(path_F(PathPoint{{2, -1, 0}}) == 0);
  CHECK(path_G(PathPoint{{3, 2}}) == 1);
  CHECK(path_G(PathPoint{{0, -2}}) == 0);
  CHECK_THROWS_AS(path_F(PathPoint{{}}), std::invalid_argument);
}
