#include <catch2/catch_amalgamated.hpp>

#include "lrmosaic/exact.hpp"

using namespace lrm;

TEST_CASE("unit vectors close under rotation and sum to zero") {
  ExactPoint sum{};
  for (int k = 0; k < 12; ++k) {
    ExactPoint u = unit_dir(k);
    REQUIRE(dot(u, u) == Quad4{4, 0});  // |u|^2 = 1 in quarter units
    REQUIRE(dir_of_unit(u) == k);
    sum = sum + u;
  }
  REQUIRE(sum == ExactPoint{});
  REQUIRE(unit_dir(0) == ExactPoint{2, 0, 0, 0});
  REQUIRE(unit_dir(3) == ExactPoint{0, 0, 2, 0});
  REQUIRE(rotate30(unit_dir(7), 5) == unit_dir(0));
}

TEST_CASE("exact comparisons distinguish nearby quadratic values") {
  // 2 - sqrt3 vs 0.26: no floats involved, compare 26/50 etc. via sign_quad
  REQUIRE(sign_quad(2, -1) > 0);    // 2 > sqrt3
  REQUIRE(sign_quad(-5, 3) > 0);    // 3 sqrt3 > 5
  REQUIRE(sign_quad(7, -4) > 0);    // 7 > 4 sqrt3 = 6.93
  REQUIRE(sign_quad(5, -3) < 0);    // 3 sqrt3 = 5.196 > 5
  REQUIRE(sign_quad(0, 0) == 0);
  REQUIRE(cmp_point(ExactPoint{1, 0, 0, 0}, ExactPoint{0, 1, 0, 0}) < 0);  // 1/2 < sqrt3/2
}

TEST_CASE("polygon areas of the three tile shapes") {
  // unit square rotated 30 degrees still has area 1
  ExactPoint o{}, u = unit_dir(1), v = unit_dir(4);
  ExactArea sq = polygon_area({o, u, u + v, v});
  REQUIRE(sq == ExactArea{4, 0});  // (4+0 sqrt3)/4 = 1

  ExactArea tri = polygon_area({o, unit_dir(0), unit_dir(2)});
  REQUIRE(tri == ExactArea{0, 1});  // sqrt3/4

  // 30/150 rhombus: area sin(30) = 1/2
  ExactArea rh = polygon_area({o, unit_dir(0), unit_dir(0) + unit_dir(5), unit_dir(5)});
  REQUIRE(rh == ExactArea{2, 0});
}

TEST_CASE("rotation about segment midpoints stays exact") {
  ExactPoint p = unit_dir(1) + unit_dir(2);
  ExactPoint q = p + unit_dir(5);
  ExactPoint mid2 = doubled(p) + (q - p);  // 2*midpoint
  REQUIRE(rotate180_about_doubled(p, mid2) == q);
  REQUIRE(rotate180_about_doubled(q, mid2) == p);
}
