#include "doctest.h"
#include "orthopress/oracle.hpp"
#include "test_util.hpp"

using namespace orthopress;
using testutil::cycle_corners_only;
using testutil::cycle_through;
using testutil::unit_square;

TEST_CASE("oracle compacts the unit rectangle to area 1") {
  auto sq = unit_square();
  Drawing d = oracle::brute_force_min_area(sq.rep);
  CHECK(area(d) == 1);
  CHECK(drawing_valid(sq.rep, d));
}

TEST_CASE("oracle keeps forced unit spacing of flat boundary vertices") {
  auto b = cycle_through({{0, 0}, {5, 0}, {5, 3}, {0, 3}});
  Drawing d = oracle::brute_force_min_area(b.rep);
  CHECK(drawing_valid(b.rep, d));
  // six distinct x on the bottom row and four distinct y on the sides
  CHECK(area(d) == 15);
}

TEST_CASE("oracle respects forced side lengths") {
  // L-shape with explicit corners only; min area is 2x2
  auto b = cycle_corners_only({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  Drawing d = oracle::brute_force_min_area(b.rep);
  CHECK(area(d) == 4);
  CHECK(drawing_valid(b.rep, d));
}

TEST_CASE("oracle determinism") {
  auto b = cycle_corners_only({{0, 0}, {2, 0}, {2, 1}, {4, 1}, {4, 3}, {2, 3},
                               {2, 2}, {0, 2}});
  Drawing d1 = oracle::brute_force_min_area(b.rep);
  Drawing d2 = oracle::brute_force_min_area(b.rep);
  REQUIRE(d1.pos.size() == d2.pos.size());
  for (size_t i = 0; i < d1.pos.size(); ++i) CHECK(d1.pos[i] == d2.pos[i]);
}

TEST_CASE("weighted oracle honors weights and reduces to unweighted at 1") {
  auto sq = unit_square();
  EdgeWeights w(sq.rep.edge_count(), 1);
  Drawing d1 = oracle::brute_force_min_area(sq.rep, w);
  CHECK(area(d1) == area(oracle::brute_force_min_area(sq.rep)));
  // bottom edge at least 3 long
  int e = sq.rep.edge_index(sq.rep.index_of("v000"), sq.rep.index_of("v001"));
  REQUIRE(e >= 0);
  w[e] = 3;
  Drawing d3 = oracle::brute_force_min_area(sq.rep, w);
  CHECK(area(d3) == 3);
  CHECK(drawing_valid(sq.rep, d3, w));
}

TEST_CASE("min width at fixed height") {
  // vertical path of three edges: width 0 at height 3
  auto path = testutil::from_coords({{0, 0}, {0, 1}, {0, 2}, {0, 3}},
                                    {{0, 1}, {1, 2}, {2, 3}});
  auto w = oracle::brute_force_min_width_at_height(path.rep, 3);
  REQUIRE(w.has_value());
  CHECK(*w == 0);
  CHECK(!oracle::brute_force_min_width_at_height(path.rep, 2).has_value());

  auto sq = unit_square();
  auto w1 = oracle::brute_force_min_width_at_height(sq.rep, 1);
  REQUIRE(w1.has_value());
  CHECK(*w1 == 1);
  CHECK(!oracle::brute_force_min_width_at_height(sq.rep, 0).has_value());
}

TEST_CASE("pairwise oracle spots the classic violations") {
  // 5-vertex hook path drawn planar, then redrawn with defects
  auto b = testutil::from_coords({{0, 0}, {4, 0}, {4, 2}, {1, 2}, {1, 1}},
                                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(oracle::pairwise_intersection(b.drawing, b.rep));

  Drawing cross = b.drawing;
  cross.pos[4] = {1, -1};  // last segment now pierces the bottom edge
  CHECK(!oracle::pairwise_intersection(cross, b.rep));

  Drawing touch = b.drawing;
  touch.pos[4] = {1, 0};  // vertex lands inside the bottom edge
  CHECK(!oracle::pairwise_intersection(touch, b.rep));

  // two parallel unit segments one row apart, joined by a side edge
  auto par = testutil::from_coords({{0, 0}, {1, 0}, {0, 1}, {1, 1}},
                                   {{0, 1}, {2, 3}, {0, 2}});
  CHECK(oracle::pairwise_intersection(par.drawing, par.rep));
}
