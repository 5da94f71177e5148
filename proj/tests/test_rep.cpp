#include <algorithm>
#include <random>

#include "doctest.h"
#include "orthopress/oracle.hpp"
#include "orthopress/ortho_rep.hpp"
#include "orthopress/sweep.hpp"
#include "test_util.hpp"

using namespace orthopress;
using testutil::cycle_corners_only;
using testutil::cycle_through;
using testutil::unit_square;

TEST_CASE("direction algebra") {
  for (Dir d : kAllDirs) {
    CHECK(reverse(reverse(d)) == d);
    Dir e = d;
    for (int i = 0; i < 4; ++i) e = rotate_cw(e);
    CHECK(e == d);
    CHECK(turn(d, d) == 0);
    CHECK(turn(d, rotate_ccw(d)) == 1);
    CHECK(turn(d, rotate_cw(d)) == -1);
    CHECK(turn(d, reverse(d)) == -2);
  }
}

TEST_CASE("unit rectangle has one internal and one external face") {
  auto sq = unit_square();
  FaceSet fs = validate(sq.rep);
  REQUIRE(fs.faces.size() == 2);
  int internal = 1 - fs.external_face;
  CHECK(fs.faces[internal].rotation() == 4);
  CHECK(fs.faces[fs.external_face].rotation() == -4);
  CHECK(kitty_corners(sq.rep, fs).k() == 0);
  CHECK(is_turn_regular(sq.rep));
}

TEST_CASE("direction conflict is rejected") {
  std::vector<EdgeSpec> edges = {{"a", "b", Dir::E}, {"a", "c", Dir::E}};
  CHECK_THROWS_AS(OrthoRep::build({"a", "b", "c"}, edges), DirectionConflict);
}

TEST_CASE("disconnected input is rejected") {
  std::vector<EdgeSpec> edges = {{"a", "b", Dir::E}, {"c", "d", Dir::E}};
  CHECK_THROWS_AS(OrthoRep::build({"a", "b", "c", "d"}, edges), DisconnectedGraph);
}

TEST_CASE("degree-1 turnaround counts as two reflex corners") {
  // single horizontal edge: one face, rotation must be -4 from two -2 tips
  auto b = testutil::from_coords({{0, 0}, {1, 0}}, {{0, 1}});
  FaceSet fs = validate(b.rep);
  REQUIRE(fs.faces.size() == 1);
  CHECK(fs.faces[0].rotation() == -4);
  CHECK(fs.faces[0].external);
}

TEST_CASE("rot matches independent corner recount on a random polygon") {
  // fixed 12-corner rectilinear polygon
  auto b = cycle_corners_only({{0, 0}, {4, 0}, {4, 2}, {3, 2}, {3, 1}, {2, 1},
                               {2, 3}, {5, 3}, {5, 4}, {1, 4}, {1, 2}, {0, 2}});
  FaceSet fs = validate(b.rep);
  const Face& f = fs.faces[1 - fs.external_face];
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = f.size();
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    VertexIx u = f.corners[i].vertex, v = f.corners[j].vertex;
    // brute-force corner walk from u's first occurrence to v's
    int iu = -1, iv = -1;
    for (int t = 0; t < n; ++t) {
      if (iu < 0 && f.corners[t].vertex == u) iu = t;
      if (iv < 0 && f.corners[t].vertex == v) iv = t;
    }
    int expect = 0;
    for (int t = iu; t != iv; t = (t + 1) % n) expect += f.corners[t].turn;
    if (iu == iv) expect = 0;
    CHECK(rot(f, u, v) == expect);
  }
  // full cycle and empty range conventions
  VertexIx any = f.corners[0].vertex;
  CHECK(rot(f, any, any) == 0);
  int whole = 0;
  for (const Corner& c : f.corners) whole += c.turn;
  CHECK(whole == 4);
}

TEST_CASE("rot complement sums to the face rotation") {
  auto b = cycle_corners_only({{0, 0}, {3, 0}, {3, 1}, {2, 1}, {2, 2}, {1, 2},
                               {1, 1}, {0, 1}});
  FaceSet fs = validate(b.rep);
  for (const Face& f : fs.faces) {
    VertexIx u = f.corners[0].vertex;
    VertexIx v = f.corners[f.size() / 2].vertex;
    if (u == v) continue;
    CHECK(rot(f, u, v) + rot(f, v, u) == f.rotation());
  }
}

TEST_CASE("staircase cycle has an internal kitty pair") {
  // Z-shaped staircase: two steps whose inner reflex corners point at each
  // other across the internal face.
  auto b = cycle_corners_only({{0, 0}, {2, 0}, {2, 1}, {4, 1}, {4, 3}, {2, 3},
                               {2, 2}, {0, 2}},
                              "staircase-z");
  FaceSet fs = validate(b.rep);
  KittyReport kr = kitty_corners(b.rep, fs);
  CHECK(kr.k() >= 2);
  CHECK(!is_turn_regular(b.rep));
  // every reported pair is a reflex pair with rot 2 in one direction
  for (const KittyPair& p : kr.pairs) {
    const Face& f = fs.faces[p.face];
    bool ok = rot(f, p.u, p.v) == 2 || rot(f, p.v, p.u) == 2;
    CHECK(ok);
  }
}

TEST_CASE("area semantics") {
  auto sq = unit_square();
  CHECK(area(sq.drawing) == 1);
  // degenerate box
  Drawing line;
  line.pos = {{0, 0}, {1, 0}};
  CHECK(area(line) == 0);
  // translation invariance
  Drawing shifted = sq.drawing;
  for (auto& p : shifted.pos) { p.x += 7; p.y -= 3; }
  CHECK(area(shifted) == area(sq.drawing));
}

TEST_CASE("drawing validity agrees with the all-pairs oracle") {
  auto b = cycle_through({{0, 0}, {3, 0}, {3, 2}, {0, 2}});
  CHECK(drawing_valid(b.rep, b.drawing));
  CHECK(oracle::pairwise_intersection(b.drawing, b.rep));
  // collapse one side: invalid
  Drawing bad = b.drawing;
  bad.pos[1] = bad.pos[0];
  CHECK(!drawing_valid(b.rep, bad));
  CHECK(!oracle::pairwise_intersection(bad, b.rep));
}

TEST_CASE("sweep planarity agrees with pairwise oracle on perturbed drawings") {
  auto b = cycle_through({{0, 0}, {4, 0}, {4, 3}, {2, 3}, {2, 1}, {0, 1}});
  std::mt19937 rng(42);
  int disagreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Drawing d = b.drawing;
    int hits = 1 + static_cast<int>(rng() % 3);
    for (int h = 0; h < hits; ++h) {
      auto& p = d.pos[rng() % d.pos.size()];
      p.x += static_cast<int>(rng() % 3) - 1;
      p.y += static_cast<int>(rng() % 3) - 1;
    }
    if (sweep_planarity(d, b.rep) != oracle::pairwise_intersection(d, b.rep))
      ++disagreements;
  }
  CHECK(disagreements == 0);
}
