#include <set>

#include "doctest.h"
#include "orthopress/fpt.hpp"
#include "orthopress/generate.hpp"
#include "orthopress/oracle.hpp"
#include "test_util.hpp"

using namespace orthopress;
using testutil::cycle_corners_only;

namespace {
// exhaustive non-crossing maximal chord sets, for cross-checking
void all_noncrossing(int k, const std::vector<std::pair<int, int>>& diagonals,
                     std::vector<std::pair<int, int>>& acc, size_t next,
                     std::set<std::vector<std::pair<int, int>>>& out) {
  if (static_cast<int>(acc.size()) == k - 3) {
    out.insert(acc);
    return;
  }
  for (size_t i = next; i < diagonals.size(); ++i) {
    auto [a, b] = diagonals[i];
    bool crosses = false;
    for (auto [c, d] : acc)
      if ((c < a && a < d && d < b) || (a < c && c < b && b < d)) crosses = true;
    if (crosses) continue;
    acc.push_back({a, b});
    all_noncrossing(k, diagonals, acc, i + 1, out);
    acc.pop_back();
  }
}
}  // namespace

TEST_CASE("triangulation counts follow the Catalan numbers") {
  const int expect[] = {1, 1, 2, 5, 14};
  for (int k = 2; k <= 6; ++k) {
    auto tris = enumerate_triangulations(k);
    CHECK(static_cast<int>(tris.size()) == expect[k - 2]);
    for (auto& t : tris)
      CHECK(static_cast<int>(t.size()) == std::max(0, k - 3));
    // distinct and matching the exhaustive non-crossing oracle
    std::set<std::vector<std::pair<int, int>>> got(tris.begin(), tris.end());
    CHECK(got.size() == tris.size());
    if (k >= 4) {
      std::vector<std::pair<int, int>> diagonals;
      for (int a = 0; a < k; ++a)
        for (int b = a + 2; b < k; ++b)
          if (!(a == 0 && b == k - 1)) diagonals.push_back({a, b});
      std::set<std::vector<std::pair<int, int>>> want;
      std::vector<std::pair<int, int>> acc;
      all_noncrossing(k, diagonals, acc, 0, want);
      CHECK(got == want);
    }
  }
}

TEST_CASE("per-face configuration counts") {
  CHECK(face_axis_config_count(2) == 3);
  CHECK(face_axis_config_count(3) == 27);
  CHECK(face_axis_config_count(4) == 2 * 243);
  CHECK(face_axis_config_count(5) == 5 * 3 * 3 * 3 * 3 * 3 * 3 * 3);
}

TEST_CASE("fpt equals turn-regular compactor on kitty-free input") {
  auto ell = cycle_corners_only({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  FptResult r = compact_fpt_detailed(ell.rep);
  CHECK(r.area == 4);
  CHECK(r.candidates == 1);
}

TEST_CASE("fpt compacts the Z staircase to the oracle minimum") {
  auto z = cycle_corners_only({{0, 0}, {2, 0}, {2, 1}, {4, 1}, {4, 3}, {2, 3},
                               {2, 2}, {0, 2}});
  FptOptions opt;
  opt.collect = true;
  opt.cutoff = false;
  FptResult r = compact_fpt_detailed(z.rep, opt);
  Drawing o = oracle::brute_force_min_area(z.rep);
  CHECK(r.area == area(o));
  CHECK(drawing_valid(z.rep, r.drawing));
  // one kitty pair per face; stream covers 3 relations per axis slot
  CHECK(r.x_configs >= 3);
  CHECK(r.y_configs >= 3);
  // both planar and non-planar candidates, and more than one distinct area
  std::set<int64_t> areas;
  bool any_nonplanar = false;
  for (auto& c : r.log) {
    if (c.planar) areas.insert(c.area);
    else any_nonplanar = true;
  }
  CHECK(areas.size() >= 2);
  CHECK(any_nonplanar);
}

TEST_CASE("single-pair configuration stream has nine per-axis entries") {
  // Z staircase: the internal pair yields 3 configs per axis per face
  auto z = cycle_corners_only({{0, 0}, {2, 0}, {2, 1}, {4, 1}, {4, 3}, {2, 3},
                               {2, 2}, {0, 2}});
  KittyReport kr = kitty_corners(z.rep);
  FaceSet fs = validate(z.rep);
  auto polys = kitty_polygons(z.rep, fs, kr);
  int64_t per_axis = 1;
  for (auto& p : polys) per_axis *= face_axis_config_count(p.k());
  FptOptions opt;
  opt.collect = true;
  opt.cutoff = false;
  FptResult r = compact_fpt_detailed(z.rep, opt);
  CHECK(r.x_configs == per_axis);
  CHECK(r.y_configs == per_axis);
}

TEST_CASE("fpt matches oracle on random kitty instances") {
  int tested = 0;
  for (uint64_t seed = 1; tested < 40 && seed < 3000; ++seed) {
    GenKind kind = seed % 2 ? GenKind::General : GenKind::Cycle;
    int n = kind == GenKind::Cycle ? 10 + 2 * (seed % 2) : 8 + seed % 3;
    OrthoRep rep = generate_random(kind, n, seed);
    KittyReport kr = kitty_corners(rep);
    if (kr.k() == 0 || kr.k() > 4) continue;
    ++tested;
    CAPTURE(seed);
    CAPTURE(kind == GenKind::Cycle);
    FptResult r = compact_fpt_detailed(rep);
    REQUIRE(drawing_valid(rep, r.drawing));
    Drawing o = oracle::brute_force_min_area(rep);
    CHECK(r.area == area(o));
  }
  CHECK(tested == 40);
}
