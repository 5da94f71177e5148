#include <random>

#include "doctest.h"
#include "orthopress/chain_dag.hpp"
#include "orthopress/compact_tr.hpp"
#include "orthopress/generate.hpp"
#include "orthopress/oracle.hpp"
#include "test_util.hpp"

using namespace orthopress;
using testutil::cycle_corners_only;
using testutil::unit_square;

TEST_CASE("unit rectangle chain DAGs") {
  auto sq = unit_square();
  ChainDag dx = build_chain_dag(sq.rep, Axis::X);
  CHECK(dx.node_count() == 2);
  CHECK(dx.arcs.size() == 1);  // two connecting segments collapse
  ChainDag dy = build_chain_dag(sq.rep, Axis::Y);
  CHECK(dy.node_count() == 2);
  CHECK(dy.arcs.size() == 1);
}

TEST_CASE("rectangle labeling: internal S,S and external L,L in the y-DAG") {
  auto sq = unit_square();
  FaceSet fs = validate(sq.rep);
  FaceWalks walks = face_walks(sq.rep, fs);
  ChainDag dy = derive_chain_dag(walks, Axis::Y);
  UpwardLabeling lab = upward_labeling(dy, walks);
  REQUIRE(lab.faces.size() == 2);
  for (size_t i = 0; i < lab.faces.size(); ++i) {
    const auto& f = lab.faces[i];
    REQUIRE(f.switches.size() == 2);
    if (f.external) {
      CHECK(f.cap == 2);
      CHECK(f.switches[0].label == AngleLabel::Large);
      CHECK(f.switches[1].label == AngleLabel::Large);
    } else {
      CHECK(f.cap == 0);
      CHECK(f.switches[0].label == AngleLabel::Small);
      CHECK(f.switches[1].label == AngleLabel::Small);
    }
  }
}

TEST_CASE("single-arc DAG saturator only attaches the extremes") {
  auto sq = unit_square();
  FaceSet fs = validate(sq.rep);
  FaceWalks walks = face_walks(sq.rep, fs);
  ChainDag dx = derive_chain_dag(walks, Axis::X);
  Saturator sat = saturate(dx, upward_labeling(dx, walks));
  int to_s = 0, to_t = 0;
  for (auto& a : sat.arcs) {
    CHECK((a.rule == Saturator::FromSuperSource || a.rule == Saturator::ToSuperSink));
    to_s += a.rule == Saturator::FromSuperSource;
    to_t += a.rule == Saturator::ToSuperSink;
  }
  CHECK(to_s == 1);
  CHECK(to_t == 1);
}

TEST_CASE("longest path layering") {
  // path s -> a -> t
  auto v = longest_path_layering(3, {{0, 1}, {1, 2}});
  CHECK(v == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(longest_path_layering(2, {{0, 1}, {1, 0}}), CycleDetected);
  // random DAG vs memoized recursion
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) arcs.push_back({a, b});
    auto got = longest_path_layering(n, arcs);
    // memoized longest path ending at v
    std::vector<int> expect(n, 0);
    for (int v2 = 0; v2 < n; ++v2)
      for (auto [a, b] : arcs)
        expect[b] = std::max(expect[b], expect[a] + 1);
    CHECK(got == expect);
  }
}

TEST_CASE("turn-regular compaction matches the oracle on canonical shapes") {
  // L-shape
  auto ell = cycle_corners_only({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  Drawing d = compact_turn_regular(ell.rep);
  CHECK(drawing_valid(ell.rep, d));
  CHECK(area(d) == area(oracle::brute_force_min_area(ell.rep)));

  // E-shaped silhouette: exercises in-face pairing on the external face
  auto e_shape = cycle_corners_only({{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 2}, {2, 2},
                                     {2, 3}, {1, 3}, {1, 4}, {3, 4}, {3, 5}, {0, 5}},
                                    "e-shape");
  if (is_turn_regular(e_shape.rep)) {
    Drawing de = compact_turn_regular(e_shape.rep);
    CHECK(drawing_valid(e_shape.rep, de));
    CHECK(area(de) == area(oracle::brute_force_min_area(e_shape.rep)));
  }
}

TEST_CASE("compact_turn_regular rejects kitty instances") {
  auto z = cycle_corners_only({{0, 0}, {2, 0}, {2, 1}, {4, 1}, {4, 3}, {2, 3},
                               {2, 2}, {0, 2}});
  CHECK_THROWS_AS(compact_turn_regular(z.rep), NotTurnRegular);
}

TEST_CASE("random turn-regular instances compact to oracle minimum") {
  int tested = 0;
  for (uint64_t seed = 1; tested < 60 && seed < 4000; ++seed) {
    OrthoRep rep = generate_random(GenKind::General, 6 + seed % 5, seed);
    if (!is_turn_regular(rep)) continue;
    ++tested;
    CAPTURE(seed);
    Drawing d = compact_turn_regular(rep);
    REQUIRE(drawing_valid(rep, d));
    Drawing o = oracle::brute_force_min_area(rep);
    CHECK(area(d) == area(o));
  }
  CHECK(tested == 60);
}

TEST_CASE("chains partition the vertex set per axis") {
  std::mt19937 rng(11);
  for (uint64_t seed = 100; seed < 120; ++seed) {
    OrthoRep rep = generate_random(GenKind::General, 9, seed);
    for (Axis ax : {Axis::X, Axis::Y}) {
      ChainDag dag = build_chain_dag(rep, ax);
      std::vector<int> hits(rep.vertex_count(), 0);
      for (const auto& ch : dag.chains)
        for (int h : ch)
          if (h < rep.vertex_count()) ++hits[h];
      for (int c : hits) CHECK(c == 1);
      // flood-fill recomputation along same-axis darts
      for (VertexIx v = 0; v < rep.vertex_count(); ++v) {
        for (Dir d : kAllDirs) {
          VertexIx w = rep.neighbor(v, d);
          if (w == kNoVertex) continue;
          bool same_axis_edge = (ax == Axis::X) ? is_vertical(d) : is_horizontal(d);
          if (same_axis_edge) CHECK(dag.chain_of[v] == dag.chain_of[w]);
        }
      }
    }
  }
}

TEST_CASE("coreachable matches closure recomputation") {
  for (uint64_t seed = 7; seed < 17; ++seed) {
    OrthoRep rep = generate_random(GenKind::General, 10, seed);
    for (Axis ax : {Axis::X, Axis::Y}) {
      ChainDag dag = build_relation_dag(rep, ax);
      auto closure = reachability_closure(dag);
      for (VertexIx u = 0; u < rep.vertex_count(); ++u)
        for (VertexIx v = 0; v < rep.vertex_count(); ++v) {
          if (u == v) continue;
          Reach r = coreachable(dag, u, v);
          int cu = dag.chain_of[u], cv = dag.chain_of[v];
          if (cu == cv) CHECK(r == Reach::SameChain);
          else if (closure[cu][cv]) CHECK(r == Reach::Forward);
          else if (closure[cv][cu]) CHECK(r == Reach::Backward);
          else CHECK(r == Reach::Incomparable);
        }
    }
  }
}

TEST_CASE("Bridgeman characterization: turn-regular iff all pairs related") {
  int checked = 0;
  for (uint64_t seed = 1; seed < 40; ++seed) {
    OrthoRep rep = generate_random(seed % 2 ? GenKind::General : GenKind::Cycle,
                                   seed % 2 ? 8 : 10 + 2 * (seed % 3), seed);
    ChainDag dx = build_relation_dag(rep, Axis::X);
    ChainDag dy = build_relation_dag(rep, Axis::Y);
    auto cx = reachability_closure(dx);
    auto cy = reachability_closure(dy);
    bool all_related = true;
    for (VertexIx u = 0; u < rep.vertex_count() && all_related; ++u)
      for (VertexIx v = u + 1; v < rep.vertex_count() && all_related; ++v) {
        int a = dx.chain_of[u], b = dx.chain_of[v];
        int c = dy.chain_of[u], e = dy.chain_of[v];
        bool rel_x = a == b || cx[a][b] || cx[b][a];
        bool rel_y = c == e || cy[c][e] || cy[e][c];
        if (!rel_x && !rel_y) all_related = false;
      }
    CHECK(is_turn_regular(rep) == all_related);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("staircase generator yields turn-regular instances") {
  for (int n : {10, 30, 200}) {
    OrthoRep rep = generate_random(GenKind::Staircase, n, 1);
    CHECK(is_turn_regular(rep));
    Drawing d = compact_turn_regular(rep);
    CHECK(drawing_valid(rep, d));
  }
}

TEST_CASE("spiral generator yields kitty instances") {
  OrthoRep rep = generate_random(GenKind::Spiral, 12, 3);
  CHECK(kitty_corners(rep).k() >= 2);
}
