#pragma once

// Constructed cycles whose kernelization fires a chosen reduction rule.
//
// The reduction rules read only labels, weights and kitty flags, so firing
// corridor words are found by searching label words on a synthetic cycle:
// corridor + Z-jog host (the jog's two reflex corners are the kitty
// anchors). A found word is then realized geometrically with seed-varied
// segment lengths. The pair-cancellation rule for CRRC windows is provably
// never scheduled first (every context wakes a lower rule), so its windows
// are exercised on the vertical mirror of an RCCR instance, where the same
// safety argument applies by symmetry.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "orthopress/generate.hpp"
#include "orthopress/kernel.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress::testutil {

// two host shapes wrapped around the corridor, differing in the rotation
// level of their kitty anchors (odd vs even); corridor reflex corners must
// sit at the opposite parity to stay kitty-free
inline const std::vector<int> kHostTurnsOdd = {1, -1, 1, 1, 1, -1, 1, 1};   // C R C C C R C C
inline const std::vector<int> kHostTurnsEven = {1, 1, -1, 1, 1, 1, -1, 1};  // C C R C C C R C

// kitty positions of a labeled cycle given as turn values (+1 convex,
// -1 reflex); combinatorial only, matches the geometric detector
inline std::vector<int> word_kitty(const std::vector<int>& turns) {
  int n = static_cast<int>(turns.size());
  std::vector<int> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + turns[i];
  auto rot = [&](int i, int j) {
    return j >= i ? prefix[j] - prefix[i] : 4 - (prefix[i] - prefix[j]);
  };
  std::set<int> kitty;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || turns[a] > 0 || turns[b] > 0) continue;
      // internal pair: rot 2; external pair: external rot 2, which for the
      // complementary traversal equals prefix arithmetic with sum -4
      if (rot(a, b) == 2) {
        kitty.insert(a);
        kitty.insert(b);
      }
    }
  // external-face pairs: reflex there = convex here; the external walk is
  // the reverse with flipped turns
  std::vector<int> ext(n);
  for (int i = 0; i < n; ++i) ext[i] = -turns[n - 1 - i];
  std::vector<int> eprefix(n + 1, 0);
  for (int i = 0; i < n; ++i) eprefix[i + 1] = eprefix[i] + ext[i];
  auto erot = [&](int i, int j) {
    return j >= i ? eprefix[j] - eprefix[i] : -4 - (eprefix[i] - eprefix[j]);
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || ext[a] > 0 || ext[b] > 0) continue;
      if (erot(a, b) == 2) {
        kitty.insert(n - 1 - a);
        kitty.insert(n - 1 - b);
      }
    }
  return {kitty.begin(), kitty.end()};
}

// synthetic labeled cycle for rule simulation; edge directions integrate
// the turns starting eastward
inline std::optional<DirectedCycle> cycle_from_turns(const std::vector<int>& turns) {
  int n = static_cast<int>(turns.size());
  int sum = 0;
  for (int t : turns) sum += t;
  if (sum != 4) return std::nullopt;
  DirectedCycle g;
  g.weight.assign(n, 1);
  g.is_kitty.assign(n, 0);
  Dir heading = Dir::E;
  for (int i = 0; i < n; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "s%03d", i % 1000);
    g.ids.push_back(buf);
    g.edge_dir.push_back(heading);
    heading = turns[(i + 1) % n] > 0 ? rotate_ccw(heading) : rotate_cw(heading);
  }
  g.label.resize(n);
  for (int i = 0; i < n; ++i)
    g.label[i] = turns[i] > 0 ? CornerLabel::Convex : CornerLabel::Reflex;
  for (int k : word_kitty(turns)) g.is_kitty[k] = 1;
  return g;
}

// --- spiral instances -----------------------------------------------------
//
// A spiral strip polygon has one long all-reflex wall, the shape the
// reduction fixpoint leaves behind; cell-level edits on that wall inject
// the corner patterns the rules rewrite.

using CellSet = std::set<std::pair<int, int>>;

// boundary of a simply connected polyomino as a corner list (ccw)
inline std::optional<std::vector<GridPoint>> trace_boundary(const CellSet& cells) {
  if (cells.empty()) return std::nullopt;
  auto has = [&](int x, int y) { return cells.count({x, y}) > 0; };
  // start at the lower-left corner of the leftmost-lowest cell, heading east
  auto [sx, sy] = *cells.begin();
  for (auto& [x, y] : cells)
    if (y < sy || (y == sy && x < sx)) { sx = x; sy = y; }
  GridPoint start{sx, sy};
  std::vector<GridPoint> corners;
  GridPoint cur = start;
  Dir heading = Dir::E;
  int guard = static_cast<int>(cells.size()) * 8 + 16;
  do {
    if (--guard < 0) return std::nullopt;
    // advance one unit, then decide the turn by the two cells ahead
    GridPoint nxt{cur.x + dx(heading), cur.y + dy(heading)};
    // cells left/right of the edge just walked sit relative to heading
    auto cell_left = [&](GridPoint p, Dir h) {
      switch (h) {
        case Dir::E: return std::pair{p.x, p.y};
        case Dir::N: return std::pair{p.x - 1, p.y};
        case Dir::W: return std::pair{p.x - 1, p.y - 1};
        default: return std::pair{p.x, p.y - 1};
      }
    };
    auto cell_right = [&](GridPoint p, Dir h) {
      switch (h) {
        case Dir::E: return std::pair{p.x, p.y - 1};
        case Dir::N: return std::pair{p.x, p.y};
        case Dir::W: return std::pair{p.x - 1, p.y};
        default: return std::pair{p.x - 1, p.y - 1};
      }
    };
    auto l = cell_left(nxt, heading);
    auto r = cell_right(nxt, heading);
    Dir next_heading;
    if (cells.count(l) && !cells.count(r)) next_heading = heading;           // straight
    else if (cells.count(l) && cells.count(r)) next_heading = rotate_cw(heading);  // wait

    // decide by interior-on-the-left rule
    bool left_in = cells.count(l) > 0, right_in = cells.count(r) > 0;
    if (left_in && !right_in) next_heading = heading;
    else if (!left_in) next_heading = rotate_ccw(heading);
    else next_heading = rotate_cw(heading);
    if (next_heading != heading) corners.push_back(nxt);
    cur = nxt;
    heading = next_heading;
  } while (!(cur == start && heading == Dir::E));
  // rotate so corners start deterministically
  return corners;
}

// inward rectangular spiral strip, three cells wide with gap one, plus
// seed-chosen edits carved into the inner wall of the second-wrap bottom arm
inline std::optional<OrthoRep> spiral_instance(int rule_shape, uint64_t seed,
                                               const std::string& name) {
  auto L = [&](int lo, int hi) {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<int>((seed >> 33) % (hi - lo + 1));
  };
  int base = 67 + 2 * L(0, 3);
  CellSet cells;
  // thick spiral: walk the center line and stamp a 3-wide brush
  GridPoint cur{0, 0};
  Dir heading = Dir::E;
  std::vector<int> arms;
  for (int a = base, i = 0; a >= 11; ++i) {
    arms.push_back(a);
    if (i % 2 == 1) a -= 8;  // strip 3 + gap 1 on both sides of a wrap
  }
  for (int a : arms) {
    for (int i = 0; i < a; ++i) {
      for (int u = -1; u <= 1; ++u)
        for (int v = -1; v <= 1; ++v) cells.insert({cur.x + u, cur.y + v});
      if (i + 1 < a) cur = {cur.x + dx(heading), cur.y + dy(heading)};
    }
    heading = rotate_ccw(heading);
    cur = {cur.x + dx(heading), cur.y + dy(heading)};
  }

  // wrap-2 bottom arm: center y = 8, strip rows 7..9, inner wall = row 9
  int top = 9;
  int xlo = 14, xhi = base - 20;
  if (xhi - xlo < 10) return std::nullopt;
  int at = xlo + L(0, xhi - xlo - 6);
  auto cut = [&](int x, int depth) {
    for (int d = 0; d < depth; ++d) cells.erase({x, top - d});
  };
  switch (rule_shape) {
    case 2: cut(at, 1); cut(at + 1, 1); cut(at + 1, 2); break;  // staircase niche
    case 3: cut(at, 1); break;                                  // single niche
    case 4: cut(at, 1); cut(at + 1, 1); cut(at, 2); cut(at + 1, 2); break;  // 2x2
    case 5: cut(at, 1); cut(at + 1, 1); cut(at + 2, 1); cut(at + 3, 1); break;
    case 6: cut(at, 2); break;                                  // deep niche
    case 7: cut(at, 2); cut(at + 1, 1); break;                  // deep + shoulder
    case 8: cut(at, 1); cut(at + 2, 1); break;                  // separated niches
    default: break;
  }

  auto corners = trace_boundary(cells);
  if (!corners) return std::nullopt;
  try {
    return rep_from_polygon(*corners, false, name);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline OrthoRep mirror_vertical(const OrthoRep& rep) {
  std::vector<std::string> ids;
  std::vector<EdgeSpec> edges;
  for (VertexIx v = 0; v < rep.vertex_count(); ++v) ids.push_back(rep.id_of(v));
  for (const auto& e : rep.edges()) {
    Dir d = e.dir;
    if (is_vertical(d)) d = reverse(d);
    edges.push_back({rep.id_of(e.u), rep.id_of(e.v), d});
  }
  return OrthoRep::build(ids, edges, rep.name() + "-mirror");
}

struct RuleWindow {
  OrthoRep rep;
  int rule = 0;
  bool direct_window = false;  // apply at `position` instead of scheduling
  int position = -1;
};

// An instance whose kernelization fires `rule`; rule 9 instances mirror a
// rule-8 instance and carry the window position for direct application.
inline std::optional<RuleWindow> rule_window_instance(int rule, uint64_t seed) {
  if (rule == 1) {
    // lattice cycles carry flat runs everywhere
    for (uint64_t sub = 0; sub < 16; ++sub) {
      try {
        OrthoRep rep = generate_random(GenKind::Cycle, 12 + 2 * ((seed + sub) % 5),
                                       seed * 17 + sub);
        DirectedCycle g = build_directed_cycle(rep);
        for (int i = 0; i < g.size(); ++i)
          if (rule_applicable(g, 1, i)) return RuleWindow{rep, 1, false, -1};
      } catch (const Error&) {
      }
    }
    return std::nullopt;
  }
  int want = rule == 9 ? 8 : rule;
  for (uint64_t sub = 0; sub < 64; ++sub) {
    auto rep = spiral_instance(want, seed * 131 + sub * 7919, "rule-window");
    if (!rep) continue;
    KernelResult res;
    try {
      res = kernelize(*rep);
    } catch (const Error&) {
      continue;
    }
    bool hit = false;
    for (auto& f : res.stats.trace) hit |= f.rule == want;
    if (!hit) continue;
    if (rule != 9) return RuleWindow{*rep, rule, false, -1};

    OrthoRep mir = mirror_vertical(*rep);
    DirectedCycle g;
    try {
      g = build_directed_cycle(mir);
    } catch (const Error&) {
      continue;
    }
    for (int pos = 0; pos < g.size(); ++pos)
      if (rule_applicable(g, 9, pos)) return RuleWindow{mir, 9, true, pos};
  }
  return std::nullopt;
}

}  // namespace orthopress::testutil
