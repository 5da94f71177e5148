#include "orthopress/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace orthopress {

namespace {

CornerLabel label_of_turn(int t) {
  if (t == 0) return CornerLabel::Flat;
  return t > 0 ? CornerLabel::Convex : CornerLabel::Reflex;
}

CornerLabel implied_label(const DirectedCycle& g, int v) {
  return label_of_turn(turn(g.edge_dir[g.prev(v)], g.edge_dir[v]));
}

void check_labels(const DirectedCycle& g) {
  for (int v = 0; v < g.size(); ++v)
    if (implied_label(g, v) != g.label[v])
      throw PatternMismatch("vertex label out of sync with edge directions at " + g.ids[v]);
}

}  // namespace

DirectedCycle build_directed_cycle(const OrthoRep& rep) {
  for (VertexIx v = 0; v < rep.vertex_count(); ++v)
    if (rep.degree(v) != 2) throw NotACycle("vertex '" + rep.id_of(v) + "' has degree != 2");
  FaceSet fs = validate(rep);
  if (fs.faces.size() != 2) throw NotACycle("not a simple cycle");
  const Face& f = fs.faces[1 - fs.external_face];

  DirectedCycle g;
  int n = f.size();
  g.label.resize(n);
  g.edge_dir.resize(n);
  g.weight.assign(n, 1);
  g.is_kitty.assign(n, 0);
  std::vector<VertexIx> order(n);
  for (int i = 0; i < n; ++i) {
    order[i] = f.dart_tail[i];
    g.ids.push_back(rep.id_of(f.dart_tail[i]));
    g.edge_dir[i] = f.dart_dir[i];
  }
  for (int i = 0; i < n; ++i) g.label[i] = label_of_turn(f.corners[g.prev(i)].turn);

  KittyReport kr = kitty_corners(rep, fs);
  for (int i = 0; i < n; ++i)
    for (VertexIx v : kr.kitty_vertices)
      if (order[i] == v) g.is_kitty[i] = 1;
  check_labels(g);
  return g;
}

OrthoRep cycle_to_rep(const DirectedCycle& g, const std::string& name) {
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < g.size(); ++i)
    edges.push_back({g.ids[i], g.ids[g.next(i)], g.edge_dir[i]});
  return OrthoRep::build(g.ids, edges, name);
}

EdgeWeights cycle_weights(const DirectedCycle& g, const OrthoRep& rep) {
  EdgeWeights w(rep.edge_count(), 1);
  for (int i = 0; i < g.size(); ++i) {
    int e = rep.edge_index(rep.index_of(g.ids[i]), rep.index_of(g.ids[g.next(i)]));
    w[e] = g.weight[i];
  }
  return w;
}

namespace {

std::string pattern_of(int rule) {
  switch (rule) {
    case 2: return "RCR";
    case 3: return "CRC";
    case 4: return "RCCC";
    case 5: return "CCCR";
    case 6: return "CRRR";
    case 7: return "RRRC";
    case 8: return "RCCR";
    case 9: return "CRRC";
    default: return "";
  }
}

bool match_interior(const DirectedCycle& g, int pos, const std::string& pat) {
  for (size_t i = 0; i < pat.size(); ++i) {
    int v = (pos + 1 + static_cast<int>(i)) % g.size();
    if (corner_char(g.label[v]) != pat[i]) return false;
    if (g.is_kitty[v]) return false;
  }
  return true;
}

struct EdgeView {
  Dir dir;
  int weight;
};

EdgeView edge_at(const DirectedCycle& g, int i) { return {g.edge_dir[i], g.weight[i]}; }

int fresh_counter = 0;

std::string fresh_id() {
  char buf[16];
  std::snprintf(buf, sizeof buf, "z%04d", fresh_counter++);
  return buf;
}

// single-corner swap, rules 2 and 3: the middle corner reflects across and
// the two side lengths trade places
void apply_corner_swap(DirectedCycle& g, int pos, CornerLabel mid) {
  int n = g.size();
  int u2 = (pos + 1) % n, u3 = (pos + 2) % n, u4 = (pos + 3) % n;
  EdgeView e23 = edge_at(g, u2), e34 = edge_at(g, u3);
  g.ids[u3] = fresh_id();
  g.label[u2] = CornerLabel::Flat;
  g.label[u3] = mid;
  g.label[u4] = CornerLabel::Flat;
  g.edge_dir[u2] = e34.dir;
  g.weight[u2] = e34.weight;
  g.edge_dir[u3] = e23.dir;
  g.weight[u3] = e23.weight;
}

void erase_at(DirectedCycle& g, std::vector<int> dead) {
  std::sort(dead.begin(), dead.end(), std::greater<int>());
  for (int d : dead) {
    g.ids.erase(g.ids.begin() + d);
    g.label.erase(g.label.begin() + d);
    g.edge_dir.erase(g.edge_dir.begin() + d);
    g.weight.erase(g.weight.begin() + d);
    g.is_kitty.erase(g.is_kitty.begin() + d);
  }
}

// three-corner contraction, rules 4..7
void apply_three_corner(DirectedCycle& g, int pos, int rule) {
  int n = g.size();
  int u1 = pos;
  int u2 = (pos + 1) % n, u3 = (pos + 2) % n, u4 = (pos + 3) % n, u5 = (pos + 4) % n;
  EdgeView e23 = edge_at(g, u2), e34 = edge_at(g, u3), e45 = edge_at(g, u4);
  bool head_anchored = rule == 4 || rule == 6;
  if (head_anchored) {
    int e0 = g.prev(u1);  // edge (prev(u1), u1)
    g.weight[e0] = std::max(g.weight[e0], e23.weight);
  } else {
    int u6 = (pos + 5) % n;  // edge (u6, next(u6))
    g.weight[u6] = std::max(g.weight[u6], e45.weight);
  }
  CornerLabel l2, l3, l5;
  switch (rule) {
    case 4: l2 = CornerLabel::Flat; l3 = CornerLabel::Convex; l5 = CornerLabel::Convex; break;
    case 5: l2 = CornerLabel::Convex; l3 = CornerLabel::Convex; l5 = CornerLabel::Flat; break;
    case 6: l2 = CornerLabel::Flat; l3 = CornerLabel::Reflex; l5 = CornerLabel::Reflex; break;
    default: l2 = CornerLabel::Reflex; l3 = CornerLabel::Reflex; l5 = CornerLabel::Flat; break;
  }
  g.label[u2] = l2;
  g.label[u5] = l5;
  g.ids[u3] = fresh_id();
  g.label[u3] = l3;
  if (head_anchored) {
    g.edge_dir[u2] = e34.dir;
    g.weight[u2] = e34.weight;
    g.edge_dir[u3] = e45.dir;
    g.weight[u3] = std::max(e45.weight - e23.weight, 1);
  } else {
    g.edge_dir[u2] = e23.dir;
    g.weight[u2] = std::max(e23.weight - e45.weight, 1);
    g.edge_dir[u3] = e34.dir;
    g.weight[u3] = e34.weight;
  }
  erase_at(g, {u4});
}

// opposite-pair cancellation, rules 8 and 9
void apply_pair_cancel(DirectedCycle& g, int pos) {
  int n = g.size();
  int u1 = pos;
  int u2 = (pos + 1) % n, u3 = (pos + 2) % n, u4 = (pos + 3) % n, u5 = (pos + 4) % n;
  EdgeView e23 = edge_at(g, u2), e34 = edge_at(g, u3);
  int e0 = g.prev(u1);
  g.weight[e0] = std::max(g.weight[e0], e23.weight);
  g.label[u2] = CornerLabel::Flat;
  g.label[u5] = CornerLabel::Flat;
  g.edge_dir[u2] = e34.dir;
  g.weight[u2] = e34.weight;
  erase_at(g, {u3, u4});
}

}  // namespace

bool rule_applicable(const DirectedCycle& g, int rule, int pos) {
  int n = g.size();
  if (rule == 1)
    return n >= 5 && g.label[pos] == CornerLabel::Flat && !g.is_kitty[pos];
  std::string pat = pattern_of(rule);
  if (pat.empty() || n < static_cast<int>(pat.size()) + 2) return false;
  return match_interior(g, pos, pat);
}

void apply_rule(DirectedCycle& g, int rule, int pos) {
  if (!rule_applicable(g, rule, pos))
    throw PatternMismatch("rule " + std::to_string(rule) + " does not match at position " +
                          std::to_string(pos));
  switch (rule) {
    case 1: {
      int len = 0;
      while (g.label[(pos + len) % g.size()] == CornerLabel::Flat) ++len;
      int before = (pos - 1 + g.size()) % g.size();
      int total = g.weight[before];
      for (int i = 0; i < len; ++i) total += g.weight[(pos + i) % g.size()];
      g.weight[before] = -1;  // marker survives the erase below
      std::vector<int> dead;
      for (int i = 0; i < len; ++i) dead.push_back((pos + i) % g.size());
      erase_at(g, dead);
      for (int i = 0; i < g.size(); ++i)
        if (g.weight[i] == -1) g.weight[i] = total;
      break;
    }
    case 2: apply_corner_swap(g, pos, CornerLabel::Reflex); break;
    case 3: apply_corner_swap(g, pos, CornerLabel::Convex); break;
    case 4:
    case 5:
    case 6:
    case 7: apply_three_corner(g, pos, rule); break;
    case 8:
    case 9: apply_pair_cancel(g, pos); break;
    default: throw PatternMismatch("unknown rule " + std::to_string(rule));
  }
  check_labels(g);
}

RcMatching rc_matching(const DirectedCycle& g) {
  int n = g.size();
  RcMatching m;
  m.match_of.assign(n, -1);
  std::vector<int> stack;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < n; ++i) {
      if (g.label[i] == CornerLabel::Reflex) {
        if (m.match_of[i] == -1) stack.push_back(i);
      } else if (g.label[i] == CornerLabel::Convex) {
        if (!stack.empty() && m.match_of[i] == -1) {
          int r = stack.back();
          stack.pop_back();
          m.match_of[r] = i;
          m.match_of[i] = r;
        }
      } else {
        throw PatternMismatch("matching requires a flat-free cycle");
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (g.label[i] == CornerLabel::Convex && m.match_of[i] == -1)
      m.unmatched_convex.push_back(i);
  return m;
}

RRunReport count_r_runs(const DirectedCycle& g, const RcMatching& m) {
  RRunReport report;
  int n = g.size();
  auto run_ok = [&](int i) { return g.label[i] == CornerLabel::Reflex && !g.is_kitty[i]; };
  std::vector<char> used(n, 0);
  std::set<int> all_charged;
  for (int s = 0; s < n; ++s) {
    if (!run_ok(s) || run_ok(g.prev(s)) || used[s]) continue;
    int len = 0;
    while (len < n && run_ok((s + len) % n)) ++len;
    for (int i = 0; i < len; ++i) used[(s + i) % n] = 1;
    if (len < 7) continue;
    RRunReport::Run run;
    run.start = s;
    run.length = len;
    int blocks = len / 7;
    for (int j = 1; j <= blocks; ++j) {
      for (int ix : {7 * j - 6, 7 * j}) {
        int v = (s + ix - 1) % n;
        int c = m.match_of[v];
        if (c >= 0) {
          run.charged.push_back(c);
          if (!all_charged.insert(c).second) report.charges_disjoint = false;
        }
      }
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

namespace {

// Reducible interior positions: between kitty anchors behind 5-vertex
// buffers. Corner rules only act on these paths; a cycle without kitty
// corners keeps its corners (the flat rule still runs everywhere).
std::vector<char> reducible_mask(const DirectedCycle& g) {
  int n = g.size();
  std::vector<int> anchors;
  for (int i = 0; i < n; ++i)
    if (g.is_kitty[i]) anchors.push_back(i);
  std::vector<char> mask(n, 0);
  if (anchors.empty()) return mask;
  int a = static_cast<int>(anchors.size());
  for (int i = 0; i < a; ++i) {
    int from = anchors[i], to = anchors[(i + 1) % a];
    int t = (to - from + n) % n + 1;  // path vertex count, both ends included
    if (a == 1) t = n + 1;            // single anchor: the path wraps fully
    if (t <= 16) continue;
    for (int p = 5; p <= t - 6; ++p) mask[(from + p) % n] = 1;
  }
  return mask;
}

bool interior_in_region(const DirectedCycle& g, const std::vector<char>& mask, int pos,
                        int interior_len) {
  for (int i = 1; i <= interior_len; ++i)
    if (!mask[(pos + i) % g.size()]) return false;
  return true;
}

}  // namespace

std::pair<int, int> next_reduction(const DirectedCycle& g) {
  std::vector<char> mask = reducible_mask(g);
  for (int rule = 1; rule <= 9; ++rule) {
    int interior = rule <= 3 ? 3 : 4;
    for (int pos = 0; pos < g.size(); ++pos) {
      if (rule == 1) {
        if (!rule_applicable(g, 1, pos)) continue;
        if (g.label[g.prev(pos)] == CornerLabel::Flat) continue;  // run start only
        return {1, pos};
      }
      if (!rule_applicable(g, rule, pos)) continue;
      if (!interior_in_region(g, mask, pos, interior)) continue;
      return {rule, pos};
    }
  }
  return {0, -1};
}

KernelResult kernelize(const OrthoRep& rep) {
  KernelResult res;
  res.cycle = build_directed_cycle(rep);
  res.stats.initial_vertices = res.cycle.size();
  res.stats.k = 0;
  for (char c : res.cycle.is_kitty) res.stats.k += c;

  DirectedCycle& g = res.cycle;
  while (true) {
    auto [rule, pos] = next_reduction(g);
    if (rule == 0) break;
    res.stats.trace.push_back({rule, pos});
    apply_rule(g, rule, pos);
  }

  res.stats.final_vertices = g.size();
  std::vector<char> mask = reducible_mask(g);
  if (res.stats.k > 0)
    for (int i = 0; i < g.size(); ++i)
      if (mask[i] && g.label[i] != CornerLabel::Reflex) res.stats.interiors_all_reflex = false;
  res.stats.recommend_fpt =
      res.stats.k > 0 &&
      res.stats.k <= std::log2(std::max(2, res.stats.initial_vertices));

  res.reduced = cycle_to_rep(g, rep.name().empty() ? "reduced" : rep.name() + "-reduced");
  res.weights = cycle_weights(g, res.reduced);
  return res;
}

}  // namespace orthopress
