#include "orthopress/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <vector>

namespace orthopress {
namespace oracle {

namespace {

struct Seg {
  int x1, y1, x2, y2;  // x1 <= x2, y1 <= y2
  VertexIx u, v;
};

Seg make_seg(GridPoint a, GridPoint b, VertexIx u, VertexIx v) {
  Seg s{std::min(a.x, b.x), std::min(a.y, b.y), std::max(a.x, b.x), std::max(a.y, b.y), u, v};
  return s;
}

bool is_endpoint_vertex(const Seg& s, int x, int y, VertexIx& out, GridPoint pu, GridPoint pv) {
  if (pu.x == x && pu.y == y) { out = s.u; return true; }
  if (pv.x == x && pv.y == y) { out = s.v; return true; }
  return false;
}

// Conflict test for two axis-aligned segments: any shared geometry except a
// single point that is an endpoint of both and the same graph vertex.
bool segs_conflict(const Seg& a, const Seg& b, const std::vector<GridPoint>& pos) {
  int lox = std::max(a.x1, b.x1), hix = std::min(a.x2, b.x2);
  int loy = std::max(a.y1, b.y1), hiy = std::min(a.y2, b.y2);
  if (lox > hix || loy > hiy) return false;
  if (lox < hix || loy < hiy) return true;  // positive-length overlap
  VertexIx va, vb;
  if (!is_endpoint_vertex(a, lox, loy, va, pos[a.u], pos[a.v])) return true;
  if (!is_endpoint_vertex(b, lox, loy, vb, pos[b.u], pos[b.v])) return true;
  return va != vb;
}

bool point_on_seg(const Seg& s, int x, int y) {
  return s.x1 <= x && x <= s.x2 && s.y1 <= y && y <= s.y2;
}

struct CycleClosure {
  // prefix sums over cycle edges k = (order[k] -> order[k+1])
  std::vector<int> order, pos_of;
  std::vector<int64_t> wE, wW, wN, wS;  // weight sums
  std::vector<int> cE, cW, cN, cS;      // edge counts
  bool active = false;
};

class Search {
 public:
  Search(const OrthoRep& rep, const EdgeWeights& weights, const SearchLimits& limits,
         int height_cap /* -1: minimize area; >=0: minimize width at this y-span */)
      : rep_(rep), limits_(limits), height_cap_(height_cap) {
    n_ = rep.vertex_count();
    weight_of_.assign(n_, {1, 1, 1, 1});
    int64_t total_w = 0;
    for (const auto& e : rep.edges()) {
      int w = weights.empty() ? 1 : weights[rep.edge_index(e.u, e.v)];
      total_w += w;
      weight_of_[e.u][static_cast<int>(e.dir)] = w;
      weight_of_[e.v][static_cast<int>(reverse(e.dir))] = w;
    }
    span_ = limits.max_span > 0 ? limits.max_span
                                : static_cast<int>(std::min<int64_t>(total_w, 1 << 20));
    if (span_ < 1) span_ = 1;

    bfs_order();
    maybe_setup_cycle(weights);
    deadline_ = limits.time_budget_ms > 0
                    ? std::chrono::steady_clock::now() + std::chrono::milliseconds(limits.time_budget_ms)
                    : std::chrono::steady_clock::time_point::max();
  }

  // Runs the search; returns true iff any drawing was found.
  bool run() {
    pos_.assign(n_, GridPoint{0, 0});
    placed_.assign(n_, 0);
    segs_.clear();
    placed_list_.clear();
    pos_[order_[0]] = {0, 0};
    placed_[order_[0]] = 1;
    placed_list_.push_back(order_[0]);
    best_metric_ = std::numeric_limits<int64_t>::max();
    found_ = false;
    descend(1, 0, 0, 0, 0);
    return found_;
  }

  Drawing best_drawing() const { return best_; }
  int64_t best_metric() const { return best_metric_; }

 private:
  void bfs_order() {
    order_.clear();
    parent_dir_.assign(n_, Dir::N);
    std::vector<char> seen(n_, 0);
    std::vector<VertexIx> queue = {0};
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      VertexIx v = queue[qi];
      order_.push_back(v);
      for (Dir d : kAllDirs) {
        VertexIx w = rep_.neighbor(v, d);
        if (w != kNoVertex && !seen[w]) {
          seen[w] = 1;
          parent_dir_[w] = reverse(d);  // dart w -> v
          queue.push_back(w);
        }
      }
    }
  }

  void maybe_setup_cycle(const EdgeWeights& weights) {
    for (VertexIx v = 0; v < n_; ++v)
      if (rep_.degree(v) != 2) return;
    cc_.active = true;
    cc_.order.resize(n_);
    cc_.pos_of.assign(n_, -1);
    VertexIx prev = kNoVertex, cur = 0;
    for (int i = 0; i < n_; ++i) {
      cc_.order[i] = cur;
      cc_.pos_of[cur] = i;
      for (Dir d : kAllDirs) {
        VertexIx w = rep_.neighbor(cur, d);
        if (w != kNoVertex && w != prev) {
          prev = cur;
          cur = w;
          break;
        }
      }
    }
    int m = n_;
    cc_.wE.assign(m + 1, 0); cc_.wW.assign(m + 1, 0);
    cc_.wN.assign(m + 1, 0); cc_.wS.assign(m + 1, 0);
    cc_.cE.assign(m + 1, 0); cc_.cW.assign(m + 1, 0);
    cc_.cN.assign(m + 1, 0); cc_.cS.assign(m + 1, 0);
    for (int k = 0; k < m; ++k) {
      VertexIx a = cc_.order[k], b = cc_.order[(k + 1) % m];
      Dir d = Dir::N;
      for (Dir dd : kAllDirs)
        if (rep_.neighbor(a, dd) == b) { d = dd; break; }
      int w = weights.empty() ? 1 : weights[rep_.edge_index(a, b)];
      cc_.wE[k + 1] = cc_.wE[k] + (d == Dir::E ? w : 0);
      cc_.wW[k + 1] = cc_.wW[k] + (d == Dir::W ? w : 0);
      cc_.wN[k + 1] = cc_.wN[k] + (d == Dir::N ? w : 0);
      cc_.wS[k + 1] = cc_.wS[k] + (d == Dir::S ? w : 0);
      cc_.cE[k + 1] = cc_.cE[k] + (d == Dir::E);
      cc_.cW[k + 1] = cc_.cW[k] + (d == Dir::W);
      cc_.cN[k + 1] = cc_.cN[k] + (d == Dir::N);
      cc_.cS[k + 1] = cc_.cS[k] + (d == Dir::S);
    }
  }

  // Manhattan feasibility of the still-unplaced cycle arc.
  bool cycle_arc_feasible() const {
    if (!cc_.active) return true;
    // placed vertices form a contiguous arc around position 0
    int fwd = 0;
    while (fwd + 1 < n_ && placed_[cc_.order[fwd + 1]]) ++fwd;
    int bwd = n_;
    while (bwd - 1 > fwd && placed_[cc_.order[bwd - 1]]) --bwd;
    if (fwd + 1 >= bwd) return true;  // everything placed
    // open path from order[fwd] to order[bwd % n] over edges [fwd, bwd)
    auto rng = [&](const std::vector<int64_t>& ps) { return ps[bwd] - ps[fwd]; };
    auto cnt = [&](const std::vector<int>& ps) { return ps[bwd] - ps[fwd]; };
    GridPoint a = pos_[cc_.order[fwd]], b = pos_[cc_.order[bwd % n_]];
    int64_t dxn = b.x - a.x, dyn = b.y - a.y;
    int64_t min_dx = rng(cc_.wE) - static_cast<int64_t>(cnt(cc_.cW)) * span_;
    int64_t max_dx = static_cast<int64_t>(cnt(cc_.cE)) * span_ - rng(cc_.wW);
    if (dxn < min_dx || dxn > max_dx) return false;
    int64_t min_dy = rng(cc_.wN) - static_cast<int64_t>(cnt(cc_.cS)) * span_;
    int64_t max_dy = static_cast<int64_t>(cnt(cc_.cN)) * span_ - rng(cc_.wS);
    return dyn >= min_dy && dyn <= max_dy;
  }

  bool placement_clear(GridPoint q) const {
    for (VertexIx w : placed_list_)
      if (pos_[w] == q) return false;
    for (const Seg& s : segs_)
      if (point_on_seg(s, q.x, q.y)) return false;
    return true;
  }

  bool new_segments_ok(VertexIx v, GridPoint q, std::vector<Seg>& out) const {
    out.clear();
    for (Dir d : kAllDirs) {
      VertexIx u = rep_.neighbor(v, d);
      if (u == kNoVertex || !placed_[u]) continue;
      GridPoint pu = pos_[u];
      // direction, alignment, minimum length
      int w = weight_of_[v][static_cast<int>(d)];
      if (is_horizontal(d)) {
        if (pu.y != q.y || (pu.x - q.x) * dx(d) < w) return false;
      } else {
        if (pu.x != q.x || (pu.y - q.y) * dy(d) < w) return false;
      }
      out.push_back(make_seg(q, pu, v, u));
    }
    for (const Seg& ns : out) {
      for (const Seg& s : segs_)
        if (segs_conflict(ns, s, pos_)) return false;
      for (VertexIx w : placed_list_) {
        if (w == ns.u || w == ns.v) continue;
        if (point_on_seg(ns, pos_[w].x, pos_[w].y)) return false;
      }
    }
    return true;
  }

  void descend(int depth, int minx, int maxx, int miny, int maxy) {
    if (depth == n_) {
      int64_t metric = height_cap_ < 0
                           ? static_cast<int64_t>(maxx - minx) * (maxy - miny)
                           : (maxx - minx);
      if (metric < best_metric_) {
        best_metric_ = metric;
        best_.pos = pos_;
        found_ = true;
      }
      return;
    }
    if (++expansions_ > limits_.max_expansions)
      throw LimitExceeded("oracle expansion budget exhausted");
    if ((expansions_ & 8191) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw LimitExceeded("oracle time budget exhausted");

    VertexIx v = order_[depth];
    Dir d = parent_dir_[v];               // dart v -> parent
    VertexIx parent = rep_.neighbor(v, d);
    Dir pd = reverse(d);                  // dart parent -> v
    GridPoint base = pos_[parent];

    int w_pv = weight_of_[v][static_cast<int>(d)];
    int lo = w_pv, hi = span_;
    // constraints from other already-placed neighbors; q = base + sign*delta
    // along the free axis, the other coordinate equals base's
    for (Dir dd : kAllDirs) {
      VertexIx u = rep_.neighbor(v, dd);
      if (u == kNoVertex || u == parent || !placed_[u]) continue;
      GridPoint pu = pos_[u];
      int w = weight_of_[v][static_cast<int>(dd)];
      int sign = is_horizontal(pd) ? dx(pd) : dy(pd);
      int base_c = is_horizontal(pd) ? base.x : base.y;     // free-axis coord
      int base_o = is_horizontal(pd) ? base.y : base.x;     // fixed coord
      int pu_c = is_horizontal(pd) ? pu.x : pu.y;
      int pu_o = is_horizontal(pd) ? pu.y : pu.x;
      bool same_axis = is_horizontal(dd) == is_horizontal(pd);
      if (!same_axis) {
        // u pins the free coordinate; its own axis is checked per delta
        int delta = (pu_c - base_c) * sign;
        lo = std::max(lo, delta);
        hi = std::min(hi, delta);
      } else {
        if (pu_o != base_o) { hi = lo - 1; break; }  // misaligned, no candidate
        // towards dd: pu_c - q_c must be >= w in dd's sense
        bool positive = (dd == Dir::E || dd == Dir::N);
        if (positive) {
          // q_c <= pu_c - w
          if (sign > 0) hi = std::min(hi, pu_c - w - base_c);
          else lo = std::max(lo, base_c - (pu_c - w));
        } else {
          // q_c >= pu_c + w
          if (sign > 0) lo = std::max(lo, pu_c + w - base_c);
          else hi = std::min(hi, base_c - (pu_c + w));
        }
      }
    }

    std::vector<Seg> new_segs;
    for (int delta = lo; delta <= hi; ++delta) {
      GridPoint q{base.x + dx(pd) * delta, base.y + dy(pd) * delta};
      int nminx = std::min(minx, q.x), nmaxx = std::max(maxx, q.x);
      int nminy = std::min(miny, q.y), nmaxy = std::max(maxy, q.y);
      bool grew = is_horizontal(pd) ? (nmaxx - nminx > maxx - minx)
                                    : (nmaxy - nminy > maxy - miny);
      if (height_cap_ >= 0) {
        if (nmaxy - nminy > height_cap_) {
          if (is_vertical(pd) && grew) break;
          continue;
        }
        if (found_ && nmaxx - nminx >= best_metric_) {
          if (is_horizontal(pd) && grew) break;  // wider deltas only widen
          continue;
        }
      } else if (found_ &&
                 static_cast<int64_t>(nmaxx - nminx) * (nmaxy - nminy) >= best_metric_) {
        if (grew) break;  // larger deltas only grow the box further
        continue;
      }
      pos_[v] = q;  // segment endpoint lookups read pos_ during the checks
      if (!placement_clear(q)) continue;
      if (!new_segments_ok(v, q, new_segs)) continue;

      placed_[v] = 1;
      placed_list_.push_back(v);
      size_t seg_mark = segs_.size();
      for (const Seg& s : new_segs) segs_.push_back(s);

      if (cycle_arc_feasible())
        descend(depth + 1, nminx, nmaxx, nminy, nmaxy);

      segs_.resize(seg_mark);
      placed_list_.pop_back();
      placed_[v] = 0;
    }
  }

  const OrthoRep& rep_;
  SearchLimits limits_;
  int height_cap_;
  int n_;
  int span_;
  std::vector<std::array<int, 4>> weight_of_;
  std::vector<VertexIx> order_;
  std::vector<Dir> parent_dir_;
  CycleClosure cc_;
  std::chrono::steady_clock::time_point deadline_;

  std::vector<GridPoint> pos_;
  std::vector<char> placed_;
  std::vector<VertexIx> placed_list_;
  std::vector<Seg> segs_;
  int64_t expansions_ = 0;
  int64_t best_metric_ = 0;
  bool found_ = false;
  Drawing best_;
};

}  // namespace

Drawing brute_force_min_area(const OrthoRep& rep, const EdgeWeights& weights,
                             const SearchLimits& limits) {
  Search s(rep, weights, limits, -1);
  if (!s.run())
    throw Infeasible("no drawing found within span bound");
  return s.best_drawing();
}

std::optional<int> brute_force_min_width_at_height(const OrthoRep& rep, int h,
                                                   const SearchLimits& limits,
                                                   const EdgeWeights& weights) {
  Search s(rep, weights, limits, h);
  if (!s.run()) return std::nullopt;
  return static_cast<int>(s.best_metric());
}

bool pairwise_intersection(const Drawing& d, const OrthoRep& rep) {
  if (static_cast<int>(d.pos.size()) != rep.vertex_count()) return false;
  std::vector<Seg> segs;
  segs.reserve(rep.edges().size());
  for (const auto& e : rep.edges()) {
    GridPoint a = d.pos[e.u], b = d.pos[e.v];
    if (a.x != b.x && a.y != b.y) return false;
    segs.push_back(make_seg(a, b, e.u, e.v));
  }
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j)
      if (segs_conflict(segs[i], segs[j], d.pos)) return false;
  return true;
}

}  // namespace oracle
}  // namespace orthopress
