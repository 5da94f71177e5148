#include "orthopress/sweep.hpp"

#include <algorithm>
#include <vector>

namespace orthopress {

namespace {

struct Fenwick {
  std::vector<int> tree;
  explicit Fenwick(int n) : tree(n + 1, 0) {}
  void add(int i, int delta) {
    for (++i; i < static_cast<int>(tree.size()); i += i & -i) tree[i] += delta;
  }
  int prefix(int i) const {  // sum of [0, i)
    int s = 0;
    for (; i > 0; i -= i & -i) s += tree[i];
    return s;
  }
  int range(int lo, int hi) const { return lo >= hi ? 0 : prefix(hi) - prefix(lo); }
};

struct HSeg { int y, x1, x2; };
struct VSeg { int x, y1, y2; };

}  // namespace

bool sweep_planarity(const Drawing& d, const OrthoRep& rep) {
  int n = rep.vertex_count();
  if (static_cast<int>(d.pos.size()) != n) return false;

  // distinct vertex points
  std::vector<GridPoint> pts = d.pos;
  std::sort(pts.begin(), pts.end(), [](GridPoint a, GridPoint b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  });
  for (size_t i = 1; i < pts.size(); ++i)
    if (pts[i] == pts[i - 1]) return false;

  std::vector<HSeg> hs;
  std::vector<VSeg> vs;
  for (const auto& e : rep.edges()) {
    GridPoint a = d.pos[e.u], b = d.pos[e.v];
    if (a.y == b.y && a.x != b.x)
      hs.push_back({a.y, std::min(a.x, b.x), std::max(a.x, b.x)});
    else if (a.x == b.x && a.y != b.y)
      vs.push_back({a.x, std::min(a.y, b.y), std::max(a.y, b.y)});
    else
      return false;  // degenerate or skew edge
  }

  // no vertex inside a segment, no collinear overlap
  std::sort(hs.begin(), hs.end(), [](const HSeg& a, const HSeg& b) {
    return std::tie(a.y, a.x1, a.x2) < std::tie(b.y, b.x1, b.x2);
  });
  for (size_t i = 1; i < hs.size(); ++i)
    if (hs[i].y == hs[i - 1].y && hs[i].x1 < hs[i - 1].x2) return false;
  std::sort(vs.begin(), vs.end(), [](const VSeg& a, const VSeg& b) {
    return std::tie(a.x, a.y1, a.y2) < std::tie(b.x, b.y1, b.y2);
  });
  for (size_t i = 1; i < vs.size(); ++i)
    if (vs[i].x == vs[i - 1].x && vs[i].y1 < vs[i - 1].y2) return false;

  {
    // vertex strictly inside a horizontal segment: binary search per y row
    std::vector<GridPoint> by_row = pts;  // already sorted by (x, y); resort by (y, x)
    std::sort(by_row.begin(), by_row.end(), [](GridPoint a, GridPoint b) {
      return std::tie(a.y, a.x) < std::tie(b.y, b.x);
    });
    for (const HSeg& h : hs) {
      auto lo = std::lower_bound(by_row.begin(), by_row.end(), GridPoint{h.x1 + 1, h.y},
                                 [](GridPoint a, GridPoint b) {
                                   return std::tie(a.y, a.x) < std::tie(b.y, b.x);
                                 });
      if (lo != by_row.end() && lo->y == h.y && lo->x < h.x2) return false;
    }
    for (const VSeg& v : vs) {
      auto lo = std::lower_bound(pts.begin(), pts.end(), GridPoint{v.x, v.y1 + 1},
                                 [](GridPoint a, GridPoint b) {
                                   return std::tie(a.x, a.y) < std::tie(b.x, b.y);
                                 });
      if (lo != pts.end() && lo->x == v.x && lo->y < v.y2) return false;
    }
  }

  // proper interior crossings, sweeping x left to right
  std::vector<int> ys;
  ys.reserve(hs.size());
  for (const HSeg& h : hs) ys.push_back(h.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  auto y_ix = [&ys](int y) {
    return static_cast<int>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
  };

  enum EvKind { Remove = 0, Query = 1, Add = 2 };
  struct Event { int x; int kind; int a, b; };
  std::vector<Event> events;
  events.reserve(hs.size() * 2 + vs.size());
  for (const HSeg& h : hs) {
    events.push_back({h.x1, Add, h.y, 0});
    events.push_back({h.x2, Remove, h.y, 0});
  }
  for (const VSeg& v : vs) events.push_back({v.x, Query, v.y1, v.y2});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return std::tie(a.x, a.kind) < std::tie(b.x, b.kind);
  });

  Fenwick bit(static_cast<int>(ys.size()));
  for (const Event& ev : events) {
    switch (ev.kind) {
      case Add: bit.add(y_ix(ev.a), +1); break;
      case Remove: bit.add(y_ix(ev.a), -1); break;
      case Query: {
        // horizontals with ev.a < y < ev.b strictly crossing this column
        int lo = static_cast<int>(std::upper_bound(ys.begin(), ys.end(), ev.a) - ys.begin());
        int hi = static_cast<int>(std::lower_bound(ys.begin(), ys.end(), ev.b) - ys.begin());
        if (bit.range(lo, hi) > 0) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace orthopress
