#include "orthopress/drawing.hpp"

#include <algorithm>
#include <limits>

#include "orthopress/sweep.hpp"

namespace orthopress {

int Drawing::width() const {
  if (pos.empty()) return 0;
  auto [lo, hi] = std::minmax_element(pos.begin(), pos.end(),
                                      [](GridPoint a, GridPoint b) { return a.x < b.x; });
  return hi->x - lo->x;
}

int Drawing::height() const {
  if (pos.empty()) return 0;
  auto [lo, hi] = std::minmax_element(pos.begin(), pos.end(),
                                      [](GridPoint a, GridPoint b) { return a.y < b.y; });
  return hi->y - lo->y;
}

int64_t area(const Drawing& d) {
  return static_cast<int64_t>(d.width()) * d.height();
}

bool darts_consistent(const OrthoRep& rep, const Drawing& d, const EdgeWeights& weights) {
  if (static_cast<int>(d.pos.size()) != rep.vertex_count()) return false;
  for (const auto& e : rep.edges()) {
    GridPoint pu = d.pos[e.u], pv = d.pos[e.v];
    int len;
    if (is_horizontal(e.dir)) {
      if (pu.y != pv.y) return false;
      len = (pv.x - pu.x) * dx(e.dir);
    } else {
      if (pu.x != pv.x) return false;
      len = (pv.y - pu.y) * dy(e.dir);
    }
    int w = weights.empty() ? 1 : weights[rep.edge_index(e.u, e.v)];
    if (len < w) return false;
  }
  return true;
}

bool drawing_valid(const OrthoRep& rep, const Drawing& d, const EdgeWeights& weights) {
  return darts_consistent(rep, d, weights) && sweep_planarity(d, rep);
}

}  // namespace orthopress
