#pragma once

#include <string>
#include <vector>

#include "orthopress/drawing.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress::testutil {

inline std::string vid(int i) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "v%03d", i);
  return buf;
}

// Builds a rep plus its witness drawing from explicit vertex coordinates and
// edges given as index pairs; directions are derived from the coordinates.
struct Built {
  OrthoRep rep;
  Drawing drawing;  // indexed like rep (ids are vNNN so order is preserved)
};

inline Built from_coords(const std::vector<GridPoint>& pts,
                         const std::vector<std::pair<int, int>>& edges,
                         const std::string& name = "test") {
  std::vector<std::string> ids;
  ids.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) ids.push_back(vid(static_cast<int>(i)));
  std::vector<EdgeSpec> specs;
  for (auto [a, b] : edges) {
    GridPoint pa = pts[a], pb = pts[b];
    Dir d;
    if (pa.y == pb.y && pb.x > pa.x) d = Dir::E;
    else if (pa.y == pb.y) d = Dir::W;
    else if (pb.y > pa.y) d = Dir::N;
    else d = Dir::S;
    specs.push_back({vid(a), vid(b), d});
  }
  Built out{OrthoRep::build(ids, specs, name), Drawing{}};
  out.drawing.pos = pts;
  return out;
}

// Simple rectilinear polygon through the given corner sequence
// (counterclockwise or clockwise); every grid point along the boundary
// becomes a vertex, so flats are explicit degree-2 vertices.
inline Built cycle_through(const std::vector<GridPoint>& corners,
                           const std::string& name = "cycle") {
  std::vector<GridPoint> pts;
  int m = static_cast<int>(corners.size());
  for (int i = 0; i < m; ++i) {
    GridPoint a = corners[i], b = corners[(i + 1) % m];
    int steps = std::abs(b.x - a.x) + std::abs(b.y - a.y);
    int sx = (b.x > a.x) - (b.x < a.x), sy = (b.y > a.y) - (b.y < a.y);
    for (int s = 0; s < steps; ++s) pts.push_back({a.x + sx * s, a.y + sy * s});
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    edges.push_back({i, (i + 1) % static_cast<int>(pts.size())});
  return from_coords(pts, edges, name);
}

// Corner-only variant: only turning points become vertices.
inline Built cycle_corners_only(const std::vector<GridPoint>& corners,
                                const std::string& name = "cycle") {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(corners.size()); ++i)
    edges.push_back({i, (i + 1) % static_cast<int>(corners.size())});
  return from_coords(corners, edges, name);
}

inline Built unit_square() {
  return cycle_corners_only({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, "unit-square");
}

}  // namespace orthopress::testutil
