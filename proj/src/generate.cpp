#include "orthopress/generate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "orthopress/errors.hpp"

namespace orthopress {

namespace {

std::string vname(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "v%04d", i);
  return buf;
}

Dir dir_between(GridPoint a, GridPoint b) {
  if (a.y == b.y) return b.x > a.x ? Dir::E : Dir::W;
  return b.y > a.y ? Dir::N : Dir::S;
}

OrthoRep rep_from_points(const std::vector<GridPoint>& pts,
                         const std::vector<std::pair<int, int>>& edges,
                         const std::string& name) {
  std::vector<std::string> ids;
  ids.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) ids.push_back(vname(static_cast<int>(i)));
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (auto [a, b] : edges)
    specs.push_back({ids[a], ids[b], dir_between(pts[a], pts[b])});
  return OrthoRep::build(ids, specs, name);
}

}  // namespace

OrthoRep rep_from_polygon(const std::vector<GridPoint>& corners, bool lattice_vertices,
                          const std::string& name) {
  std::vector<GridPoint> pts;
  int m = static_cast<int>(corners.size());
  for (int i = 0; i < m; ++i) {
    GridPoint a = corners[i], b = corners[(i + 1) % m];
    if (a.x != b.x && a.y != b.y)
      throw GenerationFailed("polygon corners not axis-aligned");
    if (lattice_vertices) {
      int steps = std::abs(b.x - a.x) + std::abs(b.y - a.y);
      int sx = (b.x > a.x) - (b.x < a.x), sy = (b.y > a.y) - (b.y < a.y);
      for (int s = 0; s < steps; ++s) pts.push_back({a.x + sx * s, a.y + sy * s});
    } else {
      pts.push_back(a);
    }
  }
  std::vector<std::pair<int, int>> edges;
  int np = static_cast<int>(pts.size());
  for (int i = 0; i < np; ++i) edges.push_back({i, (i + 1) % np});
  return rep_from_points(pts, edges, name);
}

namespace {

OrthoRep gen_cycle(int n, std::mt19937_64& rng) {
  if (n < 4 || (n & 1)) throw GenerationFailed("cycle length must be even and >= 4");
  std::vector<GridPoint> path;
  std::set<std::pair<int, int>> visited;

  // randomized DFS for a closed self-avoiding walk of exactly n steps
  std::vector<std::array<Dir, 4>> choice_stack;
  path.push_back({0, 0});
  visited.insert({0, 0});
  int64_t budget = 2000000;

  std::vector<int> tried;  // per depth, progress into the shuffled dirs
  std::vector<std::array<Dir, 4>> dirs_at;
  tried.push_back(0);
  std::array<Dir, 4> base = kAllDirs;
  for (int i = 3; i > 0; --i) std::swap(base[i], base[rng() % (i + 1)]);
  dirs_at.push_back(base);

  while (true) {
    if (--budget < 0) throw GenerationFailed("cycle walk budget exhausted");
    int depth = static_cast<int>(path.size()) - 1;
    if (depth == n) {
      if (path.back() == GridPoint{0, 0}) {
        path.pop_back();  // closing point duplicates the origin
        break;
      }
      // unreachable: closure enforced below
    }
    if (tried[depth] == 4) {
      if (depth == 0) throw GenerationFailed("no closed walk of requested length");
      visited.erase({path.back().x, path.back().y});
      path.pop_back();
      tried.pop_back();
      dirs_at.pop_back();
      continue;
    }
    Dir d = dirs_at[depth][tried[depth]++];
    GridPoint q{path.back().x + dx(d), path.back().y + dy(d)};
    int remaining = n - depth - 1;
    int dist = std::abs(q.x) + std::abs(q.y);
    if (dist > remaining || ((remaining - dist) & 1)) continue;
    bool is_origin = (q.x == 0 && q.y == 0);
    if (is_origin && remaining != 0) continue;
    if (!is_origin && visited.count({q.x, q.y})) continue;
    path.push_back(q);
    if (depth + 1 == n) {
      path.pop_back();
      break;
    }
    visited.insert({q.x, q.y});
    tried.push_back(0);
    std::array<Dir, 4> sh = kAllDirs;
    for (int i = 3; i > 0; --i) std::swap(sh[i], sh[rng() % (i + 1)]);
    dirs_at.push_back(sh);
  }

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return rep_from_points(path, edges, "random-cycle");
}

OrthoRep gen_staircase(int n, std::mt19937_64& rng) {
  (void)rng;
  int m = std::max(2, (n - 2) / 2);
  std::vector<GridPoint> corners;
  for (int i = 0; i < m; ++i) {
    corners.push_back({i, i});
    corners.push_back({i + 1, i});
  }
  corners.push_back({m, m});
  corners.push_back({0, m});
  return rep_from_polygon(corners, false, "staircase");
}

OrthoRep gen_spiral(int n, std::mt19937_64& rng) {
  // Z-shaped step polygon: the two inner reflex corners form a kitty pair.
  for (int attempt = 0; attempt < 4096; ++attempt) {
    int a = 1 + static_cast<int>(rng() % 4);
    int b = 1 + static_cast<int>(rng() % 3);
    int c = 1 + static_cast<int>(rng() % 4);
    int d = 2 + static_cast<int>(rng() % 3);
    int f = 1 + static_cast<int>(rng() % (d - 1));
    std::vector<GridPoint> corners = {
        {0, 0},         {a, 0},         {a, b},          {a + c, b},
        {a + c, b + d}, {a, b + d},     {a, b + d - f},  {0, b + d - f}};
    int perim = 0;
    for (size_t i = 0; i < corners.size(); ++i) {
      GridPoint p = corners[i], q = corners[(i + 1) % corners.size()];
      perim += std::abs(q.x - p.x) + std::abs(q.y - p.y);
    }
    if (perim != n) continue;
    return rep_from_polygon(corners, true, "spiral");
  }
  throw GenerationFailed("no step polygon with the requested perimeter");
}

OrthoRep gen_general(int n, std::mt19937_64& rng) {
  int side = 2;
  while ((side + 1) * (side + 1) < n) ++side;
  auto key = [side](int x, int y) { return y * (side + 1) + x; };

  // grow a connected set of n grid points
  std::vector<char> in_set((side + 1) * (side + 1), 0);
  std::vector<std::pair<int, int>> cells;
  std::vector<std::pair<int, int>> frontier;
  int sx = static_cast<int>(rng() % (side + 1)), sy = static_cast<int>(rng() % (side + 1));
  in_set[key(sx, sy)] = 1;
  cells.push_back({sx, sy});
  frontier.push_back({sx, sy});
  std::map<int, int> tree_parent;  // cell key -> parent key
  while (static_cast<int>(cells.size()) < n && !frontier.empty()) {
    size_t pick = rng() % frontier.size();
    auto [cx, cy] = frontier[pick];
    std::array<Dir, 4> sh = kAllDirs;
    for (int i = 3; i > 0; --i) std::swap(sh[i], sh[rng() % (i + 1)]);
    bool grown = false;
    for (Dir dch : sh) {
      int nx = cx + dx(dch), ny = cy + dy(dch);
      if (nx < 0 || ny < 0 || nx > side || ny > side) continue;
      if (in_set[key(nx, ny)]) continue;
      in_set[key(nx, ny)] = 1;
      cells.push_back({nx, ny});
      frontier.push_back({nx, ny});
      tree_parent[key(nx, ny)] = key(cx, cy);
      grown = true;
      break;
    }
    if (!grown) frontier.erase(frontier.begin() + pick);
  }
  if (static_cast<int>(cells.size()) < n) throw GenerationFailed("grid growth stalled");

  std::sort(cells.begin(), cells.end());
  std::map<int, int> index;
  std::vector<GridPoint> pts;
  for (auto [x, y] : cells) {
    index[key(x, y)] = static_cast<int>(pts.size());
    pts.push_back({x, y});
  }
  std::set<std::pair<int, int>> edgeset;
  for (auto [ck, pk] : tree_parent) {
    int a = index[ck], b = index[pk];
    edgeset.insert({std::min(a, b), std::max(a, b)});
  }
  for (auto [x, y] : cells) {
    if (x + 1 <= side && in_set[key(x + 1, y)] && (rng() & 1))
      edgeset.insert({std::min(index[key(x, y)], index[key(x + 1, y)]),
                      std::max(index[key(x, y)], index[key(x + 1, y)])});
    if (y + 1 <= side && in_set[key(x, y + 1)] && (rng() & 1))
      edgeset.insert({std::min(index[key(x, y)], index[key(x, y + 1)]),
                      std::max(index[key(x, y)], index[key(x, y + 1)])});
  }
  std::vector<std::pair<int, int>> edges(edgeset.begin(), edgeset.end());
  return rep_from_points(pts, edges, "random-grid");
}

}  // namespace

bool gen_kind_from_name(const std::string& name, GenKind& out) {
  if (name == "cycle") out = GenKind::Cycle;
  else if (name == "staircase") out = GenKind::Staircase;
  else if (name == "spiral") out = GenKind::Spiral;
  else if (name == "general") out = GenKind::General;
  else return false;
  return true;
}

OrthoRep generate_random(GenKind kind, int n, uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 12345);
  switch (kind) {
    case GenKind::Cycle: return gen_cycle(n, rng);
    case GenKind::Staircase: return gen_staircase(n, rng);
    case GenKind::Spiral: return gen_spiral(n, rng);
    case GenKind::General: return gen_general(n, rng);
  }
  throw GenerationFailed("unknown kind");
}

}  // namespace orthopress
