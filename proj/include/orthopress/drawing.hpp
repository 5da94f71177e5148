#pragma once

#include <cstdint>
#include <vector>

#include "orthopress/ortho_rep.hpp"

namespace orthopress {

struct GridPoint {
  int32_t x = 0, y = 0;
};

inline bool operator==(GridPoint a, GridPoint b) { return a.x == b.x && a.y == b.y; }

// Integer coordinates for every vertex of a representation, indexed like the
// rep's vertices.
struct Drawing {
  std::vector<GridPoint> pos;

  int width() const;   // max x - min x
  int height() const;  // max y - min y
};

// Bounding-box area in grid units; 0 for degenerate boxes.
int64_t area(const Drawing& d);

using EdgeWeights = std::vector<int>;  // indexed like rep.edges(); empty = all 1

// Checks direction, axis alignment and minimum length of every dart plus
// planarity of the drawn segments.
bool drawing_valid(const OrthoRep& rep, const Drawing& d,
                   const EdgeWeights& weights = {});

// Direction/length part only (no planarity).
bool darts_consistent(const OrthoRep& rep, const Drawing& d,
                      const EdgeWeights& weights = {});

}  // namespace orthopress
