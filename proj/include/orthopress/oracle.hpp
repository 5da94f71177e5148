#pragma once

#include <cstdint>
#include <optional>

#include "orthopress/drawing.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress {
namespace oracle {

struct SearchLimits {
  int max_span = 0;                     // 0 = n for unweighted, weight sum for weighted
  int64_t max_expansions = 400000000;   // backtracking node budget
  int64_t time_budget_ms = 120000;      // 0 = unlimited
};

// Exhaustive backtracking search for a certified minimum-area drawing.
// Vertices are placed in BFS order from the lexicographically smallest id,
// enumerating the free coordinate delta of each placing edge in ascending
// order, so the returned drawing is the lexicographically smallest optimum.
Drawing brute_force_min_area(const OrthoRep& rep, const EdgeWeights& weights = {},
                             const SearchLimits& limits = {});

// Minimum bounding-box width over drawings of height (y-span) at most h,
// or nullopt when no such drawing exists within the span bound.
std::optional<int> brute_force_min_width_at_height(const OrthoRep& rep, int h,
                                                   const SearchLimits& limits = {},
                                                   const EdgeWeights& weights = {});

// All-pairs planarity criterion: true iff every pair of drawn segments is
// disjoint or touches exactly at a shared graph vertex.
bool pairwise_intersection(const Drawing& d, const OrthoRep& rep);

}  // namespace oracle
}  // namespace orthopress
