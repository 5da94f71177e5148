#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthopress/drawing.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress {

enum class GenKind { Cycle, Staircase, Spiral, General };

bool gen_kind_from_name(const std::string& name, GenKind& out);

// Deterministic random instances. Cycles are closed self-avoiding lattice
// walks (every lattice point a vertex); staircases are turn-regular
// monotone step polygons; spirals carry at least one kitty pair; general
// instances are connected subgraphs of a grid.
OrthoRep generate_random(GenKind kind, int n, uint64_t seed);

// Simple rectilinear polygon through the given corners. With
// lattice_vertices every boundary grid point becomes a vertex, otherwise
// only the corners do.
OrthoRep rep_from_polygon(const std::vector<GridPoint>& corners, bool lattice_vertices,
                          const std::string& name);

}  // namespace orthopress
