#pragma once

#include "orthopress/drawing.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress {

// True iff no two drawn segments intersect except at a shared graph
// endpoint, no vertex coincides with another vertex, and no vertex lies in
// the interior of a segment. Sweep over x in O(n log n).
bool sweep_planarity(const Drawing& d, const OrthoRep& rep);

}  // namespace orthopress
