#pragma once

#include "orthopress/chain_dag.hpp"
#include "orthopress/drawing.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress {

// Linear-time minimum-area compaction of a turn-regular representation:
// two independent 1D compactions via saturated chain DAGs and optimal
// topological numberings. Throws NotTurnRegular otherwise.
Drawing compact_turn_regular(const OrthoRep& rep);

// One axis worth of the pipeline; x(v) = value[chain_of(v)].
std::vector<int> compact_axis(const OrthoRep& rep, const FaceSet& fs, Axis axis);

}  // namespace orthopress
