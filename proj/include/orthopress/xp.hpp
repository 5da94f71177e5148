#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orthopress/drawing.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress {

// One grid point of a column: empty, a vertex, a horizontally crossing
// edge, or a vertical edge run. Encoded as 0, 1+v, 1+n+e, 1+n+m+e.
enum class CellKind : uint8_t { Empty, Vertex, HEdge, VEdge };

struct Cell {
  CellKind kind = CellKind::Empty;
  int index = -1;
};

// Cells bottom to top; cells[r] sits on grid row r (y = r).
struct ColumnTuple {
  std::vector<int> cells;

  int height() const { return static_cast<int>(cells.size()); }
  Cell decode(const OrthoRep& rep, int row) const;
  static int encode_empty() { return 0; }
  static int encode_vertex(VertexIx v) { return 1 + v; }
  static int encode_hedge(const OrthoRep& rep, int e) { return 1 + rep.vertex_count() + e; }
  static int encode_vedge(const OrthoRep& rep, int e) {
    return 1 + rep.vertex_count() + rep.edge_count() + e;
  }
};

// Element sets over vertices 0..n-1 and edges n..n+m-1.
using ElementSet = std::vector<char>;

struct CutParts {
  ElementSet left, on, right;
};

// Partitions the representation along the column cut. Throws
// InconsistentTuple when the tuple cannot appear in any drawing.
CutParts split_by_cut(const OrthoRep& rep, const ColumnTuple& t);

// Definitional predecessor test: the left part grows by exactly what the
// previous column consumed, and horizontal edges continue row by row.
bool direct_predecessor(const OrthoRep& rep, const ColumnTuple& prev, const ColumnTuple& cur);

// Decides whether a drawing on a grid of h horizontal lines exists. The
// full_scan mode re-runs the decision by scanning all consistent tuples
// (viable for tiny inputs only).
bool feasible_at_height(const OrthoRep& rep, int h, bool full_scan = false);

// Minimum feasible column count at the given height, with a witness
// reconstructed from the predecessor breadcrumbs.
struct HeightWitness {
  int columns = 0;
  Drawing drawing;
};
std::optional<HeightWitness> min_width_at_height(const OrthoRep& rep, int h);

// Sweeps h = 1..h_max and returns the best width x height product as a
// drawing. Throws InfeasibleWithinBound when no height fits.
struct HeightSearch {
  Drawing drawing;
  int64_t best_area = -1;  // (columns-1) * (h-1) of the best sweep entry
  int best_h = -1;
  int best_columns = -1;
};
HeightSearch min_area_via_height(const OrthoRep& rep, int h_max);

// All consistent tuples of the given height; exponential, test use only.
std::vector<ColumnTuple> enumerate_consistent_tuples(const OrthoRep& rep, int h);

}  // namespace orthopress
