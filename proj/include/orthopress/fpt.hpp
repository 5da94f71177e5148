#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "orthopress/chain_dag.hpp"
#include "orthopress/drawing.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress {

// Kitty corners of one face in boundary order, with the data chord surgery
// needs: the corner's dart position in the face walk and the free rays the
// pseudo paths leave along.
struct KittyPolygon {
  int face = -1;
  std::vector<VertexIx> verts;
  std::vector<int> corner_pos;
  std::vector<Dir> stub_vertical;
  std::vector<Dir> stub_horizontal;

  int k() const { return static_cast<int>(verts.size()); }
};

std::vector<KittyPolygon> kitty_polygons(const OrthoRep& rep, const FaceSet& fs,
                                         const KittyReport& kr);

// All triangulations of a convex polygon on k >= 2 cyclically ordered
// vertices, as chord sets (diagonals only); exactly Catalan(k-2) entries.
std::vector<std::vector<std::pair<int, int>>> enumerate_triangulations(int k);

// Boundary edges followed by the triangulation's chords, lexicographic.
std::vector<std::pair<int, int>> polygon_edges(int k,
                                               const std::vector<std::pair<int, int>>& chords);

enum class ChordRel : uint8_t { Before, After, Merge };

// One face, one axis: a triangulation choice plus a relation per edge.
struct FaceAxisConfig {
  int tri = 0;
  std::vector<ChordRel> rel;
};

// Number of (triangulation x relation) configurations for a face with k
// kitty corners on one axis: Catalan(k-2) * 3^(2k-3), i.e. 3 for k = 2.
int64_t face_axis_config_count(int k);

struct FptCandidate {
  int x_config = -1, y_config = -1;
  int64_t area = -1;
  bool planar = false;
};

struct FptOptions {
  bool collect = false;       // keep one record per candidate pair
  bool cutoff = true;         // skip the sweep when the area cannot improve
  int64_t max_candidates = 200000000;
};

struct FptResult {
  Drawing drawing;
  int64_t area = -1;
  int64_t x_configs = 0, y_configs = 0;          // enumerated per axis
  int64_t x_usable = 0, y_usable = 0;            // survived augmentation
  int64_t candidates = 0, planar_candidates = 0;
  std::vector<FptCandidate> log;                 // when collect is set
};

FptResult compact_fpt_detailed(const OrthoRep& rep, const FptOptions& opt = {});
Drawing compact_fpt(const OrthoRep& rep);

}  // namespace orthopress
