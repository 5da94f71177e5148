#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orthopress/direction.hpp"
#include "orthopress/errors.hpp"

namespace orthopress {

using VertexIx = int32_t;
constexpr VertexIx kNoVertex = -1;

struct EdgeSpec {
  std::string from, to;
  Dir dir;  // direction of the dart from -> to
};

// An oriented planar orthogonal representation. Every bend is a degree-2
// vertex, every dart carries a fixed axis direction, and each vertex has at
// most one neighbor per direction. Vertex ids are opaque strings; internally
// vertices are dense indices in sorted-id order, so iteration is
// deterministic. Immutable after build().
class OrthoRep {
 public:
  static OrthoRep build(const std::vector<std::string>& ids,
                        const std::vector<EdgeSpec>& edges,
                        std::string name = "");

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  VertexIx neighbor(VertexIx v, Dir d) const { return adj_[v][static_cast<int>(d)]; }
  int degree(VertexIx v) const;
  const std::string& id_of(VertexIx v) const { return ids_[v]; }
  VertexIx index_of(const std::string& id) const;  // kNoVertex if absent
  const std::string& name() const { return name_; }

  // Edges as (u, v, dir of u->v) with u < v's dart canonical: u is the tail
  // whose id sorts first. Sorted by (u, v).
  struct Edge { VertexIx u, v; Dir dir; };
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_index(VertexIx u, VertexIx v) const;  // -1 if not adjacent

 private:
  std::vector<std::string> ids_;
  std::map<std::string, VertexIx> index_;
  std::vector<std::array<VertexIx, 4>> adj_;
  std::vector<Edge> edges_;
  std::map<int64_t, int> edge_ix_;
  int edge_count_ = 0;
  std::string name_;
};

enum class CornerLabel : uint8_t { Flat, Convex, Reflex };

inline char corner_char(CornerLabel l) {
  return l == CornerLabel::Flat ? 'F' : l == CornerLabel::Convex ? 'C' : 'R';
}

struct Corner {
  VertexIx vertex;
  CornerLabel label;
  int8_t turn;  // +1 convex, -1 reflex, 0 flat, -2 degree-1 turnaround
};

// One face boundary walk. Dart i runs dart_tail[i] -> dart_tail[i+1] in
// direction dart_dir[i]; corner i sits at the head of dart i. Internal faces
// are traversed counterclockwise (rotation +4), the external face clockwise
// (rotation -4).
struct Face {
  std::vector<VertexIx> dart_tail;
  std::vector<Dir> dart_dir;
  std::vector<Corner> corners;
  bool external = false;

  int size() const { return static_cast<int>(dart_tail.size()); }
  int rotation() const;
  VertexIx dart_head(int i) const { return dart_tail[(i + 1) % size()]; }
};

struct FaceSet {
  std::vector<Face> faces;
  int external_face = -1;
  // face id of the dart leaving v in direction d, or -1.
  std::vector<std::array<int32_t, 4>> face_of_dart;

  int face_of(VertexIx v, Dir d) const { return face_of_dart[v][static_cast<int>(d)]; }
};

// Extracts the full face set and checks every OrthoRep invariant that build()
// cannot see locally (connectivity is checked in build; rotation sums here).
FaceSet validate(const OrthoRep& rep);

// Sum of corner rotations from u (included) to v (excluded) along the face
// walk, using the first boundary occurrence of each vertex.
int rot(const Face& f, VertexIx u, VertexIx v);

struct KittyPair {
  VertexIx u, v;  // u < v
  int face;
};

struct KittyReport {
  std::vector<KittyPair> pairs;          // sorted (face, u, v)
  std::vector<VertexIx> kitty_vertices;  // sorted, distinct
  int k() const { return static_cast<int>(kitty_vertices.size()); }
};

KittyReport kitty_corners(const OrthoRep& rep, const FaceSet& faces);
KittyReport kitty_corners(const OrthoRep& rep);

bool is_turn_regular(const OrthoRep& rep);

}  // namespace orthopress
