#include "orthopress/compact_tr.hpp"

namespace orthopress {

std::vector<int> compact_axis(const OrthoRep& rep, const FaceSet& fs, Axis axis) {
  FaceWalks walks = face_walks(rep, fs);
  ChainDag dag = derive_chain_dag(walks, axis);
  UpwardLabeling lab = upward_labeling(dag, walks);
  Saturator sat = saturate(dag, lab);
  Numbering num = optimal_numbering(dag, sat);
  std::vector<int> coord(rep.vertex_count());
  for (VertexIx v = 0; v < rep.vertex_count(); ++v)
    coord[v] = num.value[dag.chain_of[v]];
  return coord;
}

Drawing compact_turn_regular(const OrthoRep& rep) {
  FaceSet fs = validate(rep);
  if (kitty_corners(rep, fs).k() != 0)
    throw NotTurnRegular("representation has kitty corners");
  std::vector<int> xs = compact_axis(rep, fs, Axis::X);
  std::vector<int> ys = compact_axis(rep, fs, Axis::Y);
  Drawing d;
  d.pos.resize(rep.vertex_count());
  for (VertexIx v = 0; v < rep.vertex_count(); ++v) d.pos[v] = {xs[v], ys[v]};
  return d;
}

}  // namespace orthopress
