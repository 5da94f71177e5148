#include "orthopress/chain_dag.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace orthopress {

int FaceWalks::rotation(int w) const {
  const Walk& walk = walks[w];
  int n = walk.size();
  int sum = 0;
  for (int i = 0; i < n; ++i) sum += turn(walk.dir[i], walk.dir[(i + 1) % n]);
  return sum;
}

FaceWalks face_walks(const OrthoRep& rep, const FaceSet& fs) {
  FaceWalks out;
  out.handle_count = rep.vertex_count();
  out.walks.reserve(fs.faces.size());
  for (const Face& f : fs.faces) {
    FaceWalks::Walk w;
    w.tail = std::vector<int>(f.dart_tail.begin(), f.dart_tail.end());
    w.dir = f.dart_dir;
    w.external = f.external;
    out.walks.push_back(std::move(w));
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ChainDag derive_chain_dag(const FaceWalks& walks, Axis axis,
                          const std::vector<std::pair<int, int>>& extra_unions) {
  ChainDag dag;
  dag.axis = axis;
  int h = walks.handle_count;
  UnionFind uf(h);
  auto chain_dart = [axis](Dir d) {
    return axis == Axis::X ? is_vertical(d) : is_horizontal(d);
  };
  for (const auto& w : walks.walks)
    for (int i = 0; i < w.size(); ++i)
      if (chain_dart(w.dir[i])) uf.unite(w.tail[i], w.head(i));
  for (auto [a, b] : extra_unions) uf.unite(a, b);

  dag.chain_of.assign(h, -1);
  for (int v = 0; v < h; ++v) {
    int r = uf.find(v);
    if (dag.chain_of[r] == -1) {
      dag.chain_of[r] = static_cast<int>(dag.chains.size());
      dag.chains.emplace_back();
    }
    dag.chain_of[v] = dag.chain_of[r];
    dag.chains[dag.chain_of[v]].push_back(v);
  }

  std::set<std::pair<int, int>> arcset;
  for (const auto& w : walks.walks)
    for (int i = 0; i < w.size(); ++i) {
      Dir d = w.dir[i];
      if (chain_dart(d)) continue;
      int a = dag.chain_of[w.tail[i]], b = dag.chain_of[w.head(i)];
      bool forward = (axis == Axis::X) ? d == Dir::E : d == Dir::N;
      arcset.insert(forward ? std::pair{a, b} : std::pair{b, a});
    }
  dag.arcs.assign(arcset.begin(), arcset.end());
  dag.out.assign(dag.node_count(), {});
  dag.in.assign(dag.node_count(), {});
  for (auto [a, b] : dag.arcs) {
    dag.out[a].push_back(b);
    dag.in[b].push_back(a);
  }
  return dag;
}

ChainDag build_chain_dag(const OrthoRep& rep, Axis axis) {
  return derive_chain_dag(face_walks(rep, validate(rep)), axis);
}

ChainDag build_relation_dag(const OrthoRep& rep, Axis axis) {
  FaceWalks walks = face_walks(rep, validate(rep));
  ChainDag dag = derive_chain_dag(walks, axis);
  UpwardLabeling lab = upward_labeling(dag, walks);
  Saturator sat = saturate(dag, lab, SaturateMode::Lenient);
  std::set<std::pair<int, int>> arcset(dag.arcs.begin(), dag.arcs.end());
  for (const auto& a : sat.arcs)
    if (a.from >= 0 && a.to >= 0) arcset.insert({a.from, a.to});
  dag.arcs.assign(arcset.begin(), arcset.end());
  dag.out.assign(dag.node_count(), {});
  dag.in.assign(dag.node_count(), {});
  for (auto [a, b] : dag.arcs) {
    dag.out[a].push_back(b);
    dag.in[b].push_back(a);
  }
  return dag;
}

namespace {
bool reaches(const ChainDag& dag, int from, int to) {
  if (from == to) return true;
  std::vector<char> seen(dag.node_count(), 0);
  std::vector<int> stack = {from};
  seen[from] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : dag.out[a]) {
      if (b == to) return true;
      if (!seen[b]) {
        seen[b] = 1;
        stack.push_back(b);
      }
    }
  }
  return false;
}
}  // namespace

Reach coreachable(const ChainDag& dag, VertexIx u, VertexIx v) {
  int cu = dag.chain_of[u], cv = dag.chain_of[v];
  if (cu == cv) return Reach::SameChain;
  if (reaches(dag, cu, cv)) return Reach::Forward;
  if (reaches(dag, cv, cu)) return Reach::Backward;
  return Reach::Incomparable;
}

std::vector<std::vector<char>> reachability_closure(const ChainDag& dag) {
  int n = dag.node_count();
  std::vector<std::vector<char>> closure(n, std::vector<char>(n, 0));
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : dag.out[a])
        if (!closure[s][b]) {
          closure[s][b] = 1;
          stack.push_back(b);
        }
    }
  }
  return closure;
}

UpwardLabeling upward_labeling(const ChainDag& dag, const FaceWalks& walks) {
  UpwardLabeling lab;
  lab.large_count.assign(dag.node_count(), 0);
  auto arc_dart = [&dag](Dir d) {
    return dag.axis == Axis::X ? is_horizontal(d) : is_vertical(d);
  };
  const Dir fwd = dag.axis == Axis::X ? Dir::E : Dir::N;
  const Dir bwd = reverse(fwd);

  for (int wi = 0; wi < static_cast<int>(walks.walks.size()); ++wi) {
    const auto& w = walks.walks[wi];
    UpwardLabeling::FaceInfo info;
    info.external = w.external;
    int n = w.size();
    std::vector<int> arc_pos;
    for (int i = 0; i < n; ++i)
      if (arc_dart(w.dir[i])) arc_pos.push_back(i);
    info.has_arcs = !arc_pos.empty();
    if (info.has_arcs) {
      std::vector<int> level(n + 1, 0);  // corner-rotation prefix
      for (int i = 0; i < n; ++i)
        level[i + 1] = level[i] + turn(w.dir[i], w.dir[(i + 1) % n]);
      int m = static_cast<int>(arc_pos.size());
      for (int a = 0; a < m; ++a) {
        int i = arc_pos[a];
        int j = arc_pos[(a + 1) % m];
        Dir din = w.dir[i], dout = w.dir[j];
        bool source = (din == bwd && dout == fwd);
        bool sink = (din == fwd && dout == bwd);
        if (!source && !sink) continue;
        int r = j > i ? level[j] - level[i] : level[n] - level[i] + level[j];
        if (r == 0 || (r & 1))
          throw LabelingInconsistent("switch junction with rotation " + std::to_string(r) +
                                     " in face " + std::to_string(wi));
        int node = dag.chain_of[w.head(i)];
        AngleLabel l = r < 0 ? AngleLabel::Large : AngleLabel::Small;
        if (l == AngleLabel::Large) ++lab.large_count[node];
        info.switches.push_back(
            {node, source ? SwitchKind::Source : SwitchKind::Sink, l, i, level[i]});
        if (source) ++info.nf;
      }
      info.total_rotation = level[n];
      int sinks = static_cast<int>(info.switches.size()) - info.nf;
      if (sinks != info.nf)
        throw LabelingInconsistent("face " + std::to_string(wi) + " has " +
                                   std::to_string(info.nf) + " source switches but " +
                                   std::to_string(sinks) + " sink switches");
      info.cap = info.external ? info.nf + 1 : info.nf - 1;
      int large = 0;
      for (const auto& s : info.switches)
        if (s.label == AngleLabel::Large) ++large;
      if (large != info.cap)
        throw LabelingInconsistent("face " + std::to_string(wi) + " carries " +
                                   std::to_string(large) + " large angles, cap is " +
                                   std::to_string(info.cap));
    }
    lab.faces.push_back(std::move(info));
  }

  // property (a): inner nodes no large angle, source/sink nodes exactly one
  if (dag.node_count() > 1) {
    for (int v = 0; v < dag.node_count(); ++v) {
      bool extreme = dag.in[v].empty() || dag.out[v].empty();
      int expect = extreme ? 1 : 0;
      if (lab.large_count[v] != expect)
        throw LabelingInconsistent("node " + std::to_string(v) + " carries " +
                                   std::to_string(lab.large_count[v]) +
                                   " large angles, expected " + std::to_string(expect));
    }
  }
  return lab;
}

namespace {

// A large angle is saturated by the small angle sitting at rotation exactly
// 0 along the face walk (which forces equal switch kinds). Everything else
// either attaches to the super-source/sink or needs no arc at all.
int rot_zero_partner(const UpwardLabeling::FaceInfo& face, int u) {
  const auto& sw = face.switches;
  int m = static_cast<int>(sw.size());
  for (int step = 1; step < m; ++step) {
    int q = (u + step) % m;
    int r = q > u ? sw[q].level - sw[u].level
                  : face.total_rotation + sw[q].level - sw[u].level;
    if (r != 0) continue;
    if (sw[q].label != AngleLabel::Small) continue;
    if (sw[q].kind != sw[u].kind) continue;
    if (sw[q].node == sw[u].node) continue;
    return q;
  }
  return -1;
}

}  // namespace

Saturator saturate(const ChainDag& dag, const UpwardLabeling& lab, SaturateMode mode) {
  (void)dag;
  Saturator sat;
  for (int fi = 0; fi < static_cast<int>(lab.faces.size()); ++fi) {
    const auto& face = lab.faces[fi];
    if (!face.has_arcs) continue;
    const auto& sw = face.switches;
    for (int u = 0; u < static_cast<int>(sw.size()); ++u) {
      if (sw[u].label != AngleLabel::Large) continue;
      int v = rot_zero_partner(face, u);
      if (v >= 0) {
        if (sw[u].kind == SwitchKind::Source)
          sat.arcs.push_back({sw[v].node, sw[u].node, Saturator::SourcePair});
        else
          sat.arcs.push_back({sw[u].node, sw[v].node, Saturator::SinkPair});
      } else if (face.external) {
        if (sw[u].kind == SwitchKind::Source)
          sat.arcs.push_back({-1, sw[u].node, Saturator::FromSuperSource});
        else
          sat.arcs.push_back({sw[u].node, -2, Saturator::ToSuperSink});
      } else if (mode == SaturateMode::Strict) {
        throw AmbiguousSaturation("internal face " + std::to_string(fi) +
                                  " has an unsaturated large angle at node " +
                                  std::to_string(sw[u].node));
      }
    }
  }
  return sat;
}

std::vector<int> longest_path_layering(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : arcs) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> value(n, 0), q;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) q.push_back(i);
  size_t done = 0;
  for (size_t qi = 0; qi < q.size(); ++qi) {
    int a = q[qi];
    ++done;
    for (int b : out[a]) {
      value[b] = std::max(value[b], value[a] + 1);
      if (--indeg[b] == 0) q.push_back(b);
    }
  }
  if (done != static_cast<size_t>(n)) throw CycleDetected("directed cycle in layering input");
  return value;
}

Numbering optimal_numbering(const ChainDag& dag, const Saturator& sat) {
  int nc = dag.node_count();
  int s = nc, t = nc + 1;
  std::vector<std::pair<int, int>> arcs = dag.arcs;
  for (const auto& a : sat.arcs) {
    int from = a.from == -1 ? s : a.from;
    int to = a.to == -2 ? t : a.to;
    arcs.push_back({from, to});
  }
  std::vector<int> indeg(nc + 2, 0), outdeg(nc + 2, 0);
  for (auto [a, b] : arcs) {
    ++outdeg[a];
    ++indeg[b];
  }
  if (nc > 1) {
    for (int v = 0; v < nc; ++v) {
      if (indeg[v] == 0)
        throw AmbiguousSaturation("saturated DAG has extra source node " + std::to_string(v));
      if (outdeg[v] == 0)
        throw AmbiguousSaturation("saturated DAG has extra sink node " + std::to_string(v));
    }
  }
  std::vector<int> value = longest_path_layering(nc + 2, arcs);
  int lo = nc > 0 ? *std::min_element(value.begin(), value.begin() + nc) : 0;
  Numbering num;
  num.value.assign(value.begin(), value.begin() + nc);
  for (int& v : num.value) v -= lo;
  return num;
}

}  // namespace orthopress
