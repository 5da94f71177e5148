#include "orthopress/fpt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <cstdio>
#include <cstdlib>

#include "orthopress/compact_tr.hpp"
#include "orthopress/sweep.hpp"

namespace orthopress {

namespace {

// Free rays of a unit reflex corner with the given incoming/outgoing dart
// directions: everything except the two boundary rays.
std::pair<Dir, Dir> free_rays(Dir din, Dir dout) {
  bool used[4] = {false, false, false, false};
  used[static_cast<int>(reverse(din))] = true;
  used[static_cast<int>(dout)] = true;
  Dir v = Dir::N, h = Dir::E;
  for (Dir d : kAllDirs)
    if (!used[static_cast<int>(d)]) {
      if (is_vertical(d)) v = d;
      else h = d;
    }
  return {v, h};
}

}  // namespace

std::vector<KittyPolygon> kitty_polygons(const OrthoRep& rep, const FaceSet& fs,
                                         const KittyReport& kr) {
  (void)rep;
  std::vector<KittyPolygon> polys;
  std::map<int, std::set<VertexIx>> by_face;
  for (const KittyPair& p : kr.pairs) {
    by_face[p.face].insert(p.u);
    by_face[p.face].insert(p.v);
  }
  for (auto& [fi, verts] : by_face) {
    const Face& f = fs.faces[fi];
    KittyPolygon poly;
    poly.face = fi;

    // expanded corners: degree-1 turnarounds split into two unit reflexes
    struct Occ {
      VertexIx v;
      int corner;
      int turn;
      bool second_half;
    };
    std::vector<Occ> occ;
    for (int i = 0; i < f.size(); ++i) {
      const Corner& c = f.corners[i];
      if (c.turn == -2) {
        occ.push_back({c.vertex, i, -1, false});
        occ.push_back({c.vertex, i, -1, true});
      } else {
        occ.push_back({c.vertex, i, c.turn, false});
      }
    }
    int m = static_cast<int>(occ.size());
    std::vector<int> prefix(m + 1, 0);
    for (int i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + occ[i].turn;
    int total = prefix[m];
    auto rot_occ = [&](int i, int j) {
      return j >= i ? prefix[j] - prefix[i] : total - (prefix[i] - prefix[j]);
    };
    std::vector<int> reflex;
    for (int i = 0; i < m; ++i)
      if (occ[i].turn < 0) reflex.push_back(i);

    // per kitty vertex: the reflex occurrence witnessing a rot-2 pair
    std::set<VertexIx> pending = verts;
    for (int i : reflex) {
      if (!pending.count(occ[i].v)) continue;
      bool witness = false;
      for (int j : reflex) {
        if (occ[j].v == occ[i].v || !verts.count(occ[j].v)) continue;
        if (rot_occ(i, j) == 2 || rot_occ(j, i) == 2) {
          witness = true;
          break;
        }
      }
      if (!witness) continue;
      pending.erase(occ[i].v);
      poly.verts.push_back(occ[i].v);
      poly.corner_pos.push_back(occ[i].corner);
      Dir din = f.dart_dir[occ[i].corner];
      Dir dout;
      if (f.corners[occ[i].corner].turn == -2) {
        if (occ[i].second_half) din = rotate_cw(din);
        dout = rotate_cw(din);
      } else {
        dout = f.dart_dir[(occ[i].corner + 1) % f.size()];
      }
      auto [v, h] = free_rays(din, dout);
      poly.stub_vertical.push_back(v);
      poly.stub_horizontal.push_back(h);
    }
    polys.push_back(std::move(poly));
  }
  return polys;
}

std::vector<std::vector<std::pair<int, int>>> enumerate_triangulations(int k) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (k < 2) return out;
  if (k <= 3) {
    out.push_back({});
    return out;
  }
  // guess the apex of the triangle on each sub-polygon's base edge
  struct Rec {
    std::vector<std::vector<std::pair<int, int>>>& out;
    std::vector<std::pair<int, int>> acc;
    void split(std::vector<std::pair<int, int>> ranges) {
      while (!ranges.empty() && ranges.back().second - ranges.back().first <= 1)
        ranges.pop_back();
      if (ranges.empty()) {
        auto sorted = acc;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        return;
      }
      auto [lo, hi] = ranges.back();
      ranges.pop_back();
      for (int mid = lo + 1; mid < hi; ++mid) {
        int added = 0;
        if (mid - lo > 1) {
          acc.push_back({lo, mid});
          ++added;
        }
        if (hi - mid > 1) {
          acc.push_back({mid, hi});
          ++added;
        }
        auto next = ranges;
        next.push_back({lo, mid});
        next.push_back({mid, hi});
        split(std::move(next));
        while (added--) acc.pop_back();
      }
    }
  } rec{out, {}};
  rec.split({{0, k - 1}});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<int, int>> polygon_edges(
    int k, const std::vector<std::pair<int, int>>& chords) {
  std::vector<std::pair<int, int>> edges;
  if (k == 2) {
    edges.push_back({0, 1});
  } else {
    for (int i = 0; i < k; ++i)
      edges.push_back({std::min(i, (i + 1) % k), std::max(i, (i + 1) % k)});
  }
  edges.insert(edges.end(), chords.begin(), chords.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

int64_t face_axis_config_count(int k) {
  if (k < 2) return 1;
  int64_t cat = 1;
  for (int i = 0; i < k - 2; ++i) cat = cat * 2 * (2 * i + 1) / (i + 2);
  int edges = k == 2 ? 1 : 2 * k - 3;
  int64_t p3 = 1;
  for (int i = 0; i < edges; ++i) p3 *= 3;
  return cat * p3;
}

namespace {

struct SurgWalk {
  std::vector<int> tail;
  std::vector<Dir> dir;
  std::vector<int> tag;  // corner identity, -1 for pseudo corners
  int size() const { return static_cast<int>(tail.size()); }
};

struct Surgery {
  std::vector<SurgWalk> walks;
  int next_handle = 0;
  std::vector<std::pair<int, int>> extra_unions;
};

int find_tag(const SurgWalk& w, int tag) {
  for (int i = 0; i < w.size(); ++i)
    if (w.tag[i] == tag) return i;
  return -1;
}

// Free chord-axis rays at corner p, preferred ray first. Tips have two.
std::vector<Dir> corner_rays(const SurgWalk& w, int p, bool x_axis, Dir preferred) {
  int n = w.size();
  Dir din = w.dir[p], dout = w.dir[(p + 1) % n];
  bool used[4] = {false, false, false, false};
  used[static_cast<int>(reverse(din))] = true;
  used[static_cast<int>(dout)] = true;
  std::vector<Dir> rays;
  if (!used[static_cast<int>(preferred)] &&
      (x_axis ? is_vertical(preferred) : is_horizontal(preferred)))
    rays.push_back(preferred);
  for (Dir d : kAllDirs)
    if (!used[static_cast<int>(d)] && d != preferred &&
        (x_axis ? is_vertical(d) : is_horizontal(d)))
      rays.push_back(d);
  return rays;
}

// Splits a chain dart adjacent to corner p with a flat pseudo vertex and
// returns its handle. The chord leaves the new corner along `ray`; since a
// face lies to the left of its walk, only a pass of direction cw(ray) can
// host that corner, which decides between the entering and leaving dart.
// Returns -1 when neither qualifies (the chord then stubs off the vertex).
int subdivide_attach(SurgWalk& w, int p, VertexIx vtx, Dir ray, int& next_handle,
                     std::vector<std::pair<int, int>>& unions) {
  int n = w.size();
  Dir want = rotate_cw(ray);
  int j = (p + 1) % n;
  if (w.dir[j] == want) {
    // dart leaving the corner: u -> m -> old head
    int m = next_handle++;
    unions.push_back({vtx, m});
    int old_tag = w.tag[j];
    w.tail.insert(w.tail.begin() + j + 1, m);
    w.dir.insert(w.dir.begin() + j + 1, want);
    w.tag.insert(w.tag.begin() + j + 1, old_tag);
    w.tag[j] = -1;  // flat corner at m
    return m;
  }
  if (w.dir[p] == want) {
    // dart entering the corner: old tail -> m -> u
    int m = next_handle++;
    unions.push_back({vtx, m});
    int old_tag = w.tag[p];
    w.tail.insert(w.tail.begin() + p + 1, m);
    w.dir.insert(w.dir.begin() + p + 1, want);
    w.tag.insert(w.tag.begin() + p + 1, old_tag);
    w.tag[p] = -1;
    return m;
  }
  return -1;
}

int corner_of_handle(const SurgWalk& w, int handle) {
  int n = w.size();
  for (int i = 0; i < n; ++i)
    if (w.tail[(i + 1) % n] == handle) return i;
  return -1;
}

bool rotation_legal(const SurgWalk& w) {
  int n = w.size(), sum = 0;
  for (int i = 0; i < n; ++i) sum += turn(w.dir[i], w.dir[(i + 1) % n]);
  return sum == 4 || sum == -4;
}

struct ChordSpec {
  int tag_u, tag_v;
  VertexIx u, v;
  bool x_axis;
  Dir fb_u, fb_v;
  std::optional<Dir> middle;  // empty for merges
  bool deferred = false;
};

constexpr int kMaxVariants = 64;

// Relation of the two vertices' chains in the current surgery state:
// 0 unrelated, +1 path u->v, -1 path v->u, 2 same chain, 3 cyclic.
int chain_relation(const Surgery& s, VertexIx u, VertexIx v, bool x_axis) {
  int h = s.next_handle;
  std::vector<int> parent(h);
  for (int i = 0; i < h; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  auto chain_dart = [x_axis](Dir d) { return x_axis ? is_vertical(d) : is_horizontal(d); };
  for (const auto& w : s.walks)
    for (int i = 0; i < w.size(); ++i)
      if (chain_dart(w.dir[i])) unite(w.tail[i], w.tail[(i + 1) % w.size()]);
  for (auto [a, b] : s.extra_unions) unite(a, b);
  int cu = find(u), cv = find(v);
  if (cu == cv) return 2;
  std::map<int, std::vector<int>> out;
  Dir fwd = x_axis ? Dir::E : Dir::N;
  for (const auto& w : s.walks)
    for (int i = 0; i < w.size(); ++i) {
      Dir d = w.dir[i];
      if (chain_dart(d)) continue;
      int a = find(w.tail[i]), b = find(w.tail[(i + 1) % w.size()]);
      if (d == fwd) out[a].push_back(b);
      else out[b].push_back(a);
    }
  auto reaches = [&](int from, int to) {
    std::set<int> seen = {from};
    std::vector<int> stack = {from};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      if (a == to) return true;
      for (int b : out[a])
        if (seen.insert(b).second) stack.push_back(b);
    }
    return false;
  };
  bool uv = reaches(cu, cv), vu = reaches(cv, cu);
  if (uv && vu) return 3;
  if (uv) return 1;
  if (vu) return -1;
  return 0;
}


// Applies chords[ci..] to the surgery state, branching over the legal
// attachment rays of every corner stub and merge; each completed branch is
// one upward-embedding variant of the configuration.
void insert_all(Surgery s, std::vector<ChordSpec> chords, size_t ci,
                std::vector<Surgery>& out) {
  if (static_cast<int>(out.size()) >= kMaxVariants) return;
  if (ci == chords.size()) {
    out.push_back(std::move(s));
    return;
  }
  const ChordSpec& c = chords[ci];
  // a relation the current arcs already force needs no chord at all
  Dir fwd_dir = c.x_axis ? Dir::E : Dir::N;
  int rel = chain_relation(s, c.u, c.v, c.x_axis);
  if (rel == 3) return;
  if (c.middle) {
    int want = *c.middle == fwd_dir ? 1 : -1;
    if (rel == 2) return;            // same chain contradicts a strict order
    if (rel == want) {
      insert_all(std::move(s), chords, ci + 1, out);
      return;
    }
    if (rel == -want) return;        // contradicts the required order
  } else {
    if (rel == 2) {
      insert_all(std::move(s), chords, ci + 1, out);
      return;
    }
    if (rel != 0) return;            // a strict path contradicts equality
  }
  int wi = -1;
  for (int w = 0; w < static_cast<int>(s.walks.size()) && wi < 0; ++w)
    if (find_tag(s.walks[w], c.tag_u) >= 0 && find_tag(s.walks[w], c.tag_v) >= 0) wi = w;
  if (wi < 0) return;
  SurgWalk old = std::move(s.walks[wi]);
  s.walks.erase(s.walks.begin() + wi);


  int pu, pv;
  std::vector<Dir> rays_u, rays_v;
  int m_u = -1, m_v = -1;
  if (c.middle) {
    int p = find_tag(old, c.tag_u);
    m_u = subdivide_attach(old, p, c.u, *c.middle, s.next_handle, s.extra_unions);
    if (m_u < 0) rays_u = corner_rays(old, find_tag(old, c.tag_u), c.x_axis, c.fb_u);
    int q = find_tag(old, c.tag_v);
    m_v = subdivide_attach(old, q, c.v, reverse(*c.middle), s.next_handle, s.extra_unions);
    if (m_v < 0) rays_v = corner_rays(old, find_tag(old, c.tag_v), c.x_axis, c.fb_v);
    pu = m_u >= 0 ? corner_of_handle(old, m_u) : find_tag(old, c.tag_u);
    pv = m_v >= 0 ? corner_of_handle(old, m_v) : find_tag(old, c.tag_v);
  } else {
    pu = find_tag(old, c.tag_u);
    pv = find_tag(old, c.tag_v);
    rays_u = corner_rays(old, pu, c.x_axis, c.fb_u);
    rays_v = corner_rays(old, pv, c.x_axis, c.fb_v);
  }
  if (pu < 0 || pv < 0 || pu == pv) return;

  std::vector<Dir> cu = m_u >= 0 ? std::vector<Dir>{Dir::N} : rays_u;
  std::vector<Dir> cv = m_v >= 0 ? std::vector<Dir>{Dir::N} : rays_v;
  bool any = false;

  for (Dir ray_u : cu) {
    for (Dir ray_v : cv) {
      std::vector<int> fw_tail;
      std::vector<Dir> fw_dir;
      std::vector<std::pair<int, int>> unions;
      int handles_used = 0;
      int end_handle;
      if (!c.middle) {
        if (ray_u != reverse(ray_v)) continue;
        fw_tail = {c.u};
        fw_dir = {ray_u};
        end_handle = c.v;
      } else if (m_u < 0 && m_v < 0) {
        int p1 = s.next_handle, p2 = s.next_handle + 1;
        handles_used = 2;
        unions.push_back({c.u, p1});
        unions.push_back({p2, c.v});
        fw_tail = {c.u, p1, p2};
        fw_dir = {ray_u, *c.middle, reverse(ray_v)};
        end_handle = c.v;
      } else if (m_u < 0) {
        int p1 = s.next_handle;
        handles_used = 1;
        unions.push_back({c.u, p1});
        fw_tail = {c.u, p1};
        fw_dir = {ray_u, *c.middle};
        end_handle = m_v;
      } else if (m_v < 0) {
        int p2 = s.next_handle;
        handles_used = 1;
        unions.push_back({p2, c.v});
        fw_tail = {m_u, p2};
        fw_dir = {*c.middle, reverse(ray_v)};
        end_handle = c.v;
      } else {
        fw_tail = {m_u};
        fw_dir = {*c.middle};
        end_handle = m_v;
      }

      int n = old.size();
      int steps = static_cast<int>(fw_tail.size());
      SurgWalk a;
      for (int i = (pu + 1) % n;; i = (i + 1) % n) {
        a.tail.push_back(old.tail[i]);
        a.dir.push_back(old.dir[i]);
        a.tag.push_back(old.tag[i]);
        if (i == pv) break;
      }
      int boundary_a = a.size();
      for (int i = steps - 1; i >= 0; --i) {
        a.tail.push_back(i + 1 < steps ? fw_tail[i + 1] : end_handle);
        a.dir.push_back(reverse(fw_dir[i]));
        a.tag.push_back(-1);
      }
      SurgWalk b;
      for (int i = 0; i < steps; ++i) {
        b.tail.push_back(fw_tail[i]);
        b.dir.push_back(fw_dir[i]);
        b.tag.push_back(-1);
      }
      for (int i = (pv + 1) % n;; i = (i + 1) % n) {
        b.tail.push_back(old.tail[i]);
        b.dir.push_back(old.dir[i]);
        b.tag.push_back(old.tag[i]);
        if (i == pu) break;
      }
      if (!rotation_legal(a) || !rotation_legal(b)) continue;

      auto ensure_tag = [](SurgWalk& w, int tag, int pos) {
        if (find_tag(w, tag) < 0) w.tag[pos] = tag;
      };
      ensure_tag(a, c.tag_u, a.size() - 1);
      ensure_tag(a, c.tag_v, boundary_a - 1);
      ensure_tag(b, c.tag_v, steps - 1);
      ensure_tag(b, c.tag_u, b.size() - 1);

      any = true;
      Surgery s2 = s;
      s2.next_handle += handles_used;
      for (auto& un : unions) s2.extra_unions.push_back(un);
      s2.walks.push_back(a);
      s2.walks.push_back(b);
      insert_all(std::move(s2), chords, ci + 1, out);
      if (static_cast<int>(out.size()) >= kMaxVariants) return;
    }
  }

  if (any) return;
  // nothing fit here; retry once after the remaining chords, which may
  // identify enough chains to make this one implied or attachable
  s.walks.push_back(std::move(old));
  if (!c.deferred) {
    ChordSpec again = c;
    again.deferred = true;
    chords.erase(chords.begin() + ci);
    chords.push_back(again);
    insert_all(std::move(s), std::move(chords), ci, out);
    return;
  }
  if (!c.middle) {
    // stacked chains: identify the nodes without reshaping the face
    s.extra_unions.push_back({c.u, c.v});
    insert_all(std::move(s), std::move(chords), ci + 1, out);
  }
}

int walk_rotation(const SurgWalk& w) {
  int n = w.size(), sum = 0;
  for (int i = 0; i < n; ++i) sum += turn(w.dir[i], w.dir[(i + 1) % n]);
  return sum;
}

struct AxisEval {
  std::vector<int> coord;
  int width = 0;
};

using TriList = std::vector<std::vector<std::pair<int, int>>>;

// Applies one axis configuration, enumerating the embedding variants of its
// chords, and runs the 1D pipeline on each; returns the distinct usable
// coordinate vectors.
std::vector<AxisEval> eval_axis_config(const OrthoRep& rep, const FaceWalks& base,
                                       const std::vector<KittyPolygon>& polys, Axis axis,
                                       const std::vector<FaceAxisConfig>& config,
                                       const std::vector<TriList>& tris) {
  Surgery init;
  init.next_handle = base.handle_count;
  init.walks.resize(base.walks.size());
  for (size_t w = 0; w < base.walks.size(); ++w) {
    init.walks[w].tail = base.walks[w].tail;
    init.walks[w].dir = base.walks[w].dir;
    init.walks[w].tag.resize(base.walks[w].size());
    for (int i = 0; i < base.walks[w].size(); ++i)
      init.walks[w].tag[i] = static_cast<int>(w) * 1000000 + i;
  }

  std::vector<ChordSpec> chords;
  for (size_t pi = 0; pi < polys.size(); ++pi) {
    const KittyPolygon& poly = polys[pi];
    const FaceAxisConfig& fc = config[pi];
    auto edges = polygon_edges(poly.k(), tris[pi][fc.tri]);
    for (size_t ei = 0; ei < edges.size(); ++ei) {
      auto [ia, ib] = edges[ei];
      ChordRel rel = fc.rel[ei];
      ChordSpec c;
      c.u = poly.verts[ia];
      c.v = poly.verts[ib];
      c.tag_u = poly.face * 1000000 + poly.corner_pos[ia];
      c.tag_v = poly.face * 1000000 + poly.corner_pos[ib];
      c.x_axis = axis == Axis::X;
      c.fb_u = c.x_axis ? poly.stub_vertical[ia] : poly.stub_horizontal[ia];
      c.fb_v = c.x_axis ? poly.stub_vertical[ib] : poly.stub_horizontal[ib];
      Dir fwd = c.x_axis ? Dir::E : Dir::N;
      if (rel == ChordRel::Before) c.middle = fwd;
      else if (rel == ChordRel::After) c.middle = reverse(fwd);
      chords.push_back(c);
    }
  }

  std::vector<Surgery> variants;
  insert_all(std::move(init), chords, 0, variants);

  std::vector<AxisEval> evals;
  std::set<std::vector<int>> seen;
  for (Surgery& sv : variants) {
    FaceWalks aug;
    aug.handle_count = sv.next_handle;
    int externals = 0;
    bool bad = false;
    for (auto& w : sv.walks) {
      int r = walk_rotation(w);
      if (r != 4 && r != -4) {
        bad = true;
        break;
      }
      FaceWalks::Walk out;
      out.tail = w.tail;
      out.dir = w.dir;
      out.external = r == -4;
      externals += out.external;
      aug.walks.push_back(std::move(out));
    }
    if (bad || externals != 1) continue;
    try {
      ChainDag dag = derive_chain_dag(aug, axis, sv.extra_unions);
      UpwardLabeling lab = upward_labeling(dag, aug);
      Saturator sat = saturate(dag, lab);
      Numbering num = optimal_numbering(dag, sat);
      AxisEval ev;
      ev.coord.resize(rep.vertex_count());
      int hi = 0;
      for (VertexIx vv = 0; vv < rep.vertex_count(); ++vv) {
        ev.coord[vv] = num.value[dag.chain_of[vv]];
        hi = std::max(hi, ev.coord[vv]);
      }
      ev.width = hi;
      if (seen.insert(ev.coord).second) evals.push_back(std::move(ev));
    } catch (const Error& e) {
      if (getenv("ORTHOPRESS_FPT_DEBUG")) fprintf(stderr, "reject: %s\n", e.what());
    }
  }
  return evals;
}

}  // namespace

FptResult compact_fpt_detailed(const OrthoRep& rep, const FptOptions& opt) {
  FaceSet fs = validate(rep);
  KittyReport kr = kitty_corners(rep, fs);
  FptResult res;
  if (kr.k() == 0) {
    res.drawing = compact_turn_regular(rep);
    res.area = area(res.drawing);
    res.x_configs = res.y_configs = res.x_usable = res.y_usable = 1;
    res.candidates = res.planar_candidates = 1;
    if (opt.collect) res.log.push_back({0, 0, res.area, true});
    return res;
  }

  FaceWalks base = face_walks(rep, fs);
  std::vector<KittyPolygon> polys = kitty_polygons(rep, fs, kr);
  std::vector<TriList> tris;
  tris.reserve(polys.size());
  for (const auto& poly : polys) tris.push_back(enumerate_triangulations(poly.k()));

  auto enumerate_axis = [&](Axis axis, std::vector<AxisEval>& evals,
                            std::vector<int>& usable_ids) -> int64_t {
    int64_t total = 1;
    for (const auto& poly : polys) total *= face_axis_config_count(poly.k());
    std::vector<FaceAxisConfig> config(polys.size());
    std::vector<int64_t> counter(polys.size(), 0);
    int64_t idx = 0;
    while (true) {
      for (size_t pi = 0; pi < polys.size(); ++pi) {
        int64_t c = counter[pi];
        int64_t per_tri =
            face_axis_config_count(polys[pi].k()) / static_cast<int64_t>(tris[pi].size());
        config[pi].tri = static_cast<int>(c / per_tri);
        int64_t r = c % per_tri;
        auto edges = polygon_edges(polys[pi].k(), tris[pi][config[pi].tri]);
        config[pi].rel.assign(edges.size(), ChordRel::Before);
        for (size_t e = 0; e < edges.size(); ++e) {
          config[pi].rel[e] = static_cast<ChordRel>(r % 3);
          r /= 3;
        }
      }
      if (getenv("ORTHOPRESS_FPT_DEBUG")) {
        fprintf(stderr, "config axis=%c idx=%lld:", axis == Axis::X ? 'X' : 'Y',
                (long long)idx);
        for (size_t pi = 0; pi < polys.size(); ++pi) {
          fprintf(stderr, " tri%d[", config[pi].tri);
          for (auto r : config[pi].rel)
            fprintf(stderr, "%c", r == ChordRel::Before ? '<' : r == ChordRel::After ? '>' : '=');
          fprintf(stderr, "]");
        }
        fprintf(stderr, "\n");
      }
      for (AxisEval& ev : eval_axis_config(rep, base, polys, axis, config, tris)) {
        evals.push_back(std::move(ev));
        usable_ids.push_back(static_cast<int>(idx));
      }
      ++idx;
      size_t pi = 0;
      while (pi < polys.size()) {
        if (++counter[pi] < face_axis_config_count(polys[pi].k())) break;
        counter[pi] = 0;
        ++pi;
      }
      if (pi == polys.size()) break;
    }
    return total;
  };

  std::vector<AxisEval> xs, ys;
  std::vector<int> x_ids, y_ids;
  res.x_configs = enumerate_axis(Axis::X, xs, x_ids);
  res.y_configs = enumerate_axis(Axis::Y, ys, y_ids);
  res.x_usable = static_cast<int64_t>(xs.size());
  res.y_usable = static_cast<int64_t>(ys.size());

  if (res.x_usable * res.y_usable > opt.max_candidates)
    throw Error("configuration stream too large: " +
                std::to_string(res.x_usable * res.y_usable) + " candidates");

  int64_t best = -1;
  Drawing best_drawing;
  Drawing cur;
  cur.pos.resize(rep.vertex_count());
  for (size_t xi = 0; xi < xs.size(); ++xi) {
    for (size_t yi = 0; yi < ys.size(); ++yi) {
      ++res.candidates;
      int64_t a = static_cast<int64_t>(xs[xi].width) * ys[yi].width;
      if (opt.cutoff && best >= 0 && a >= best && !opt.collect) continue;
      for (VertexIx v = 0; v < rep.vertex_count(); ++v)
        cur.pos[v] = {xs[xi].coord[v], ys[yi].coord[v]};
      bool planar = darts_consistent(rep, cur) && sweep_planarity(cur, rep);
      if (opt.collect) res.log.push_back({x_ids[xi], y_ids[yi], a, planar});
      if (!planar) continue;
      ++res.planar_candidates;
      if (best < 0 || a < best) {
        best = a;
        best_drawing = cur;
      } else if (a == best) {
        for (VertexIx v = 0; v < rep.vertex_count(); ++v) {
          if (!(cur.pos[v] == best_drawing.pos[v])) {
            if (std::tie(cur.pos[v].x, cur.pos[v].y) <
                std::tie(best_drawing.pos[v].x, best_drawing.pos[v].y))
              best_drawing = cur;
            break;
          }
        }
      }
    }
  }
  if (best < 0)
    throw NoValidCandidate("no planar candidate drawing for '" + rep.name() + "'");
  res.drawing = best_drawing;
  res.area = best;
  return res;
}

Drawing compact_fpt(const OrthoRep& rep) {
  return compact_fpt_detailed(rep).drawing;
}

}  // namespace orthopress
