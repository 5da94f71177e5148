#include "orthopress/ortho_rep.hpp"

#include <algorithm>
#include <set>
#include <map>

namespace orthopress {

namespace {
int64_t edge_key(VertexIx u, VertexIx v) {
  if (u > v) std::swap(u, v);
  return (static_cast<int64_t>(u) << 32) | static_cast<uint32_t>(v);
}
}  // namespace

OrthoRep OrthoRep::build(const std::vector<std::string>& ids,
                         const std::vector<EdgeSpec>& edges,
                         std::string name) {
  OrthoRep rep;
  rep.name_ = std::move(name);
  rep.ids_ = ids;
  std::sort(rep.ids_.begin(), rep.ids_.end());
  rep.ids_.erase(std::unique(rep.ids_.begin(), rep.ids_.end()), rep.ids_.end());
  if (rep.ids_.size() != ids.size())
    throw ValidationError("duplicate vertex declaration");
  for (VertexIx i = 0; i < static_cast<VertexIx>(rep.ids_.size()); ++i)
    rep.index_[rep.ids_[i]] = i;
  rep.adj_.assign(rep.ids_.size(), {kNoVertex, kNoVertex, kNoVertex, kNoVertex});

  for (const auto& e : edges) {
    auto it_u = rep.index_.find(e.from);
    auto it_v = rep.index_.find(e.to);
    if (it_u == rep.index_.end() || it_v == rep.index_.end())
      throw ValidationError("edge references undeclared vertex '" +
                            (it_u == rep.index_.end() ? e.from : e.to) + "'");
    VertexIx u = it_u->second, v = it_v->second;
    if (u == v) throw ValidationError("self-loop at vertex '" + e.from + "'");
    VertexIx& slot_u = rep.adj_[u][static_cast<int>(e.dir)];
    VertexIx& slot_v = rep.adj_[v][static_cast<int>(reverse(e.dir))];
    if (slot_u != kNoVertex && slot_u != v)
      throw DirectionConflict("vertex '" + e.from + "' has two neighbors towards " +
                              std::string(1, dir_char(e.dir)));
    if (slot_v != kNoVertex && slot_v != u)
      throw DirectionConflict("vertex '" + e.to + "' has two neighbors towards " +
                              std::string(1, dir_char(reverse(e.dir))));
    if (slot_u == v && slot_v == u) continue;  // same edge restated
    slot_u = v;
    slot_v = u;
  }

  if (rep.adj_.empty()) throw ValidationError("empty representation");

  for (VertexIx v = 0; v < rep.vertex_count(); ++v) {
    int deg = rep.degree(v);
    if (deg < 1 || deg > 4)
      throw DegreeViolation("vertex '" + rep.ids_[v] + "' has degree " + std::to_string(deg));
  }

  // connectivity
  std::vector<char> seen(rep.vertex_count(), 0);
  std::vector<VertexIx> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexIx v = stack.back();
    stack.pop_back();
    for (Dir d : kAllDirs) {
      VertexIx w = rep.neighbor(v, d);
      if (w != kNoVertex && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != rep.vertex_count()) {
    std::string missing;
    for (VertexIx v = 0; v < rep.vertex_count(); ++v)
      if (!seen[v]) { missing = rep.ids_[v]; break; }
    throw DisconnectedGraph("vertex '" + missing + "' is unreachable from '" + rep.ids_[0] + "'");
  }

  for (VertexIx u = 0; u < rep.vertex_count(); ++u)
    for (Dir d : {Dir::N, Dir::E}) {
      VertexIx v = rep.neighbor(u, d);
      if (v == kNoVertex) continue;
      VertexIx a = u, b = v;
      Dir dir = d;
      if (rep.ids_[b] < rep.ids_[a]) { std::swap(a, b); dir = reverse(d); }
      rep.edge_ix_[edge_key(a, b)] = static_cast<int>(rep.edges_.size());
      rep.edges_.push_back({a, b, dir});
    }
  std::sort(rep.edges_.begin(), rep.edges_.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  for (int i = 0; i < static_cast<int>(rep.edges_.size()); ++i)
    rep.edge_ix_[edge_key(rep.edges_[i].u, rep.edges_[i].v)] = i;
  rep.edge_count_ = static_cast<int>(rep.edges_.size());
  return rep;
}

int OrthoRep::degree(VertexIx v) const {
  int deg = 0;
  for (Dir d : kAllDirs)
    if (neighbor(v, d) != kNoVertex) ++deg;
  return deg;
}

VertexIx OrthoRep::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? kNoVertex : it->second;
}

int OrthoRep::edge_index(VertexIx u, VertexIx v) const {
  auto it = edge_ix_.find(edge_key(u, v));
  return it == edge_ix_.end() ? -1 : it->second;
}

int Face::rotation() const {
  int sum = 0;
  for (const Corner& c : corners) sum += c.turn;
  return sum;
}

namespace {
CornerLabel label_from_turn(int t) {
  if (t == 0) return CornerLabel::Flat;
  if (t == 1) return CornerLabel::Convex;
  return CornerLabel::Reflex;  // -1 and the degree-1 turnaround
}
}  // namespace

FaceSet validate(const OrthoRep& rep) {
  FaceSet fs;
  fs.face_of_dart.assign(rep.vertex_count(), {-1, -1, -1, -1});

  // Trace face orbits. After a dart arrives at v in direction d, the walk
  // continues with the first existing dart scanning clockwise from
  // reverse(d), exclusive; this realizes counterclockwise traversal of
  // internal faces for the rotation system forced by the directions.
  for (VertexIx v0 = 0; v0 < rep.vertex_count(); ++v0) {
    for (Dir d0 : kAllDirs) {
      if (rep.neighbor(v0, d0) == kNoVertex) continue;
      if (fs.face_of_dart[v0][static_cast<int>(d0)] != -1) continue;
      int face_id = static_cast<int>(fs.faces.size());
      Face f;
      VertexIx v = v0;
      Dir d = d0;
      do {
        fs.face_of_dart[v][static_cast<int>(d)] = face_id;
        f.dart_tail.push_back(v);
        f.dart_dir.push_back(d);
        VertexIx head = rep.neighbor(v, d);
        Dir next = reverse(d);
        for (int j = 0; j < 4; ++j) {
          next = rotate_cw(next);
          if (rep.neighbor(head, next) != kNoVertex) break;
        }
        v = head;
        d = next;
      } while (!(v == v0 && d == d0));
      int n = f.size();
      f.corners.resize(n);
      for (int i = 0; i < n; ++i) {
        int t = turn(f.dart_dir[i], f.dart_dir[(i + 1) % n]);
        f.corners[i] = {f.dart_head(i), label_from_turn(t), static_cast<int8_t>(t)};
      }
      fs.faces.push_back(std::move(f));
    }
  }

  for (int i = 0; i < static_cast<int>(fs.faces.size()); ++i) {
    int r = fs.faces[i].rotation();
    if (r == -4) {
      if (fs.external_face != -1)
        throw RotationSumViolation("two faces with rotation -4 (faces " +
                                   std::to_string(fs.external_face) + " and " +
                                   std::to_string(i) + ")");
      fs.external_face = i;
      fs.faces[i].external = true;
    } else if (r != 4) {
      throw RotationSumViolation("face " + std::to_string(i) + " has rotation " +
                                 std::to_string(r) + ", expected +4 or -4");
    }
  }
  if (fs.external_face == -1)
    throw RotationSumViolation("no face with rotation -4");
  return fs;
}

int rot(const Face& f, VertexIx u, VertexIx v) {
  int n = f.size();
  int iu = -1, iv = -1;
  for (int i = 0; i < n; ++i) {
    VertexIx c = f.corners[i].vertex;
    if (iu == -1 && c == u) iu = i;
    if (iv == -1 && c == v) iv = i;
  }
  if (iu == -1 || iv == -1)
    throw VertexNotOnFace("vertex not on face boundary");
  if (iu == iv) return 0;
  int sum = 0;
  for (int i = iu; i != iv; i = (i + 1) % n) sum += f.corners[i].turn;
  return sum;
}

namespace {
// Corner sequence with every degree-1 turnaround split into two unit reflex
// corners; rot ranges for kitty detection may start or end between the two.
std::vector<Corner> expanded_corners(const Face& f) {
  std::vector<Corner> out;
  out.reserve(f.corners.size() + 2);
  for (const Corner& c : f.corners) {
    if (c.turn == -2) {
      out.push_back({c.vertex, CornerLabel::Reflex, -1});
      out.push_back({c.vertex, CornerLabel::Reflex, -1});
    } else {
      out.push_back(c);
    }
  }
  return out;
}
}  // namespace

KittyReport kitty_corners(const OrthoRep&, const FaceSet& fs) {
  KittyReport report;
  std::set<std::tuple<int, VertexIx, VertexIx>> seen;
  for (int fi = 0; fi < static_cast<int>(fs.faces.size()); ++fi) {
    std::vector<Corner> corners = expanded_corners(fs.faces[fi]);
    int n = static_cast<int>(corners.size());
    std::vector<int> reflex;
    for (int i = 0; i < n; ++i)
      if (corners[i].turn < 0) reflex.push_back(i);
    if (reflex.size() < 2) continue;
    std::vector<int> prefix(n + 1, 0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + corners[i].turn;
    int total = prefix[n];
    auto rot_occ = [&](int i, int j) {
      return j >= i ? prefix[j] - prefix[i] : total - (prefix[i] - prefix[j]);
    };
    for (int a : reflex)
      for (int b : reflex) {
        if (a == b) continue;
        if (rot_occ(a, b) != 2) continue;
        VertexIx u = corners[a].vertex, v = corners[b].vertex;
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (seen.insert({fi, u, v}).second) report.pairs.push_back({u, v, fi});
      }
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const KittyPair& a, const KittyPair& b) {
              return std::tie(a.face, a.u, a.v) < std::tie(b.face, b.u, b.v);
            });
  std::set<VertexIx> verts;
  for (const KittyPair& p : report.pairs) {
    verts.insert(p.u);
    verts.insert(p.v);
  }
  report.kitty_vertices.assign(verts.begin(), verts.end());
  return report;
}

KittyReport kitty_corners(const OrthoRep& rep) {
  return kitty_corners(rep, validate(rep));
}

namespace {
// Existence-only kitty test, linear in the face size: some ordered reflex
// pair (i, j) of distinct vertices with rotation exactly 2 from i to j.
bool face_has_kitty(const Face& f) {
  std::vector<Corner> corners = expanded_corners(f);
  int n = static_cast<int>(corners.size());
  std::vector<int> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + corners[i].turn;
  int total = prefix[n];
  std::map<int, int> later;  // prefix value -> reflex positions still ahead
  for (int i = 0; i < n; ++i)
    if (corners[i].turn < 0) ++later[prefix[i]];
  std::set<int> before;
  for (int j = 0; j < n; ++j) {
    if (corners[j].turn >= 0) continue;
    if (--later[prefix[j]] == 0) later.erase(prefix[j]);
    if (before.count(prefix[j] - 2)) return true;  // i < j
    auto it = later.find(prefix[j] - 2 + total);   // i > j, wrapped range
    if (it != later.end()) return true;
    before.insert(prefix[j]);
  }
  return false;
}
}  // namespace

bool is_turn_regular(const OrthoRep& rep) {
  FaceSet fs = validate(rep);
  for (const Face& f : fs.faces)
    if (face_has_kitty(f)) return false;
  return true;
}

}  // namespace orthopress
