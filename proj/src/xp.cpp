// Height-parameterized compaction: a dynamic program over grid columns.
// Each state is the content of one column (an h-tuple of cells); successors
// are generated by landing maximal vertical chains whose westward edges have
// all arrived, instead of scanning the full tuple space.
#include "orthopress/xp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orthopress {

Cell ColumnTuple::decode(const OrthoRep& rep, int row) const {
  int n = rep.vertex_count(), m = rep.edge_count();
  int c = cells[row];
  if (c == 0) return {CellKind::Empty, -1};
  if (c <= n) return {CellKind::Vertex, c - 1};
  if (c <= n + m) return {CellKind::HEdge, c - 1 - n};
  if (c <= n + 2 * m) return {CellKind::VEdge, c - 1 - n - m};
  throw InconsistentTuple("cell encoding out of range");
}

namespace {

int elem_count(const OrthoRep& rep) { return rep.vertex_count() + rep.edge_count(); }
int edge_elem(const OrthoRep& rep, int e) { return rep.vertex_count() + e; }

VertexIx east_end(const OrthoRep::Edge& e) { return e.dir == Dir::E ? e.v : e.u; }
VertexIx west_end(const OrthoRep::Edge& e) { return e.dir == Dir::E ? e.u : e.v; }
VertexIx north_end(const OrthoRep::Edge& e) { return e.dir == Dir::N ? e.v : e.u; }
VertexIx south_end(const OrthoRep::Edge& e) { return e.dir == Dir::N ? e.u : e.v; }

}  // namespace

CutParts split_by_cut(const OrthoRep& rep, const ColumnTuple& t) {
  int n = rep.vertex_count(), m = rep.edge_count(), h = t.height();
  std::vector<int> row_of(n, -1);
  std::map<int, int> hedge_row;
  std::map<int, std::vector<int>> vedge_rows;
  bool any_vertex = false;
  for (int r = 0; r < h; ++r) {
    Cell c = t.decode(rep, r);
    switch (c.kind) {
      case CellKind::Empty: break;
      case CellKind::Vertex:
        if (row_of[c.index] != -1) throw InconsistentTuple("vertex appears twice");
        row_of[c.index] = r;
        any_vertex = true;
        break;
      case CellKind::HEdge: {
        if (is_vertical(rep.edges()[c.index].dir))
          throw InconsistentTuple("vertical edge used as horizontal crossing");
        if (hedge_row.count(c.index)) throw InconsistentTuple("edge crosses twice");
        hedge_row[c.index] = r;
        break;
      }
      case CellKind::VEdge: {
        if (is_horizontal(rep.edges()[c.index].dir))
          throw InconsistentTuple("horizontal edge used as vertical run");
        vedge_rows[c.index].push_back(r);
        break;
      }
    }
  }
  if (!any_vertex)
    throw InconsistentTuple("column holds only crossings and empty points");

  auto check_vertical = [&](int e) {
    const auto& ed = rep.edges()[e];
    int rs = row_of[south_end(ed)], rn = row_of[north_end(ed)];
    if (rs < 0 || rn < 0) throw InconsistentTuple("vertical edge leaves the column");
    if (rn <= rs) throw InconsistentTuple("vertical edge upside down");
    auto it = vedge_rows.find(e);
    int run = it == vedge_rows.end() ? 0 : static_cast<int>(it->second.size());
    if (rn - rs - 1 != run) throw InconsistentTuple("vertical run length mismatch");
    if (run > 0)
      for (int i = 0; i < run; ++i)
        if (it->second[i] != rs + 1 + i) throw InconsistentTuple("vertical run not contiguous");
  };
  std::set<int> vertical_checked;
  for (auto& [e, rows] : vedge_rows) {
    (void)rows;
    check_vertical(e);
    vertical_checked.insert(e);
  }
  for (int v = 0; v < n; ++v) {
    if (row_of[v] < 0) continue;
    for (Dir d : {Dir::N, Dir::S}) {
      VertexIx w = rep.neighbor(v, d);
      if (w == kNoVertex) continue;
      int e = rep.edge_index(v, w);
      if (!vertical_checked.count(e)) {
        check_vertical(e);
        vertical_checked.insert(e);
      }
    }
  }
  for (auto& [e, r] : hedge_row) {
    (void)r;
    const auto& ed = rep.edges()[e];
    if (row_of[ed.u] >= 0 || row_of[ed.v] >= 0)
      throw InconsistentTuple("crossing edge has an endpoint on the column");
  }

  // classify remaining components by their horizontal attachments
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (VertexIx v = 0; v < n; ++v) {
    if (row_of[v] >= 0 || comp[v] != -1) continue;
    std::vector<VertexIx> stack = {v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      VertexIx a = stack.back();
      stack.pop_back();
      for (Dir d : kAllDirs) {
        VertexIx b = rep.neighbor(a, d);
        if (b == kNoVertex || row_of[b] >= 0 || comp[b] != -1) continue;
        comp[b] = ncomp;
        stack.push_back(b);
      }
    }
    ++ncomp;
  }
  std::vector<int> side(ncomp, 0);
  auto mark = [&](int c, int s) {
    if (c < 0) return;
    if (side[c] != 0 && side[c] != s)
      throw InconsistentTuple("component attaches on both sides of the cut");
    side[c] = s;
  };
  for (auto& [e, r] : hedge_row) {
    (void)r;
    const auto& ed = rep.edges()[e];
    mark(comp[west_end(ed)], -1);
    mark(comp[east_end(ed)], +1);
  }
  for (VertexIx v = 0; v < n; ++v) {
    if (row_of[v] < 0) continue;
    VertexIx w = rep.neighbor(v, Dir::W);
    VertexIx x = rep.neighbor(v, Dir::E);
    if (w != kNoVertex && row_of[w] >= 0)
      throw InconsistentTuple("horizontal edge inside one column");
    if (x != kNoVertex && row_of[x] >= 0)
      throw InconsistentTuple("horizontal edge inside one column");
    if (w != kNoVertex) mark(comp[w], -1);
    if (x != kNoVertex) mark(comp[x], +1);
  }

  CutParts parts;
  parts.left.assign(elem_count(rep), 0);
  parts.on.assign(elem_count(rep), 0);
  parts.right.assign(elem_count(rep), 0);
  for (VertexIx v = 0; v < n; ++v) {
    if (row_of[v] >= 0) parts.on[v] = 1;
    else if (side[comp[v]] <= 0) parts.left[v] = 1;
    else parts.right[v] = 1;
  }
  for (int e = 0; e < m; ++e) {
    const auto& ed = rep.edges()[e];
    int el = edge_elem(rep, e);
    if (hedge_row.count(e) || vertical_checked.count(e)) {
      parts.on[el] = 1;
    } else {
      VertexIx probe = row_of[ed.u] < 0 ? ed.u : ed.v;
      if (side[comp[probe]] <= 0) parts.left[el] = 1;
      else parts.right[el] = 1;
    }
  }
  return parts;
}

bool direct_predecessor(const OrthoRep& rep, const ColumnTuple& prev, const ColumnTuple& cur) {
  if (prev.height() != cur.height()) return false;
  CutParts pp, pc;
  try {
    pp = split_by_cut(rep, prev);
    pc = split_by_cut(rep, cur);
  } catch (const InconsistentTuple&) {
    return false;
  }
  int h = prev.height();
  std::set<int> bridged;  // edges consumed strictly between the two columns
  for (int r = 0; r < h; ++r) {
    int active = -1;
    Cell a = prev.decode(rep, r);
    if (a.kind == CellKind::HEdge) active = a.index;
    if (a.kind == CellKind::Vertex) {
      VertexIx x = rep.neighbor(a.index, Dir::E);
      if (x != kNoVertex) active = rep.edge_index(a.index, x);
    }
    Cell b = cur.decode(rep, r);
    int wanted = -1;
    if (b.kind == CellKind::HEdge) wanted = b.index;
    if (b.kind == CellKind::Vertex) {
      VertexIx w = rep.neighbor(b.index, Dir::W);
      if (w != kNoVertex) wanted = rep.edge_index(b.index, w);
    }
    if (active != wanted) return false;
    if (active >= 0 && b.kind == CellKind::Vertex) bridged.insert(active);
  }
  int total = elem_count(rep);
  int n = rep.vertex_count();
  for (int i = 0; i < total; ++i) {
    bool br = i >= n && bridged.count(i - n);
    char expect = (pp.left[i] || pp.on[i] || br) && !pc.on[i] ? 1 : 0;
    if (pc.left[i] != expect) return false;
    // only horizontal crossings may stay on both cuts; vertices and
    // vertical runs must be consumed by their single column
    if (pp.on[i] && pc.on[i] && (i < n || is_vertical(rep.edges()[i - n].dir)))
      return false;
  }
  return true;
}

namespace {

struct VerticalChains {
  std::vector<std::vector<VertexIx>> chains;  // bottom to top
  std::vector<int> chain_of;
  std::vector<std::vector<int>> west_edges;
  std::vector<int> west_free;
};

VerticalChains vertical_chains(const OrthoRep& rep) {
  VerticalChains vc;
  int n = rep.vertex_count();
  vc.chain_of.assign(n, -1);
  for (VertexIx v = 0; v < n; ++v) {
    if (rep.neighbor(v, Dir::S) != kNoVertex || vc.chain_of[v] != -1) continue;
    std::vector<VertexIx> chain;
    VertexIx cur = v;
    while (cur != kNoVertex) {
      vc.chain_of[cur] = static_cast<int>(vc.chains.size());
      chain.push_back(cur);
      cur = rep.neighbor(cur, Dir::N);
    }
    vc.chains.push_back(std::move(chain));
  }
  vc.west_edges.resize(vc.chains.size());
  for (int c = 0; c < static_cast<int>(vc.chains.size()); ++c) {
    for (VertexIx v : vc.chains[c]) {
      VertexIx w = rep.neighbor(v, Dir::W);
      if (w != kNoVertex) vc.west_edges[c].push_back(rep.edge_index(v, w));
    }
    if (vc.west_edges[c].empty()) vc.west_free.push_back(c);
  }
  return vc;
}

using Bits = std::vector<uint64_t>;

Bits make_bits(int total) { return Bits((total + 63) / 64, 0); }
void bit_set(Bits& b, int i) { b[i >> 6] |= uint64_t{1} << (i & 63); }
bool bit_get(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }

struct DpState {
  std::vector<int> cells;
  Bits done;  // elements completed up to and including this column
  int parent = -1;
};

struct Frontier {
  std::vector<DpState> states;
  std::map<std::vector<int>, int> index;
};

struct Expander {
  const OrthoRep& rep;
  const VerticalChains& vc;
  int h;
  Bits all;

  struct Arrival {
    int edge;
    int row;
    VertexIx vertex;
  };

  void expand(const DpState& from, bool initial, int from_index, Frontier& out) const {
    int n = rep.vertex_count();
    std::vector<std::pair<int, int>> rh;  // (row, edge) heading right
    if (!initial) {
      for (int r = 0; r < h; ++r) {
        int c = from.cells[r];
        if (c == 0) continue;
        if (c <= n) {
          VertexIx u = c - 1;
          VertexIx x = rep.neighbor(u, Dir::E);
          if (x != kNoVertex) rh.push_back({r, rep.edge_index(u, x)});
        } else if (c <= n + rep.edge_count()) {
          rh.push_back({r, c - 1 - n});
        }
      }
    }
    std::map<int, std::vector<Arrival>> arrivals;
    for (auto [r, e] : rh) {
      VertexIx v = east_end(rep.edges()[e]);
      arrivals[vc.chain_of[v]].push_back({e, r, v});
    }
    std::vector<int> landable;
    for (auto& [c, arr] : arrivals) {
      if (bit_get(from.done, vc.chains[c][0])) continue;
      if (arr.size() == vc.west_edges[c].size()) landable.push_back(c);
    }
    for (int c : vc.west_free)
      if (initial || !bit_get(from.done, vc.chains[c][0])) landable.push_back(c);
    std::sort(landable.begin(), landable.end());
    landable.erase(std::unique(landable.begin(), landable.end()), landable.end());
    if (landable.size() > 20) return;  // desk-scale guard

    int subsets = 1 << landable.size();
    for (int mask = 1; mask < subsets; ++mask) {
      std::vector<int> land;
      for (size_t i = 0; i < landable.size(); ++i)
        if (mask & (1 << i)) land.push_back(landable[i]);
      std::vector<int> cells(h, 0);
      Bits done = from.done;
      for (auto [r, e] : rh) {
        int c = vc.chain_of[east_end(rep.edges()[e])];
        if (std::find(land.begin(), land.end(), c) == land.end())
          cells[r] = ColumnTuple::encode_hedge(rep, e);
      }
      place_chains(land, arrivals, cells, done, 0, from_index, out);
    }
  }

  void place_chains(const std::vector<int>& land,
                    const std::map<int, std::vector<Arrival>>& arrivals,
                    std::vector<int>& cells, Bits& done, size_t li, int from_index,
                    Frontier& out) const {
    if (li == land.size()) {
      if (out.index.count(cells)) return;  // same cut determines the same left part
      out.index[cells] = static_cast<int>(out.states.size());
      out.states.push_back({cells, done, from_index});
      return;
    }
    int chain = land[li];
    const auto& verts = vc.chains[chain];
    std::vector<int> pin(verts.size(), -1);
    if (arrivals.count(chain))
      for (const Arrival& a : arrivals.at(chain))
        for (size_t i = 0; i < verts.size(); ++i)
          if (verts[i] == a.vertex) {
            if (pin[i] != -1 && pin[i] != a.row) return;
            pin[i] = a.row;
          }
    std::vector<int> rows(verts.size());
    place_rows(chain, pin, rows, 0, cells, done, land, arrivals, li, from_index, out);
  }

  void place_rows(int chain, const std::vector<int>& pin, std::vector<int>& rows, size_t vi,
                  std::vector<int>& cells, Bits& done, const std::vector<int>& land,
                  const std::map<int, std::vector<Arrival>>& arrivals, size_t li,
                  int from_index, Frontier& out) const {
    const auto& verts = vc.chains[chain];
    if (vi == verts.size()) {
      std::vector<int> saved_cells = cells;
      Bits saved_done = done;
      bool clear = true;
      for (size_t i = 0; i < verts.size() && clear; ++i) {
        if (cells[rows[i]] != 0) clear = false;
        else cells[rows[i]] = ColumnTuple::encode_vertex(verts[i]);
      }
      for (size_t i = 0; i + 1 < verts.size() && clear; ++i) {
        int e = rep.edge_index(verts[i], verts[i + 1]);
        for (int r = rows[i] + 1; r < rows[i + 1] && clear; ++r) {
          if (cells[r] != 0) clear = false;
          else cells[r] = ColumnTuple::encode_vedge(rep, e);
        }
      }
      if (clear) {
        for (VertexIx v : verts) bit_set(done, v);
        for (size_t i = 0; i + 1 < verts.size(); ++i)
          bit_set(done, edge_elem(rep, rep.edge_index(verts[i], verts[i + 1])));
        if (arrivals.count(chain))
          for (const Arrival& a : arrivals.at(chain)) bit_set(done, edge_elem(rep, a.edge));
        place_chains(land, arrivals, cells, done, li + 1, from_index, out);
      }
      cells = saved_cells;
      done = saved_done;
      return;
    }
    int lo = vi == 0 ? 0 : rows[vi - 1] + 1;
    int hi = h - 1 - (static_cast<int>(verts.size()) - 1 - static_cast<int>(vi));
    if (pin[vi] != -1) {
      lo = std::max(lo, pin[vi]);
      hi = std::min(hi, pin[vi]);
    }
    for (int r = lo; r <= hi; ++r) {
      rows[vi] = r;
      place_rows(chain, pin, rows, vi + 1, cells, done, land, arrivals, li, from_index, out);
    }
  }
};

struct DpRun {
  bool accepted = false;
  int columns = 0;
  Drawing drawing;
};

DpRun run_dp(const OrthoRep& rep, int h, bool want_witness) {
  VerticalChains vc = vertical_chains(rep);
  int total = elem_count(rep);
  Expander ex{rep, vc, h, make_bits(total)};
  for (int i = 0; i < total; ++i) bit_set(ex.all, i);

  std::vector<Frontier> columns;
  Frontier first;
  DpState virt;
  virt.cells.assign(h, 0);
  virt.done = make_bits(total);
  ex.expand(virt, true, -1, first);
  columns.push_back(std::move(first));

  int max_cols = rep.vertex_count();
  for (int c = 0;; ++c) {
    Frontier& cur = columns[c];
    for (int si = 0; si < static_cast<int>(cur.states.size()); ++si) {
      if (cur.states[si].done == ex.all) {
        DpRun run;
        run.accepted = true;
        run.columns = c + 1;
        if (want_witness) {
          run.drawing.pos.assign(rep.vertex_count(), {0, 0});
          int col = c, state = si;
          while (col >= 0) {
            const DpState& st = columns[col].states[state];
            for (int r = 0; r < h; ++r) {
              int cell = st.cells[r];
              if (cell > 0 && cell <= rep.vertex_count())
                run.drawing.pos[cell - 1] = {col, r};
            }
            state = st.parent;
            --col;
          }
        }
        return run;
      }
    }
    if (c + 1 >= max_cols) break;
    Frontier next;
    for (int si = 0; si < static_cast<int>(cur.states.size()); ++si)
      ex.expand(cur.states[si], false, si, next);
    if (next.states.empty()) break;
    columns.push_back(std::move(next));
  }
  return {};
}

}  // namespace

bool feasible_at_height(const OrthoRep& rep, int h, bool full_scan) {
  if (h < 1) return false;
  if (!full_scan) return run_dp(rep, h, false).accepted;

  std::vector<ColumnTuple> tuples = enumerate_consistent_tuples(rep, h);
  int total = elem_count(rep);
  std::vector<CutParts> parts;
  parts.reserve(tuples.size());
  for (auto& t : tuples) parts.push_back(split_by_cut(rep, t));
  std::vector<char> reachable(tuples.size(), 0);
  for (size_t i = 0; i < tuples.size(); ++i) {
    bool empty_left = true;
    for (int x = 0; x < total; ++x)
      if (parts[i].left[x]) empty_left = false;
    reachable[i] = empty_left;
  }
  for (int c = 1; c <= rep.vertex_count(); ++c) {
    for (size_t i = 0; i < tuples.size(); ++i) {
      if (!reachable[i]) continue;
      bool covered = true;
      for (int x = 0; x < total; ++x)
        if (!parts[i].left[x] && !parts[i].on[x]) covered = false;
      if (covered) return true;
    }
    if (c == rep.vertex_count()) break;
    std::vector<char> next(tuples.size(), 0);
    for (size_t i = 0; i < tuples.size(); ++i) {
      if (!reachable[i]) continue;
      for (size_t j = 0; j < tuples.size(); ++j)
        if (!next[j] && direct_predecessor(rep, tuples[i], tuples[j])) next[j] = 1;
    }
    reachable = std::move(next);
  }
  return false;
}

std::optional<HeightWitness> min_width_at_height(const OrthoRep& rep, int h) {
  if (h < 1) return std::nullopt;
  DpRun run = run_dp(rep, h, true);
  if (!run.accepted) return std::nullopt;
  return HeightWitness{run.columns, std::move(run.drawing)};
}

HeightSearch min_area_via_height(const OrthoRep& rep, int h_max) {
  HeightSearch best;
  for (int h = 1; h <= h_max; ++h) {
    DpRun run = run_dp(rep, h, true);
    if (!run.accepted) continue;
    int64_t a = static_cast<int64_t>(run.columns - 1) * (h - 1);
    if (best.best_area < 0 || a < best.best_area) {
      best.best_area = a;
      best.best_h = h;
      best.best_columns = run.columns;
      best.drawing = std::move(run.drawing);
    }
  }
  if (best.best_area < 0)
    throw InfeasibleWithinBound("no drawing within height " + std::to_string(h_max));
  return best;
}

std::vector<ColumnTuple> enumerate_consistent_tuples(const OrthoRep& rep, int h) {
  if (rep.vertex_count() > 10 || h > 5)
    throw Error("tuple enumeration is for tiny instances only");
  int choices = 1 + rep.vertex_count() + 2 * rep.edge_count();
  std::vector<ColumnTuple> out;
  ColumnTuple t;
  t.cells.assign(h, 0);
  while (true) {
    try {
      (void)split_by_cut(rep, t);
      out.push_back(t);
    } catch (const InconsistentTuple&) {
    }
    int r = 0;
    while (r < h && ++t.cells[r] == choices) t.cells[r++] = 0;
    if (r == h) break;
  }
  return out;
}

}  // namespace orthopress
