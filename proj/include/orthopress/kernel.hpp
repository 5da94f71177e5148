#pragma once

#include <string>
#include <vector>

#include "orthopress/drawing.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress {

// Labeled, weighted directed cycle: the single internal face traversed
// counterclockwise, every edge labeled by its direction and every vertex by
// flat/convex/reflex. Edge i runs from vertex i to vertex i+1.
struct DirectedCycle {
  std::vector<std::string> ids;
  std::vector<CornerLabel> label;
  std::vector<Dir> edge_dir;
  std::vector<int> weight;
  std::vector<char> is_kitty;  // kitty corners of the original representation

  int size() const { return static_cast<int>(ids.size()); }
  int next(int i) const { return (i + 1) % size(); }
  int prev(int i) const { return (i - 1 + size()) % size(); }
};

// Builds the labeled cycle from a simple-cycle representation, weights 1.
DirectedCycle build_directed_cycle(const OrthoRep& rep);

// Back to a representation plus its edge weights (for the weighted oracle
// and serialization).
OrthoRep cycle_to_rep(const DirectedCycle& g, const std::string& name);
EdgeWeights cycle_weights(const DirectedCycle& g, const OrthoRep& rep);

// Reduction rules, numbered 1..9 in their application order:
//   1 collapse flat runs          2 RCR -> R     3 CRC -> C
//   4 RCCC -> C                   5 CCCR -> C    6 CRRR -> R
//   7 RRRC -> R                   8 RCCR cancel  9 CRRC cancel
// pos is the window start (the context vertex before the interior pattern);
// for rule 1 it is the first flat vertex of a run.
bool rule_applicable(const DirectedCycle& g, int rule, int pos);
void apply_rule(DirectedCycle& g, int rule, int pos);  // throws PatternMismatch

// Unique matching of every reflex vertex to its closest balancing convex
// vertex; exactly four convex vertices stay unmatched.
struct RcMatching {
  std::vector<int> match_of;  // per position: matched position or -1
  std::vector<int> unmatched_convex;
};
RcMatching rc_matching(const DirectedCycle& g);

// Counting rule over maximal kitty-free reflex runs of length >= 7: charges
// the runs against the matched convex partners of positions 1,7,8,14,...
struct RRunReport {
  struct Run {
    int start = 0, length = 0;
    std::vector<int> charged;  // positions of the charged convex vertices
  };
  std::vector<Run> runs;
  bool charges_disjoint = true;
};
RRunReport count_r_runs(const DirectedCycle& g, const RcMatching& m);

// One scheduler step under the application discipline: the lowest-numbered
// rule at its leftmost position whose window interior lies inside a
// reducible region (behind the kitty-corner buffers). Returns {0, -1} at
// the fixpoint.
std::pair<int, int> next_reduction(const DirectedCycle& g);

struct KernelStats {
  struct Fired {
    int rule;
    int position;
  };
  std::vector<Fired> trace;
  int initial_vertices = 0;
  int final_vertices = 0;
  int k = 0;
  bool recommend_fpt = false;      // k small enough for the direct search
  bool interiors_all_reflex = true;
};

struct KernelResult {
  DirectedCycle cycle;
  OrthoRep reduced;
  EdgeWeights weights;
  KernelStats stats;
};

// Locates kitty corners, truncates every long inter-kitty path behind
// 5-vertex buffers, and applies the reduction rules in order until no rule
// fires; without kitty corners the whole cycle is reducible.
KernelResult kernelize(const OrthoRep& rep);

}  // namespace orthopress
