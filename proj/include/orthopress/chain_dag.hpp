#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orthopress/drawing.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress {

enum class Axis : uint8_t { X, Y };

// Face boundary walks over vertex "handles". Handles 0..n-1 are the rep's
// vertices; higher handles are pseudo vertices introduced by augmentation.
// Every dart of the underlying structure appears in exactly one walk.
struct FaceWalks {
  struct Walk {
    std::vector<int> tail;  // handle of each dart's tail
    std::vector<Dir> dir;
    bool external = false;
    int size() const { return static_cast<int>(tail.size()); }
    int head(int i) const { return tail[(i + 1) % size()]; }
  };
  std::vector<Walk> walks;
  int handle_count = 0;

  int rotation(int w) const;
};

FaceWalks face_walks(const OrthoRep& rep, const FaceSet& fs);

// DAG of maximal vertical (axis X) or horizontal (axis Y) chains; arcs point
// rightward resp. upward. Parallel connecting segments collapse to one arc.
struct ChainDag {
  Axis axis = Axis::X;
  std::vector<std::vector<int>> chains;    // handle lists
  std::vector<int> chain_of;               // per handle
  std::vector<std::pair<int, int>> arcs;   // deduped, sorted
  std::vector<std::vector<int>> out, in;

  int node_count() const { return static_cast<int>(chains.size()); }
};

ChainDag derive_chain_dag(const FaceWalks& walks, Axis axis,
                          const std::vector<std::pair<int, int>>& extra_unions = {});
ChainDag build_chain_dag(const OrthoRep& rep, Axis axis);

// Chain DAG with its saturating arcs merged in. Reachability on this graph
// is the relation the turn-regularity characterization speaks about; the
// plain DAG misses orderings that saturation forces.
ChainDag build_relation_dag(const OrthoRep& rep, Axis axis);

enum class Reach : uint8_t { Forward, Backward, Incomparable, SameChain };

Reach coreachable(const ChainDag& dag, VertexIx u, VertexIx v);

// closure[a] contains b iff a directed path a -> b exists (a != b).
std::vector<std::vector<char>> reachability_closure(const ChainDag& dag);

enum class SwitchKind : uint8_t { Source, Sink };
enum class AngleLabel : uint8_t { Large, Small };

// Upward labeling of the chain DAG: every switch angle of every face,
// labeled by the corner rotation across the junction (-2 reflex = Large,
// +2 = Small). Construction verifies that internal nodes carry no large
// angle, that sources/sinks carry exactly one, and that each face carries
// exactly cap(f) of them.
struct UpwardLabeling {
  struct Switch {
    int node;
    SwitchKind kind;
    AngleLabel label;
    int walk_pos;  // junction start position in the face walk
    int level;     // corner-rotation prefix at the junction start
  };
  struct FaceInfo {
    std::vector<Switch> switches;  // in boundary order
    int nf = 0;
    int cap = 0;
    int total_rotation = 0;
    bool external = false;
    bool has_arcs = false;
  };
  std::vector<FaceInfo> faces;
  std::vector<int> large_count;  // per node
};

UpwardLabeling upward_labeling(const ChainDag& dag, const FaceWalks& walks);

// Complete saturator: super-source/super-sink attachments plus the in-face
// arcs pairing small-angle switches with large-angle ones.
struct Saturator {
  enum Rule : uint8_t { SourcePair = 1, SinkPair = 2, FromSuperSource = 3, ToSuperSink = 4 };
  struct Arc {
    int from, to;  // node ids; super-source = -1, super-sink = -2
    Rule rule;
  };
  std::vector<Arc> arcs;
};

enum class SaturateMode : uint8_t { Strict, Lenient };

// Strict mode refuses internal faces whose large angles cannot all be
// saturated; lenient mode leaves them loose (used for reachability queries
// on arbitrary inputs).
Saturator saturate(const ChainDag& dag, const UpwardLabeling& lab,
                   SaturateMode mode = SaturateMode::Strict);

// Longest-path layering from the super-source; strictly increasing along
// every arc, minimum range. Chain values normalized to start at 0.
struct Numbering {
  std::vector<int> value;  // per node
};

Numbering optimal_numbering(const ChainDag& dag, const Saturator& sat);

// Raw variant used by tests: nodes 0..n-1, explicit arcs, values = longest
// path from the sources. Throws CycleDetected.
std::vector<int> longest_path_layering(int n, const std::vector<std::pair<int, int>>& arcs);

}  // namespace orthopress
