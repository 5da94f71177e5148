#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace orthopress {

// Axis direction of a dart. Clockwise order is N, E, S, W.
enum class Dir : uint8_t { N = 0, E = 1, S = 2, W = 3 };

constexpr Dir rotate_cw(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 1) & 3); }
constexpr Dir rotate_ccw(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 3) & 3); }
constexpr Dir reverse(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 2) & 3); }

constexpr bool is_horizontal(Dir d) { return d == Dir::E || d == Dir::W; }
constexpr bool is_vertical(Dir d) { return d == Dir::N || d == Dir::S; }

constexpr int dx(Dir d) { return d == Dir::E ? 1 : d == Dir::W ? -1 : 0; }
constexpr int dy(Dir d) { return d == Dir::N ? 1 : d == Dir::S ? -1 : 0; }

// Rotation contribution of a corner whose incoming dart points `from` and
// whose outgoing dart points `to`: +1 left turn, -1 right turn, 0 straight,
// -2 for the full turnaround at a degree-1 vertex.
constexpr int turn(Dir from, Dir to) {
  int diff = (static_cast<int>(to) - static_cast<int>(from)) & 3;
  switch (diff) {
    case 0: return 0;
    case 1: return -1;  // one clockwise step
    case 3: return +1;  // one counterclockwise step
    default: return -2;
  }
}

inline char dir_char(Dir d) {
  switch (d) {
    case Dir::N: return 'N';
    case Dir::E: return 'E';
    case Dir::S: return 'S';
    default: return 'W';
  }
}

inline bool dir_from_char(char c, Dir& out) {
  switch (c) {
    case 'N': out = Dir::N; return true;
    case 'E': out = Dir::E; return true;
    case 'S': out = Dir::S; return true;
    case 'W': out = Dir::W; return true;
    default: return false;
  }
}

constexpr std::array<Dir, 4> kAllDirs = {Dir::N, Dir::E, Dir::S, Dir::W};

}  // namespace orthopress
