#pragma once

#include <optional>
#include <string>

#include "orthopress/drawing.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress {

// The instance file format: `orf 1` header, `name`, `v`, `e`, `w` and
// `expect-area` directives, `#` comments. Directions read from u to v,
// weights default to 1.
struct OrfDocument {
  OrthoRep rep;
  EdgeWeights weights;  // indexed like rep.edges()
  std::optional<int64_t> expect_area;

  bool weighted() const {
    for (int w : weights)
      if (w != 1) return true;
    return false;
  }
};

OrfDocument parse_orf(const std::string& text);
OrfDocument load_orf(const std::string& path);
std::string serialize_orf(const OrfDocument& doc);
std::string serialize_orf(const OrthoRep& rep, const EdgeWeights& weights = {},
                          std::optional<int64_t> expect_area = {});

}  // namespace orthopress
