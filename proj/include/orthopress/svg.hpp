#pragma once

#include <string>

#include "orthopress/drawing.hpp"
#include "orthopress/ortho_rep.hpp"

namespace orthopress {

// SVG 1.1 rendering of a drawing: one line per edge, a dot per vertex,
// deterministic byte output.
std::string render_svg(const Drawing& d, const OrthoRep& rep, int scale = 20);

}  // namespace orthopress
