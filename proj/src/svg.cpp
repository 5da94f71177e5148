#include "orthopress/svg.hpp"

#include <algorithm>
#include <sstream>

namespace orthopress {

std::string render_svg(const Drawing& d, const OrthoRep& rep, int scale) {
  int minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (const GridPoint& p : d.pos) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  int margin = scale;
  int width = (maxx - minx) * scale + 2 * margin;
  int height = (maxy - miny) * scale + 2 * margin;
  auto sx = [&](int x) { return (x - minx) * scale + margin; };
  auto sy = [&](int y) { return (maxy - y) * scale + margin; };  // y grows downward in SVG

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  for (const auto& e : rep.edges()) {
    GridPoint a = d.pos[e.u], b = d.pos[e.v];
    out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\""
        << sx(a.x) << "," << sy(a.y) << " " << sx(b.x) << "," << sy(b.y) << "\"/>\n";
  }
  for (VertexIx v = 0; v < rep.vertex_count(); ++v) {
    out << "  <circle cx=\"" << sx(d.pos[v].x) << "\" cy=\"" << sy(d.pos[v].y)
        << "\" r=\"3\" fill=\"black\"><title>" << rep.id_of(v) << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace orthopress
