#include "bandkit/arc_diagram.hpp"

#include <sstream>
#include <utility>

#include "bandkit/errors.hpp"

namespace bandkit {

std::string render_arc_diagram(const Graph& g, const LinearLayout& layout, double unit) {
  if (!(unit > 0.0)) throw InvalidParams("arc diagram unit must be positive");
  if (layout.size() != g.vertex_count()) {
    throw InvalidLayout("layout size does not match vertex count");
  }

  const std::size_t n = g.vertex_count();
  const std::size_t bw = layout_bandwidth(g, layout);
  const double width = 2 * kArcDiagramMargin + (n > 0 ? (n - 1) * unit : 0.0);
  const double height = 2 * kArcDiagramMargin + bw * unit / 2.0;
  const double base = height - kArcDiagramMargin;  // arcs bulge upward from here

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";

  g.for_each_edge([&](vertex_t u, vertex_t v) {
    position_t pu = layout.position_of(u);
    position_t pv = layout.position_of(v);
    if (pu > pv) std::swap(pu, pv);
    const double x1 = kArcDiagramMargin + pu * unit;
    const double x2 = kArcDiagramMargin + pv * unit;
    if (pv - pu == 1) {
      // Consecutive positions: a straight baseline segment.
      os << "  <line x1=\"" << x1 << "\" y1=\"" << base << "\" x2=\"" << x2 << "\" y2=\""
         << base << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    } else {
      // Upper semicircle with diameter = edge length * unit.
      const double r = (x2 - x1) / 2.0;
      os << "  <path d=\"M " << x1 << ' ' << base << " A " << r << ' ' << r << " 0 0 1 " << x2
         << ' ' << base << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
  });

  for (std::size_t p = 0; p < n; ++p) {
    os << "  <circle cx=\"" << (kArcDiagramMargin + p * unit) << "\" cy=\"" << base
       << "\" r=\"2\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bandkit
