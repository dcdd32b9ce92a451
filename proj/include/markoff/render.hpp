#ifndef MARKOFF_RENDER_HPP
#define MARKOFF_RENDER_HPP

#include <string>
#include <utility>
#include <vector>

#include "markoff/coeff_map.hpp"
#include "markoff/slope.hpp"

namespace markoff {

// Pointy-top honeycomb for the parity class of a slope. A lattice point maps
// to axial cell (u, v) = ((alpha - q)/2, (beta - p)/2); u steps down-left,
// v steps down-right, so the P-edge of J_s runs along the left side, the
// Q-edge along the right side, the Pascal edge along the bottom, and the
// edge P_0 Q_0 sits on top.
struct HexLayout {
  double radius = 18.0;  // circumradius

  struct Cell {
    std::int64_t u, v;
  };
  struct Center {
    double x, y;
  };

  static Cell cell(const Slope& s, LatticePoint pt);
  Center center(Cell c) const;
  // Six corners of the hexagon around `c`, clockwise from the top.
  std::vector<Center> corners(Center c) const;
};

// Standalone SVG document for F_s: one labeled hexagon per support point,
// unlabeled empty cells around it, and the hull of the support outlined.
std::string render_svg(const Slope& s, const CoeffMap& f, const HexLayout& layout = {});
// Several diagrams side by side in one document.
std::string render_svg_gallery(const std::vector<std::pair<Slope, CoeffMap>>& items,
                               const HexLayout& layout = {});

// Offset-row text version of the same layout; one line per honeycomb row.
std::string render_ascii(const Slope& s, const CoeffMap& f);

}  // namespace markoff

#endif  // MARKOFF_RENDER_HPP
