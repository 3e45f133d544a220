#pragma once

#include <string>
#include <vector>

#include "holomotion/construction.hpp"

namespace holomotion {

struct FigureDocument {
  std::string file_name;
  std::string svg;
};

/// Image of T under f_{a_n}: the arc from v1 to v2 counter-clockwise.
FigureDocument image_arc_figure(const ConstructionParams& p, int points = 512);

/// q_n applied to that arc, which covers T with both ends at -1.
FigureDocument power_image_figure(const ConstructionParams& p, int points = 512);

/// T, the boundary circles of A and D, and the points 0, z0, 1/a_n.
FigureDocument annulus_figure(const ConstructionParams& p, int points = 512);

/// fig1.svg, fig2.svg, fig3.svg in that order.
std::vector<FigureDocument> render_figures(const ConstructionParams& p, int points = 512);

}  // namespace holomotion
