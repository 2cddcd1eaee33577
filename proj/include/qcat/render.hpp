#pragma once

// Static pictures of an injection scene: pi's path from (0,0), sigma's from
// (r,r), their first common point, and the r x (l+r-k) rectangle in the lower
// right of the (l+r) x (l+r) square. The "after" view shows nu and omega
// spliced from the same segments.

#include <string>

#include "qcat/inject.hpp"

namespace qcat {

struct Style {
  std::string pi_color = "red";
  std::string sigma_color = "blue";
  std::string outline_color = "black";
  std::string shade_color = "#d9d9d9";
  int cell_size = 40;
  int path_width = 3;
  int outline_width = 1;
};

enum class View { kBefore, kAfter };

// 7-bit text grid. Lattice points are '.', pi/omega uses '-' '|' 'o',
// sigma/nu uses '=' ':' '*', shared edges '#', shared points '@', the meet
// point 'M', rectangle cells '/'.
std::string render_ascii(const GeometricScene& scene, View view = View::kBefore);

// SVG 1.1 using only <path>, <rect> and <circle>.
std::string render_svg(const GeometricScene& scene, const Style& style = {},
                       View view = View::kBefore);

}  // namespace qcat
