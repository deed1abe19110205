#pragma once

#include <string>

#include "arcsys/annular.hpp"
#include "arcsys/arc_system.hpp"

namespace arcsys {

// Punctures on a circle; chords of the upper disk are drawn inside it and
// chords of the lower disk outside, one color per arc index.
std::string render_system_svg(const ArcSystem& sys);

// Squares shaded, dual curves dashed in color, corners marked red.
std::string render_diagram_svg(const AnnularDiagram& d);

}  // namespace arcsys
