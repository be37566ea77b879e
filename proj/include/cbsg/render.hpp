#pragma once

/// SVG figures: the dilation chain, cone rays, semigroup points and gaps over
/// a lattice window, optionally with the polygon skeleton overlay.

#include <string>

#include "cbsg/semigroup.hpp"

namespace cbsg {

struct RenderOptions {
    long long window_x = 40;
    long long window_y = 20;
    bool skeleton = false;
};

std::string render_svg(const Semigroup& sg, const RenderOptions& opt);

}  // namespace cbsg
