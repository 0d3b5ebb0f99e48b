#ifndef SUFFRIDGE_TOOLS_SVG_HPP
#define SUFFRIDGE_TOOLS_SVG_HPP

#include <string>
#include <vector>

#include "suffridge/curve.hpp"

namespace cli {

struct RenderSpec {
    int width = 800;
    int height = 800;
    int samples = 4096;
    std::string stroke = "#1f6fb4";
    std::string output_path;
};

/// One closed <path> for the curve, normalized into the viewbox with a 5%
/// margin, plus one dot per mark (derivative-root images, the cusp
/// candidates).
std::string render_curve_svg(const suffridge::CurveSamples& curve,
                             const std::vector<suffridge::Complex>& marks,
                             const RenderSpec& spec);

}  // namespace cli

#endif
