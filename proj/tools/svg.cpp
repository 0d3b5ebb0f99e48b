#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cli {

namespace {

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_curve_svg(const suffridge::CurveSamples& curve,
                             const std::vector<suffridge::Complex>& marks,
                             const RenderSpec& spec) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& w : curve.w) {
        xmin = std::min(xmin, w.real());
        xmax = std::max(xmax, w.real());
        ymin = std::min(ymin, w.imag());
        ymax = std::max(ymax, w.imag());
    }
    const double spanx = std::max(xmax - xmin, 1e-12);
    const double spany = std::max(ymax - ymin, 1e-12);
    const double scale = 0.9 * std::min(spec.width / spanx, spec.height / spany);
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);

    // y flipped: SVG grows downward
    const auto px = [&](double x) { return spec.width / 2.0 + scale * (x - cx); };
    const auto py = [&](double y) { return spec.height / 2.0 - scale * (y - cy); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << spec.width << ' '
        << spec.height << "\">\n";
    svg << "<path fill=\"none\" stroke=\"" << spec.stroke << "\" stroke-width=\"1.2\" d=\"";
    for (std::size_t i = 0; i < curve.w.size(); ++i) {
        svg << (i == 0 ? 'M' : 'L') << px(curve.w[i].real()) << ' ' << py(curve.w[i].imag());
        if (i + 1 < curve.w.size()) svg << ' ';
    }
    svg << " Z\"/>\n";
    const double dot = 0.008 * std::min(spec.width, spec.height);
    for (const auto& m : marks)
        svg << "<circle cx=\"" << fmt6(px(m.real())) << "\" cy=\"" << fmt6(py(m.imag()))
            << "\" r=\"" << fmt6(dot) << "\" fill=\"#d62728\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace cli
