#ifndef SUFFRIDGE_CURVE_HPP
#define SUFFRIDGE_CURVE_HPP

#include <utility>
#include <vector>

#include "suffridge/poly.hpp"

namespace suffridge {

/// Ordered samples (t, w) of a closed image curve t -> f(e^{it}).
/// t strictly increasing in [0, 2*pi); geometry queries need >= 16 points.
struct CurveSamples {
    std::vector<double> t;
    std::vector<Complex> w;
    bool closed = true;

    int size() const { return static_cast<int>(w.size()); }
};

/// Image of the unit circle under p at `samples` equidistant angles.
CurveSamples sample_boundary(const RealPolynomial& p, int samples);

/// All pairs (i, j) of non-adjacent polyline segments that cross
/// transversally. Tangential self-contacts — e.g. a typically real boundary
/// curve grazing the real axis, where mirror-image branches touch without
/// switching sides — are filtered out by a side-swap test on a window of
/// segments around each candidate crossing. An empty result means the
/// sampled curve is simple at this resolution.
std::vector<std::pair<int, int>> self_intersections(const CurveSamples& c);

/// Sum of signed angle increments around w, divided by 2*pi and rounded.
/// Throws PointOnCurve if w is within tolerance of a sample.
int winding_number(const CurveSamples& c, Complex w);

double distance_to_polyline(const CurveSamples& c, Complex w);

}  // namespace suffridge

#endif
