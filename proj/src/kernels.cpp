#include "suffridge/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "suffridge/curve.hpp"

namespace suffridge {

namespace {

constexpr double kPoleTol = 1e-12;

CurveSamples normalized_image(int n, int samples) {
    const RealPolynomial p = coefficients({n, 1});
    const double scale = -1.0 / (4.0 * value_at_minus_one(n));
    CurveSamples c = sample_boundary(p, samples);
    for (Complex& w : c.w) w *= scale;
    return c;
}

}  // namespace

Complex kernel_eval(const KernelSpec& spec, Complex z) {
    switch (spec.kind) {
        case KernelKind::koebe: {
            const Complex d = 1.0 - z;
            if (std::abs(d) < kPoleTol)
                throw PoleProximity("kernel_eval: z too close to the pole at 1");
            return z / (d * d);
        }
        case KernelKind::two_symmetric: {
            const Complex d = 1.0 + z * z;
            if (std::abs(d) < kPoleTol)
                throw PoleProximity("kernel_eval: z too close to a pole at ±i");
            return z / d;
        }
        case KernelKind::generalized: {
            if (!(spec.q > 0.0 && spec.q < 1.0))
                throw ValidationError("kernel_eval: q must lie in (0, 1)");
            const Complex d = 1.0 - 2.0 * z * std::cos(spec.q * std::numbers::pi) + z * z;
            if (std::abs(d) < kPoleTol)
                throw PoleProximity("kernel_eval: z too close to a pole at e^{±i q pi}");
            return z / d;
        }
    }
    throw ValidationError("kernel_eval: unknown kernel kind");
}

double inclusion_radius(int n) {
    if (n < 1)
        throw ValidationError("inclusion_radius: N must be >= 1");
    const double s = std::sin(std::numbers::pi / (2.0 * n + 2.0));
    return (1.0 - s) / (1.0 + s);
}

SubordinationReport subordination_check(int n, int samples) {
    if (samples < 256)
        throw ValidationError("subordination_check: at least 256 samples required");
    const CurveSamples curve = normalized_image(n, 4096);
    const double r = inclusion_radius(n);

    bool all = true;
    double margin = std::numeric_limits<double>::infinity();
    for (int m = 0; m < samples; ++m) {
        const double t = 2.0 * std::numbers::pi * (m + 0.5) / samples;
        const Complex z = std::polar(r, t);
        const Complex w = kernel_eval({KernelKind::koebe, 0.0}, z);
        int wn = 0;
        try {
            wn = winding_number(curve, w);
        } catch (const PointOnCurve& e) {
            throw InconclusiveAtResolution(e.what());
        }
        if (wn != 1) all = false;
        margin = std::min(margin, distance_to_polyline(curve, w));
    }
    return {all, margin};
}

IntervalInclusionReport dimitrov_interval_check(int n) {
    if (n < 2)
        throw ValidationError("dimitrov_interval_check: N must be >= 2");
    const CurveSamples curve = normalized_image(n, 4096);

    const double tan_half = std::tan(std::numbers::pi / (2.0 * n + 2.0));
    const double left = -0.25;
    const double right = 0.25 / (tan_half * tan_half);
    const double eps = 1e-3 * (right - left);

    const int count = 64;
    bool all = true;
    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i) {
        const double x = left + eps + (right - left - 2.0 * eps) * i / (count - 1);
        int wn = 0;
        try {
            wn = winding_number(curve, Complex(x, 0.0));
        } catch (const PointOnCurve& e) {
            throw InconclusiveAtResolution(e.what());
        }
        if (wn != 1) all = false;
        margin = std::min(margin, distance_to_polyline(curve, Complex(x, 0.0)));
    }
    return {all, left, right, margin};
}

double approx_error(const SuffridgeParams& p, double radius,
                    const KernelSpec& target, int samples) {
    p.validate();
    if (!(radius >= 0.0 && radius < 1.0))
        throw ValidationError("approx_error: radius must lie in [0, 1)");
    if (samples < 1)
        throw ValidationError("approx_error: at least one sample required");
    if (radius == 0.0)
        return std::abs(closed_form_eval(p, 0.0) - kernel_eval(target, 0.0));
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const Complex z = std::polar(radius, 2.0 * std::numbers::pi * k / samples);
        worst = std::max(worst, std::abs(closed_form_eval(p, z) - kernel_eval(target, z)));
    }
    return worst;
}

}  // namespace suffridge
