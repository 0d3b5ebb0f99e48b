#include "suffridge/univalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "suffridge/curve.hpp"
#include "suffridge/roots.hpp"
#include "suffridge/suffridge.hpp"

namespace suffridge {

namespace {

constexpr double kRootModulusTol = 1e-6;

std::vector<double> derivative_root_moduli(const RealPolynomial& p) {
    std::vector<double> moduli;
    if (p.degree() < 2) return moduli;
    const std::vector<Complex> rs = roots(derivative(p));
    moduli.reserve(rs.size());
    for (Complex r : rs) moduli.push_back(std::abs(r));
    return moduli;
}

// Winding number 1 on an interior probe set: images of |z| = 1/2 plus the
// origin. nullopt when every probe sits too close to the polyline to decide.
std::optional<bool> interior_winding_ok(const RealPolynomial& p, const CurveSamples& curve) {
    double scale = 0.0;
    for (const Complex& w : curve.w) scale = std::max(scale, std::abs(w));
    const double near_tol = 1e-9 * (1.0 + scale);

    std::vector<Complex> probes;
    probes.push_back(Complex(0.0));
    for (int k = 0; k < 16; ++k)
        probes.push_back(p(std::polar(0.5, 2.0 * std::numbers::pi * k / 16.0)));

    bool decided = false;
    for (const Complex& w : probes) {
        if (distance_to_polyline(curve, w) < near_tol) continue;
        decided = true;
        if (winding_number(curve, w) != 1) return false;
    }
    if (!decided) return std::nullopt;
    return true;
}

}  // namespace

void RobustFamilyParams::validate() const {
    if (n < 1)
        throw ValidationError("RobustFamilyParams: N must be >= 1");
    if (!(mu > 0.0 && mu < std::numbers::pi))
        throw ValidationError("RobustFamilyParams: mu must lie in (0, pi)");
}

RealPolynomial robust_family_coefficients(const RobustFamilyParams& p) {
    p.validate();
    return coefficients_at_angle(p.n, p.mu);
}

double phi(int n, double t, double mu) {
    if (n < 1)
        throw ValidationError("phi: N must be >= 1");
    return 2.0 * std::sin(t) * std::sin(mu) + std::sin(n * t) * std::sin((n + 2) * mu) -
           2.0 * std::sin((n + 1) * t) * std::sin((n + 1) * mu) +
           std::sin((n + 2) * t) * std::sin(n * mu);
}

double phi_identity_residual(int n, double mu) {
    if (n < 1)
        throw ValidationError("phi_identity_residual: N must be >= 1");
    const double s1 = std::sin(std::numbers::pi / (n + 1));
    const double sn = std::sin((n + 1) * mu);
    const double rhs = -4.0 * s1 * s1 * sn * sn;
    double worst = 0.0;
    for (double sgn : {1.0, -1.0}) {
        const double t = mu + sgn * 2.0 * std::numbers::pi / (n + 1);
        worst = std::max(worst, std::abs(phi(n, t, mu) - rhs));
    }
    return worst;
}

TypicallyRealCheck typically_real_check(const RealPolynomial& p, int grid_size) {
    if (grid_size < 8 * p.degree())
        throw ValidationError("typically_real_check: grid_size must be >= 8 * degree");
    double maxc = 0.0;
    for (double c : p.coeffs()) maxc = std::max(maxc, std::abs(c));
    const double tol = 1e-10 * (1.0 + maxc);

    double min_im = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_size; ++i) {
        const double t = std::numbers::pi * i / (grid_size - 1.0);
        min_im = std::min(min_im, p(std::polar(1.0, t)).imag());
    }
    return {min_im >= -tol, min_im};
}

QuasiExtremalReport quasi_extremal_check(const RealPolynomial& p, int samples) {
    if (p.degree() < 2)
        throw ValidationError("quasi_extremal_check: degree must be >= 2");
    QuasiExtremalReport rep;
    rep.derivative_root_moduli = derivative_root_moduli(p);
    for (double m : rep.derivative_root_moduli)
        rep.max_root_deviation = std::max(rep.max_root_deviation, std::abs(m - 1.0));
    rep.derivative_roots_on_circle = rep.max_root_deviation <= kRootModulusTol;

    const CurveSamples curve = sample_boundary(p, std::max(samples, 4096));
    rep.boundary_simple = self_intersections(curve).empty();
    rep.winding_ok = interior_winding_ok(p, curve).value_or(false);
    return rep;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

UnivalenceReport univalence_report(const RealPolynomial& p, int samples) {
    UnivalenceReport rep;
    const TypicallyRealCheck tr = typically_real_check(p, std::max(8 * p.degree(), 256));
    rep.typically_real = tr.typically_real;
    rep.min_im_upper_half = tr.min_im;
    rep.derivative_root_moduli = derivative_root_moduli(p);

    const CurveSamples curve = sample_boundary(p, std::max(samples, 4096));
    try {
        rep.boundary_simple = self_intersections(curve).empty();
    } catch (const DegenerateSegment& e) {
        throw InconclusiveAtResolution(e.what());
    }

    const std::optional<bool> winding = interior_winding_ok(p, curve);
    rep.winding_ok = winding.value_or(false);
    if (!rep.boundary_simple || (winding.has_value() && !*winding))
        rep.verdict = Verdict::fail;
    else if (!winding.has_value())
        rep.verdict = Verdict::inconclusive;
    else
        rep.verdict = Verdict::pass;
    return rep;
}

DkObjective dk_objective(const RealPolynomial& p) {
    double sum = 0.0, maxc = 0.0;
    for (double c : p.coeffs()) {
        sum += c;
        maxc = std::max(maxc, std::abs(c));
    }
    if (std::abs(sum) < 1e-12 * (1.0 + maxc))
        throw NormalizationFailure("dk_objective: coefficients sum to zero");

    std::vector<double> scaled = p.coeffs();
    for (double& c : scaled) c /= sum;
    const RealPolynomial f(std::move(scaled));
    double maxf = 0.0;
    for (double c : f.coeffs()) maxf = std::max(maxf, std::abs(c));
    const double zero_tol = 1e-9 * (1.0 + maxf);

    const auto im_at = [&](double t) { return f(std::polar(1.0, t)).imag(); };

    const int res = 8192;
    std::vector<double> ts(res + 1), im(res + 1);
    for (int i = 0; i <= res; ++i) {
        ts[static_cast<std::size_t>(i)] = std::numbers::pi * i / res;
        im[static_cast<std::size_t>(i)] = im_at(ts[static_cast<std::size_t>(i)]);
    }

    std::vector<double> zeros{0.0, std::numbers::pi};
    // transversal zeros by bisection on sign changes
    for (int i = 0; i < res; ++i) {
        if (im[static_cast<std::size_t>(i)] == 0.0 && i > 0)
            zeros.push_back(ts[static_cast<std::size_t>(i)]);
        if (im[static_cast<std::size_t>(i)] * im[static_cast<std::size_t>(i + 1)] < 0.0) {
            double a = ts[static_cast<std::size_t>(i)], b = ts[static_cast<std::size_t>(i + 1)];
            double fa = im[static_cast<std::size_t>(i)];
            while (b - a > 1e-12) {
                const double m = 0.5 * (a + b);
                const double fm = im_at(m);
                if (fa * fm <= 0.0) {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            zeros.push_back(0.5 * (a + b));
        }
    }
    // tangential zeros: refine interior local minima of |Im| by golden section
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 1; i < res; ++i) {
        const double m0 = std::abs(im[static_cast<std::size_t>(i - 1)]);
        const double m1 = std::abs(im[static_cast<std::size_t>(i)]);
        const double m2 = std::abs(im[static_cast<std::size_t>(i + 1)]);
        if (!(m1 <= m0 && m1 <= m2)) continue;
        double a = ts[static_cast<std::size_t>(i - 1)], b = ts[static_cast<std::size_t>(i + 1)];
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = std::abs(im_at(x1)), f2 = std::abs(im_at(x2));
        while (b - a > 1e-12) {
            if (f1 <= f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a); f1 = std::abs(im_at(x1));
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a); f2 = std::abs(im_at(x2));
            }
        }
        const double t_min = 0.5 * (a + b);
        if (std::abs(im_at(t_min)) <= zero_tol)
            zeros.push_back(t_min);
    }

    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                zeros.end());

    DkObjective out;
    out.zero_angles = zeros;
    out.value_at_pi = f(Complex(-1.0, 0.0)).real();
    out.objective = std::numeric_limits<double>::infinity();
    for (double t : zeros)
        out.objective = std::min(out.objective, f(std::polar(1.0, t)).real());
    return out;
}

}  // namespace suffridge
