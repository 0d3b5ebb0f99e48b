#ifndef SUFFRIDGE_KERNELS_HPP
#define SUFFRIDGE_KERNELS_HPP

#include "suffridge/poly.hpp"
#include "suffridge/suffridge.hpp"

namespace suffridge {

enum class KernelKind {
    koebe,          // z/(1-z)^2
    two_symmetric,  // z/(1+z^2)
    generalized,    // z/(1 - 2 z cos(q*pi) + z^2), q in (0,1)
};

struct KernelSpec {
    KernelKind kind = KernelKind::koebe;
    double q = 0.5;  // used only by `generalized`
};

/// Throws PoleProximity within tolerance of the kernel's poles
/// (z = 1, z = ±i, z = e^{±i q pi} respectively).
Complex kernel_eval(const KernelSpec& spec, Complex z);

/// rho_N = (1 - sin(pi/(2N+2))) / (1 + sin(pi/(2N+2))): the radius for which
/// the Koebe image K(rho_N D) sits inside the normalized Suffridge image.
double inclusion_radius(int n);

struct SubordinationReport {
    bool all_inside = false;
    double margin = 0.0;  // min distance from any probe to the boundary polyline
};

/// Samples w = K(rho_N e^{it}) on a midpoint t-grid (the two boundaries are
/// tangent at t = 0: K(rho_N) equals the right endpoint of the normalized
/// image exactly) and verifies winding number 1 around each sample with
/// respect to the normalized curve -S_{N,1}(e^{it})/(4 S_{N,1}(-1)).
SubordinationReport subordination_check(int n, int samples);

struct IntervalInclusionReport {
    bool all_inside = false;
    double left = 0.0;   // -1/4
    double right = 0.0;  // (1/4) cot^2(pi/(2N+2))
    double margin = 0.0;
};

/// Winding test for real points of (-1/4, (1/4)cot^2(pi/(2N+2))) inside the
/// normalized Suffridge image, shrunk by 1e-3 of the interval length.
IntervalInclusionReport dimitrov_interval_check(int n);

/// sup over |z| = radius of |S_{N,j}(z) - kernel(z)|, by dense circle
/// sampling (the maximum-modulus principle makes circle sampling enough).
double approx_error(const SuffridgeParams& p, double radius,
                    const KernelSpec& target, int samples);

}  // namespace suffridge

#endif
