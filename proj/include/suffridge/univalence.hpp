#ifndef SUFFRIDGE_UNIVALENCE_HPP
#define SUFFRIDGE_UNIVALENCE_HPP

#include <vector>

#include "suffridge/poly.hpp"

namespace suffridge {

/// The Suffridge coefficient formula with the lattice angle j*pi/(N+1)
/// replaced by a free parameter mu in (0, pi).
struct RobustFamilyParams {
    int n = 1;
    double mu = 1.0;

    void validate() const;
};

RealPolynomial robust_family_coefficients(const RobustFamilyParams& p);

/// Phi(t, mu) = 2 sin t sin mu + sin Nt sin((N+2)mu)
///              - 2 sin((N+1)t) sin((N+1)mu) + sin((N+2)t) sin(N mu).
/// Its sign matches the sign of Im S_N(e^{it}, mu).
double phi(int n, double t, double mu);

/// max over both signs of |Phi(mu ± 2pi/(N+1), mu) + 4 sin^2(pi/(N+1)) sin^2((N+1)mu)|.
double phi_identity_residual(int n, double mu);

struct TypicallyRealCheck {
    bool typically_real = false;
    double min_im = 0.0;
};

/// Minimum of Im p(e^{it}) over a uniform t-grid on [0, pi];
/// typically real iff the minimum clears -1e-10 (1 + max|a_k|).
/// grid_size must be >= 8 * degree.
TypicallyRealCheck typically_real_check(const RealPolynomial& p, int grid_size);

/// Numeric proxy for quasi-extremality: (i) all derivative roots on the unit
/// circle within tolerance, (ii) boundary curve simple at the sampling
/// resolution, (iii) winding number 1 on an interior probe set. The
/// existential domain conditions of the full definition are out of numeric
/// reach and are not decided here.
struct QuasiExtremalReport {
    bool derivative_roots_on_circle = false;
    double max_root_deviation = 0.0;
    bool boundary_simple = false;
    bool winding_ok = false;
    std::vector<double> derivative_root_moduli;
};
QuasiExtremalReport quasi_extremal_check(const RealPolynomial& p, int samples = 4096);

enum class Verdict { pass, fail, inconclusive };
const char* to_string(Verdict v);

/// verdict = pass iff the boundary curve is simple at the test resolution
/// and the winding number is 1 on an interior probe grid (argument
/// principle). typically_real and the root moduli are evidence, not gates:
/// real-coefficient univalent polynomials are typically real but the
/// converse fails.
struct UnivalenceReport {
    bool typically_real = false;
    double min_im_upper_half = 0.0;
    std::vector<double> derivative_root_moduli;
    bool boundary_simple = false;
    bool winding_ok = false;
    Verdict verdict = Verdict::inconclusive;
};
UnivalenceReport univalence_report(const RealPolynomial& p, int samples = 4096);

/// After renormalizing the coefficients to sum 1, the minimum of
/// Re F(e^{it}) over all t in [0, pi] with Im F(e^{it}) = 0. Zeros are found
/// by sign-scanning plus bisection; tangential zeros (no sign change) are
/// recovered from refined local minima of |Im|. t = 0 and t = pi are always
/// zeros since the coefficients are real.
struct DkObjective {
    double objective = 0.0;
    double value_at_pi = 0.0;              // Re F(-1), for comparison
    std::vector<double> zero_angles;
};
DkObjective dk_objective(const RealPolynomial& p);

}  // namespace suffridge

#endif
