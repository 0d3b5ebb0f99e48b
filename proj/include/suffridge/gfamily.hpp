#ifndef SUFFRIDGE_GFAMILY_HPP
#define SUFFRIDGE_GFAMILY_HPP

#include <optional>
#include <vector>

#include "suffridge/poly.hpp"

namespace suffridge {

/// One-parameter family built from products of sine ratios:
///   G_{N,mu}(z) = z + sum_{k=2}^{N} (1 - (k-1)/N)
///                 prod_{j=1}^{k-1} sin(pi(j+mu)/(N+mu)) / sin(pi j/(N+mu)) z^k.
/// mu = 1 reproduces S_{N,1}, mu = 0 the Fejer coefficients (N+1-k)/N, and
/// mu = -1 the analytic limit z + z^N/N (resolved exactly, not numerically).
struct GFamilyParams {
    int n = 2;
    double mu = 1.0;

    void validate() const;
};

RealPolynomial g_family_coefficients(const GFamilyParams& p);

/// sup over |z| = radius of |G_{N,mu}(z) - z/(1-z)^{1+mu}| (principal
/// branch). No convergence rate is asserted; callers watch it decrease in N.
double g_limit_check(const GFamilyParams& p, double radius, int samples);

/// Downward sweep from mu = -1 for the first loss of univalence.
struct ZetaEstimate {
    int n = 0;
    double mu_lo = 0.0;  // failing end of the final bracket
    double mu_hi = 0.0;  // passing end; |mu_hi - mu_lo| <= tol when a failure was found
    std::vector<double> certified_pass;
    std::optional<double> first_fail;  // none if no failure above the sweep floor
    double max_root_deviation = 0.0;   // max ||r|-1| over derivative roots of passing members
};

/// Verifies pass on a coarse grid of [-1, 1], then steps mu down from -1 by
/// mu_step until univalence_report fails, and bisects the bracket to width
/// tol. Sweep floor is -N + 0.5; reaching it without a failure is reported
/// via first_fail = none rather than thrown.
ZetaEstimate zeta_estimate(int n, double mu_step, double tol);

}  // namespace suffridge

#endif
