#include "suffridge/gfamily.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "suffridge/univalence.hpp"

namespace suffridge {

namespace {

constexpr double kDenomTol = 1e-14;

}  // namespace

void GFamilyParams::validate() const {
    if (n < 2)
        throw ValidationError("GFamilyParams: N must be >= 2");
    if (!(mu > -static_cast<double>(n)))
        throw ValidationError("GFamilyParams: mu must exceed -N");
}

RealPolynomial g_family_coefficients(const GFamilyParams& p) {
    p.validate();
    if (p.mu == -1.0) {
        // Every product for 2 <= k <= N-1 carries the factor sin(pi(1+mu)/(N+mu)) -> 0,
        // and for k = N the same factor cancels against the vanishing trailing
        // denominator, telescoping to exactly 1. Limit: z + z^N/N.
        std::vector<double> c(static_cast<std::size_t>(p.n), 0.0);
        c.front() = 1.0;
        c.back() = 1.0 / p.n;
        return RealPolynomial(std::move(c));
    }
    std::vector<double> c(static_cast<std::size_t>(p.n));
    c[0] = 1.0;
    double prod = 1.0;
    for (int k = 2; k <= p.n; ++k) {
        const int j = k - 1;
        const double den = std::sin(std::numbers::pi * j / (p.n + p.mu));
        if (std::abs(den) < kDenomTol)
            throw SingularParameter("g_family_coefficients: sin(pi j/(N+mu)) vanishes");
        prod *= std::sin(std::numbers::pi * (j + p.mu) / (p.n + p.mu)) / den;
        c[static_cast<std::size_t>(k) - 1] = (1.0 - (k - 1.0) / p.n) * prod;
    }
    return RealPolynomial(std::move(c));
}

double g_limit_check(const GFamilyParams& p, double radius, int samples) {
    if (!(radius >= 0.0 && radius < 1.0))
        throw ValidationError("g_limit_check: radius must lie in [0, 1)");
    if (samples < 1)
        throw ValidationError("g_limit_check: at least one sample required");
    if (radius == 0.0) return 0.0;
    const RealPolynomial g = g_family_coefficients(p);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const Complex z = std::polar(radius, 2.0 * std::numbers::pi * k / samples);
        const Complex target = z * std::pow(1.0 - z, Complex(-(1.0 + p.mu), 0.0));
        worst = std::max(worst, std::abs(g(z) - target));
    }
    return worst;
}

ZetaEstimate zeta_estimate(int n, double mu_step, double tol) {
    if (n < 2)
        throw ValidationError("zeta_estimate: N must be >= 2");
    if (!(mu_step > 0.0 && mu_step <= 0.05))
        throw ValidationError("zeta_estimate: mu_step must lie in (0, 0.05]");
    if (!(tol > 0.0 && tol <= 1e-3))
        throw ValidationError("zeta_estimate: tol must lie in (0, 1e-3]");

    ZetaEstimate out;
    out.n = n;

    const auto passes = [&](double mu) {
        try {
            const UnivalenceReport rep = univalence_report(g_family_coefficients({n, mu}), 4096);
            if (rep.verdict != Verdict::pass) return false;
            for (double m : rep.derivative_root_moduli)
                out.max_root_deviation = std::max(out.max_root_deviation, std::abs(m - 1.0));
            return true;
        } catch (const NumericError&) {
            return false;  // undecidable members count as failures for the sweep
        }
    };

    // coarse grid over the known-good segment
    for (double mu : {1.0, 0.5, 0.0, -0.5})
        if (passes(mu)) out.certified_pass.push_back(mu);

    if (!passes(-1.0)) {
        out.first_fail = -1.0;
        out.mu_lo = -1.0;
        out.mu_hi = -1.0;
        return out;
    }
    out.certified_pass.push_back(-1.0);

    const double floor = -static_cast<double>(n) + 0.5;
    double hi = -1.0;
    double lo = 0.0;
    bool found = false;
    for (int k = 1;; ++k) {
        const double mu = -1.0 - k * mu_step;
        if (mu < floor) break;
        if (passes(mu)) {
            out.certified_pass.push_back(mu);
            hi = mu;
        } else {
            lo = mu;
            out.first_fail = mu;
            found = true;
            break;
        }
    }
    if (!found) {
        out.mu_lo = floor;
        out.mu_hi = hi;
        std::sort(out.certified_pass.begin(), out.certified_pass.end());
        return out;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (hi + lo);
        if (passes(mid)) {
            out.certified_pass.push_back(mid);
            hi = mid;
        } else {
            lo = mid;
        }
    }
    out.mu_lo = lo;
    out.mu_hi = hi;
    std::sort(out.certified_pass.begin(), out.certified_pass.end());
    return out;
}

}  // namespace suffridge
