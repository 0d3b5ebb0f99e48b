#include "suffridge/robertson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace suffridge {

namespace {

void check_unit_interval(double t, const char* who) {
    if (!(t >= -1.0 && t <= 1.0))
        throw ValidationError(std::string(who) + ": t must lie in [-1, 1]");
}

// sum_{k=1}^{N} b_k U_{k-1}(t) in one recurrence pass.
double u_series(const std::vector<double>& b, double t) {
    double um = 0.0;  // U_{-1}
    double u = 1.0;   // U_0
    double acc = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        acc += b[k] * u;
        const double next = 2.0 * t * u - um;
        um = u;
        u = next;
    }
    return acc;
}

}  // namespace

double chebyshev_u(int k, double t) {
    if (k < 0)
        throw ValidationError("chebyshev_u: k must be >= 0");
    check_unit_interval(t, "chebyshev_u");
    double um = 0.0, u = 1.0;
    for (int i = 0; i < k; ++i) {
        const double next = 2.0 * t * u - um;
        um = u;
        u = next;
    }
    return u;
}

ChebyshevUDerivatives chebyshev_u_derivatives(int k, double t) {
    if (k < 0)
        throw ValidationError("chebyshev_u_derivatives: k must be >= 0");
    check_unit_interval(t, "chebyshev_u_derivatives");
    // recur U, U', U'' together: d/dt U_{k+1} = 2U_k + 2t U_k' - U_{k-1}' etc.
    double um = 0.0, u = 1.0;
    double dum = 0.0, du = 0.0;
    double d2um = 0.0, d2u = 0.0;
    for (int i = 0; i < k; ++i) {
        const double unext = 2.0 * t * u - um;
        const double dunext = 2.0 * u + 2.0 * t * du - dum;
        const double d2unext = 4.0 * du + 2.0 * t * d2u - d2um;
        um = u; u = unext;
        dum = du; du = dunext;
        d2um = d2u; d2u = d2unext;
    }
    return {u, du, d2u};
}

double chebyshev_identity_residual(int k, double t) {
    if (k < 1)
        throw ValidationError("chebyshev_identity_residual: k must be >= 1");
    const ChebyshevUDerivatives d = chebyshev_u_derivatives(k, t);
    // (1-t^2) y'' - 3t y' + k(k+2) y = 0 is the second-kind Chebyshev ODE
    const double rhs = (3.0 * t * d.d1 - (1.0 - t * t) * d.d2) / (static_cast<double>(k) * (k + 2.0));
    return std::abs(d.value - rhs);
}

double robertson_density(const RealPolynomial& p, double t) {
    check_unit_interval(t, "robertson_density");
    const double w = std::max(0.0, 1.0 - t * t);
    return (2.0 / std::numbers::pi) * std::sqrt(w) * u_series(p.coeffs(), t);
}

double robertson_measure(const RealPolynomial& p, double t) {
    check_unit_interval(t, "robertson_measure");
    const auto& b = p.coeffs();
    const double w = std::max(0.0, 1.0 - t * t);
    const double sw = std::sqrt(w);
    // b_1 part: antiderivative of (2/pi) sqrt(1-t^2) from -1, which vanishes
    // at t = -1 with the +1/2 constant
    double mu = b[0] * (0.5 + (std::asin(t) + t * sw) / std::numbers::pi);
    if (b.size() > 1) {
        // sum_{k=2}^{N} b_k U'_{k-1}(t) / (k^2 - 1)
        double um = 0.0, u = 1.0, dum = 0.0, du = 0.0;
        double acc = 0.0;
        for (std::size_t k = 2; k <= b.size(); ++k) {
            const double unext = 2.0 * t * u - um;
            const double dunext = 2.0 * u + 2.0 * t * du - dum;
            um = u; u = unext;
            dum = du; du = dunext;
            // here u = U_{k-1}, du = U'_{k-1}
            acc += b[k - 1] * du / (static_cast<double>(k) * k - 1.0);
        }
        mu -= (2.0 / std::numbers::pi) * w * sw * acc;
    }
    return mu;
}

double robertson_measure(const SuffridgeParams& p, double t) {
    return robertson_measure(coefficients(p), t);
}

MeasureTable measure_table(const RealPolynomial& p, int grid) {
    if (grid < 2)
        throw ValidationError("measure_table: grid must have at least 2 points");
    MeasureTable out;
    out.t.reserve(static_cast<std::size_t>(grid));
    out.mu.reserve(static_cast<std::size_t>(grid));
    out.density.reserve(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        const double t = -1.0 + 2.0 * i / (grid - 1.0);
        out.t.push_back(t);
        out.mu.push_back(robertson_measure(p, t));
        out.density.push_back(robertson_density(p, t));
    }
    return out;
}

QuadratureRule gauss_chebyshev_u(int m) {
    if (m < 1)
        throw ValidationError("gauss_chebyshev_u: at least one node required");
    QuadratureRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(m));
    rule.weights.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const double theta = i * std::numbers::pi / (m + 1.0);
        const double s = std::sin(theta);
        rule.nodes.push_back(std::cos(theta));
        rule.weights.push_back(std::numbers::pi / (m + 1.0) * s * s);
    }
    return rule;
}

double representation_check(const RealPolynomial& p, Complex z) {
    if (!(std::abs(z) < 1.0))
        throw ValidationError("representation_check: |z| must be < 1");

    // kernel z/(1 - 2tz + z^2) = sum U_{k-1}(t) z^k, so orthogonality returns
    // sum b_k z^k = p(z) with f(0) = 0 preserved
    const auto integrate = [&](int m) {
        const QuadratureRule rule = gauss_chebyshev_u(m);
        Complex acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t = rule.nodes[i];
            acc += rule.weights[i] * u_series(p.coeffs(), t) * z /
                   (1.0 - 2.0 * t * z + z * z);
        }
        return acc * (2.0 / std::numbers::pi);
    };

    const int m1 = std::max(96, 4 * (p.degree() + 1));
    Complex i1 = integrate(m1);
    Complex i2 = integrate(2 * m1);
    if (std::abs(i1 - i2) > 1e-7 * (1.0 + std::abs(i2))) {
        const Complex i4 = integrate(4 * m1);
        if (std::abs(i2 - i4) > 1e-7 * (1.0 + std::abs(i4)))
            throw QuadratureNonConvergence(
                "representation_check: node doubling did not converge");
        i2 = i4;
    }
    return std::abs(i2 - p(z));
}

double step_limit(double q, double t) {
    return t >= std::cos(q * std::numbers::pi) ? 1.0 : 0.0;
}

}  // namespace suffridge
