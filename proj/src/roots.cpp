#include "suffridge/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace suffridge {

namespace {

Complex horner(const std::vector<double>& c, Complex z) {
    Complex p = c.back();
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it)
        p = p * z + *it;
    return p;
}

// p and p' in one pass.
std::pair<Complex, Complex> horner2(const std::vector<double>& c, Complex z) {
    Complex p = c.back();
    Complex dp = 0.0;
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

double max_abs(const std::vector<double>& c) {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

bool residual_ok(const std::vector<double>& c, const std::vector<Complex>& rs, double tol) {
    const double mc = max_abs(c);
    const int deg = static_cast<int>(c.size()) - 1;
    for (Complex r : rs) {
        const double bound = tol * mc * std::pow(std::max(1.0, std::abs(r)), deg);
        if (std::abs(horner(c, r)) > bound) return false;
    }
    return true;
}

std::vector<Complex> companion_roots(const std::vector<double>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) m(i, d - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        out.push_back(es.eigenvalues()(i));
    return out;
}

void newton_polish(const std::vector<double>& c, std::vector<Complex>& rs, int steps) {
    for (Complex& r : rs) {
        for (int s = 0; s < steps; ++s) {
            auto [p, dp] = horner2(c, r);
            if (std::abs(dp) < 1e-300) break;
            r -= p / dp;
        }
    }
}

bool aberth(const std::vector<double>& c, std::vector<Complex>& zs, int max_iter) {
    const int d = static_cast<int>(c.size()) - 1;
    for (int iter = 0; iter < max_iter; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < d; ++i) {
            auto [p, dp] = horner2(c, zs[static_cast<std::size_t>(i)]);
            if (p == Complex(0.0)) continue;
            Complex ratio;
            if (std::abs(dp) > 1e-300) {
                ratio = p / dp;
            } else {
                // stationary point hit; nudge off it
                zs[static_cast<std::size_t>(i)] += Complex(1e-8, 1e-8);
                continue;
            }
            Complex s = 0.0;
            for (int k = 0; k < d; ++k) {
                if (k == i) continue;
                Complex diff = zs[static_cast<std::size_t>(i)] - zs[static_cast<std::size_t>(k)];
                if (std::abs(diff) < 1e-150) continue;
                s += 1.0 / diff;
            }
            Complex denom = 1.0 - ratio * s;
            Complex w = (std::abs(denom) > 1e-300) ? ratio / denom : ratio;
            zs[static_cast<std::size_t>(i)] -= w;
            max_step = std::max(max_step, std::abs(w) / (1.0 + std::abs(zs[static_cast<std::size_t>(i)])));
        }
        if (max_step < 1e-15) return true;
    }
    return false;
}

}  // namespace

std::vector<Complex> roots(const Polynomial& p, const RootOptions& opts) {
    if (p.degree() < 1)
        throw ValidationError("roots: degree must be >= 1");

    const auto& all = p.coeffs();
    std::vector<Complex> found;

    // exact zeros at the origin
    std::size_t lo = 0;
    while (lo + 1 < all.size() && all[lo] == 0.0) {
        found.push_back(Complex(0.0));
        ++lo;
    }
    std::vector<double> c(all.begin() + static_cast<long>(lo), all.end());
    const int d = static_cast<int>(c.size()) - 1;

    if (d == 1) {
        found.push_back(Complex(-c[0] / c[1]));
    } else if (d >= 2) {
        // staggered circle of initial guesses; radius from the geometric mean
        // of the root moduli, clamped by the Cauchy bound
        double cauchy = 0.0;
        for (std::size_t k = 0; k + 1 < c.size(); ++k)
            cauchy = std::max(cauchy, std::abs(c[k] / c.back()));
        double radius = (c[0] != 0.0)
                            ? std::pow(std::abs(c[0] / c.back()), 1.0 / d)
                            : 0.5;
        radius = std::clamp(radius, 0.25, 1.0 + cauchy);

        std::vector<Complex> zs(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            zs[static_cast<std::size_t>(i)] =
                std::polar(radius, 2.0 * std::numbers::pi * i / d + 0.376);

        bool converged = aberth(c, zs, opts.max_iter);
        if (!converged || !residual_ok(c, zs, opts.tol)) {
            zs = companion_roots(c);
            newton_polish(c, zs, 3);
            if (!residual_ok(c, zs, opts.tol))
                throw NonConvergence("roots: residual bound not met after companion fallback");
        }
        found.insert(found.end(), zs.begin(), zs.end());
    }

    std::sort(found.begin(), found.end(), [](Complex a, Complex b) {
        const double aa = std::arg(a), ab = std::arg(b);
        if (aa != ab) return aa < ab;
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma < mb;
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return found;
}

}  // namespace suffridge
