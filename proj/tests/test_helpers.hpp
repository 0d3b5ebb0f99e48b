#ifndef SUFFRIDGE_TEST_HELPERS_HPP
#define SUFFRIDGE_TEST_HELPERS_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "suffridge/poly.hpp"

// Independent oracles. Everything here deliberately avoids the library's
// closed forms and Horner paths so the tests check against a second route.
namespace oracle {

using suffridge::Complex;

// term-by-term sum a_1 z + a_2 z^2 + ... with explicit powers
inline Complex naive_eval(const std::vector<double>& a, Complex z) {
    Complex acc = 0.0;
    Complex zk = 1.0;
    for (double c : a) {
        zk *= z;
        acc += c * zk;
    }
    return acc;
}

inline Complex naive_sine_sum(double alpha, int n, Complex z) {
    Complex acc = 0.0, zk = 1.0;
    for (int k = 1; k <= n; ++k) {
        zk *= z;
        acc += std::sin(k * alpha) * zk;
    }
    return acc;
}

inline Complex naive_cosine_sum(double alpha, int n, Complex z) {
    Complex acc = 0.0, zk = 1.0;
    for (int k = 1; k <= n; ++k) {
        zk *= z;
        acc += std::cos(k * alpha) * zk;
    }
    return acc;
}

inline Complex naive_weighted_sine_sum(double alpha, int n, Complex z) {
    Complex acc = 0.0, zk = 1.0;
    for (int k = 1; k <= n; ++k) {
        zk *= z;
        acc += static_cast<double>(k) * std::sin(k * alpha) * zk;
    }
    return acc;
}

// Suffridge coefficients straight from the defining ratio formula.
inline std::vector<double> suffridge_coeffs(int n, int j) {
    const double a = j * std::numbers::pi / (n + 1);
    std::vector<double> c(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        c[static_cast<std::size_t>(k) - 1] =
            (static_cast<double>(n + 1 - k) / n) * std::sin(k * a) / std::sin(a);
    return c;
}

// composite Simpson on [a, b]
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    const int n = 2 * panels;
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        acc += f(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// integral of the Robertson density of p from -1 to t, via the substitution
// xi = cos(phi) which removes the endpoint square-root singularity
inline double measure_by_quadrature(const suffridge::RealPolynomial& p, double t, int panels = 4000) {
    const double theta = std::acos(t);
    const auto integrand = [&](double phi) {
        const double s = std::sin(phi);
        double im = 0.0;  // sum b_k sin(k phi) = Im p(e^{i phi})
        for (int k = 1; k <= p.degree(); ++k)
            im += p.coeff(k) * std::sin(k * phi);
        return (2.0 / std::numbers::pi) * s * im;
    };
    if (theta >= std::numbers::pi) return 0.0;
    return simpson(integrand, theta, std::numbers::pi, panels);
}

// k-th Taylor coefficient of f by a trapezoidal Cauchy integral on |z| = r
inline double taylor_coefficient(const std::function<Complex(Complex)>& f, int k, double r,
                                 int samples = 4096) {
    Complex acc = 0.0;
    for (int m = 0; m < samples; ++m) {
        const double t = 2.0 * std::numbers::pi * m / samples;
        acc += f(std::polar(r, t)) * std::polar(1.0, -k * t);
    }
    return (acc / static_cast<double>(samples)).real() / std::pow(r, k);
}

}  // namespace oracle

#endif
