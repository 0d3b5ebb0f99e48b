#ifndef SUFFRIDGE_POLY_HPP
#define SUFFRIDGE_POLY_HPP

#include <complex>
#include <vector>

#include "suffridge/errors.hpp"

namespace suffridge {

using Complex = std::complex<double>;

/// Polynomial a_1 z + a_2 z^2 + ... + a_N z^N with real coefficients and no
/// constant term (every family handled here is normalized to f(0) = 0).
/// The degree is tight: a_N != 0.
class RealPolynomial {
public:
    explicit RealPolynomial(std::vector<double> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()); }

    /// a_k, 1-based, 1 <= k <= degree().
    double coeff(int k) const { return coeffs_[static_cast<std::size_t>(k) - 1]; }

    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Horner evaluation of sum a_k z^k.
    Complex operator()(Complex z) const;
    double operator()(double x) const;

private:
    std::vector<double> coeffs_;
};

/// General polynomial c_0 + c_1 z + ... + c_m z^m. Derivatives of
/// RealPolynomial land here since they pick up a constant term.
class Polynomial {
public:
    explicit Polynomial(std::vector<double> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// c_k, 0-based.
    double coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    const std::vector<double>& coeffs() const { return coeffs_; }

    Complex operator()(Complex z) const;
    double operator()(double x) const;

private:
    std::vector<double> coeffs_;
};

Polynomial derivative(const RealPolynomial& p);
Polynomial derivative(const Polynomial& p);

/// z^n by binary exponentiation, n >= 0.
Complex pow_int(Complex z, int n);

}  // namespace suffridge

#endif
