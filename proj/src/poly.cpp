#include "suffridge/poly.hpp"

#include <cmath>

namespace suffridge {

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw ValidationError("RealPolynomial: at least one coefficient required");
    for (double c : coeffs_)
        if (!std::isfinite(c))
            throw ValidationError("RealPolynomial: non-finite coefficient");
    if (coeffs_.back() == 0.0)
        throw ValidationError("RealPolynomial: leading coefficient must be nonzero");
}

Complex RealPolynomial::operator()(Complex z) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc * z;
}

double RealPolynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc * x;
}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw ValidationError("Polynomial: at least one coefficient required");
    for (double c : coeffs_)
        if (!std::isfinite(c))
            throw ValidationError("Polynomial: non-finite coefficient");
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0)
        coeffs_.pop_back();
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

double Polynomial::operator()(double x) const {
    double acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial derivative(const RealPolynomial& p) {
    std::vector<double> d(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k)
        d[static_cast<std::size_t>(k) - 1] = k * p.coeff(k);
    return Polynomial(std::move(d));
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() == 0)
        return Polynomial({0.0});
    std::vector<double> d(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k)
        d[static_cast<std::size_t>(k) - 1] = k * p.coeff(k);
    return Polynomial(std::move(d));
}

Complex pow_int(Complex z, int n) {
    Complex acc = 1.0;
    Complex base = z;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

}  // namespace suffridge
