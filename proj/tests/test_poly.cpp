#include <doctest.h>

#include <cmath>

#include "suffridge/poly.hpp"
#include "suffridge/rng.hpp"
#include "test_helpers.hpp"

using suffridge::Complex;
using suffridge::Polynomial;
using suffridge::RealPolynomial;

TEST_CASE("eval: identity polynomial maps i to i") {
    const RealPolynomial p({1.0});
    CHECK(p(Complex(0.0, 1.0)) == Complex(0.0, 1.0));
}

TEST_CASE("eval: degree-5 example at z = 1") {
    const RealPolynomial p({1.0, 4.0 / 5.0, 0.0, -2.0 / 5.0, -1.0 / 5.0});
    CHECK(std::abs(p(Complex(1.0, 0.0)) - Complex(6.0 / 5.0, 0.0)) < 1e-15);
}

TEST_CASE("eval matches term-by-term summation") {
    const std::vector<double> c{1.0, 4.0 / 5.0, 0.0, -2.0 / 5.0, -1.0 / 5.0};
    const RealPolynomial p(c);
    const Complex z(0.3, 0.1);
    CHECK(std::abs(p(z) - oracle::naive_eval(c, z)) < 1e-14);

    suffridge::Rng rng(7);
    std::vector<double> r;
    for (int k = 0; k < 9; ++k) r.push_back(rng.uniform(-2.0, 2.0));
    if (r.back() == 0.0) r.back() = 0.5;
    const RealPolynomial q(r);
    for (int i = 0; i < 20; ++i) {
        const Complex zz(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        CHECK(std::abs(q(zz) - oracle::naive_eval(r, zz)) < 1e-12 * (1.0 + std::abs(q(zz))));
    }
}

TEST_CASE("derivative: basic shapes") {
    SUBCASE("z -> constant 1") {
        const Polynomial d = derivative(RealPolynomial({1.0}));
        CHECK(d.degree() == 0);
        CHECK(d.coeff(0) == 1.0);
    }
    SUBCASE("z + z^N/N -> 1 + z^{N-1}") {
        const int n = 9;
        std::vector<double> c(n, 0.0);
        c[0] = 1.0;
        c[n - 1] = 1.0 / n;
        const Polynomial d = derivative(RealPolynomial(c));
        CHECK(d.degree() == n - 1);
        CHECK(d.coeff(0) == 1.0);
        CHECK(d.coeff(n - 1) == doctest::Approx(1.0).epsilon(1e-15));
        for (int k = 1; k < n - 1; ++k) CHECK(d.coeff(k) == 0.0);
    }
    SUBCASE("degree-5 example, against hand differentiation") {
        const Polynomial d = derivative(RealPolynomial({1.0, 4.0 / 5.0, 0.0, -2.0 / 5.0, -1.0 / 5.0}));
        CHECK(d.coeff(0) == doctest::Approx(1.0));
        CHECK(d.coeff(1) == doctest::Approx(8.0 / 5.0));
        CHECK(d.coeff(2) == doctest::Approx(0.0));
        CHECK(d.coeff(3) == doctest::Approx(-8.0 / 5.0));
        CHECK(d.coeff(4) == doctest::Approx(-1.0));
    }
}

TEST_CASE("derivative agrees with central differences on random points") {
    suffridge::Rng rng(11);
    std::vector<double> c;
    for (int k = 0; k < 7; ++k) c.push_back(rng.uniform(-1.0, 1.0));
    if (c.back() == 0.0) c.back() = 0.3;
    const RealPolynomial p(c);
    const Polynomial dp = derivative(p);
    const double h = 1e-5;
    for (int i = 0; i < 25; ++i) {
        const double r = std::sqrt(rng.uniform());
        const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const Complex z = std::polar(r, t);
        const Complex fd = (p(z + h) - p(z - h)) / (2.0 * h);
        CHECK(std::abs(dp(z) - fd) < 1e-8);
    }
}

TEST_CASE("RealPolynomial validates its invariants") {
    CHECK_THROWS_AS(RealPolynomial({}), suffridge::ValidationError);
    CHECK_THROWS_AS(RealPolynomial({1.0, 0.0}), suffridge::ValidationError);
    CHECK_THROWS_AS(RealPolynomial({std::nan(""), 1.0}), suffridge::ValidationError);
}

TEST_CASE("pow_int matches repeated multiplication") {
    const Complex z(0.4, -0.7);
    Complex acc = 1.0;
    for (int k = 0; k <= 12; ++k) {
        CHECK(std::abs(suffridge::pow_int(z, k) - acc) < 1e-14 * (1.0 + std::abs(acc)));
        acc *= z;
    }
}
