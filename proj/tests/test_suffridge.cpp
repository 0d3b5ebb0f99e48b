#include <doctest.h>

#include <cmath>
#include <numbers>

#include "suffridge/rng.hpp"
#include "suffridge/suffridge.hpp"
#include "test_helpers.hpp"

using suffridge::Complex;
using suffridge::SuffridgeParams;
using suffridge::TrigSumParams;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("coefficients of S_{5,2} match the known expansion") {
    const auto p = suffridge::coefficients({5, 2});
    REQUIRE(p.degree() == 5);
    CHECK(std::abs(p.coeff(1) - 1.0) < 1e-14);
    CHECK(std::abs(p.coeff(2) - 4.0 / 5.0) < 1e-14);
    CHECK(std::abs(p.coeff(3)) < 1e-14);
    CHECK(std::abs(p.coeff(4) + 2.0 / 5.0) < 1e-14);
    CHECK(std::abs(p.coeff(5) + 1.0 / 5.0) < 1e-14);
}

TEST_CASE("S_{1,1} is the identity") {
    const auto p = suffridge::coefficients({1, 1});
    REQUIRE(p.degree() == 1);
    CHECK(p.coeff(1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("leading coefficient is (-1)^{j-1}/N") {
    for (int n = 1; n <= 30; ++n) {
        for (int j = 1; j <= n; ++j) {
            const auto p = suffridge::coefficients({n, j});
            const double expected = ((j % 2 == 1) ? 1.0 : -1.0) / n;
            CHECK(std::abs(p.coeff(n) - expected) < 1e-12);
        }
    }
}

TEST_CASE("first coefficient is always 1 and parameters validate") {
    for (int n : {1, 4, 9, 23})
        for (int j = 1; j <= n; ++j)
            CHECK(suffridge::coefficients({n, j}).coeff(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(suffridge::coefficients({5, 0}), suffridge::ValidationError);
    CHECK_THROWS_AS(suffridge::coefficients({5, 6}), suffridge::ValidationError);
    CHECK_THROWS_AS(suffridge::coefficients({0, 1}), suffridge::ValidationError);
}

TEST_CASE("closed trig sums: hand-checked values") {
    SUBCASE("alpha = pi/2, N = 2, z = 0.5: sin terms sum to 0.5") {
        const Complex v = suffridge::sine_sum_closed({kPi / 2.0, 2}, Complex(0.5, 0.0));
        CHECK(std::abs(v - Complex(0.5, 0.0)) < 1e-14);
    }
    SUBCASE("z = 0 gives 0 for both sums") {
        CHECK(suffridge::sine_sum_closed({0.7, 5}, Complex(0.0)) == Complex(0.0));
        CHECK(suffridge::cosine_sum_closed({0.7, 5}, Complex(0.0)) == Complex(0.0));
    }
}

TEST_CASE("closed trig sums match direct summation") {
    const double alpha = 2.0 * kPi / 7.0;
    const Complex z(0.4, 0.3);
    CHECK(std::abs(suffridge::sine_sum_closed({alpha, 9}, z) -
                   oracle::naive_sine_sum(alpha, 9, z)) < 1e-13);
    CHECK(std::abs(suffridge::cosine_sum_closed({alpha, 9}, z) -
                   oracle::naive_cosine_sum(alpha, 9, z)) < 1e-13);

    suffridge::Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const double a = rng.uniform(0.1, kPi - 0.1);
        const int n = 1 + static_cast<int>(rng.uniform() * 20);
        const Complex zz = std::polar(rng.uniform(0.0, 0.95), rng.uniform(0.0, 2.0 * kPi));
        const Complex s = suffridge::sine_sum_closed({a, n}, zz);
        const Complex c = suffridge::cosine_sum_closed({a, n}, zz);
        CHECK(std::abs(s - oracle::naive_sine_sum(a, n, zz)) < 1e-12 * (1.0 + std::abs(s)));
        CHECK(std::abs(c - oracle::naive_cosine_sum(a, n, zz)) < 1e-12 * (1.0 + std::abs(c)));
    }
}

TEST_CASE("weighted sine sum") {
    SUBCASE("N = 1 reduces to sin(alpha) z") {
        const double a = 1.234;
        const Complex z(0.3, -0.2);
        CHECK(std::abs(suffridge::weighted_sine_sum_closed({a, 1}, z) - std::sin(a) * z) < 1e-14);
    }
    SUBCASE("real z grid against direct summation") {
        const double a = kPi / 3.0;
        for (double x = -0.9; x <= 0.9; x += 0.1) {
            const Complex z(x, 0.0);
            CHECK(std::abs(suffridge::weighted_sine_sum_closed({a, 6}, z) -
                           oracle::naive_weighted_sine_sum(a, 6, z)) < 1e-12);
        }
    }
    SUBCASE("equals z d/dz of the sine sum by central differences") {
        const double a = 0.9;
        const int n = 8;
        const double h = 1e-5;
        suffridge::Rng rng(23);
        for (int trial = 0; trial < 10; ++trial) {
            const Complex z = std::polar(rng.uniform(0.1, 0.8), rng.uniform(0.0, 2.0 * kPi));
            const Complex fd = (suffridge::sine_sum_closed({a, n}, z + h) -
                                suffridge::sine_sum_closed({a, n}, z - h)) /
                               (2.0 * h);
            CHECK(std::abs(suffridge::weighted_sine_sum_closed({a, n}, z) - z * fd) < 1e-8);
        }
    }
}

TEST_CASE("closed sums reject z at the denominator zeros") {
    const double a = kPi / 5.0;
    const Complex z = std::polar(1.0, a);
    CHECK_THROWS_AS(suffridge::sine_sum_closed({a, 4}, z), suffridge::SingularDenominator);
    CHECK_THROWS_AS(suffridge::cosine_sum_closed({a, 4}, z), suffridge::SingularDenominator);
    CHECK_THROWS_AS(suffridge::weighted_sine_sum_closed({a, 4}, z), suffridge::SingularDenominator);
}

TEST_CASE("closed form equals the coefficient sum") {
    SUBCASE("S_{5,2} at generic points") {
        const auto c = oracle::suffridge_coeffs(5, 2);
        for (Complex z : {Complex(0.5, 0.0), Complex(0.3, 0.1), Complex(-0.7, 0.2), Complex(0.0, 0.9)}) {
            const Complex direct = oracle::naive_eval(c, z);
            CHECK(std::abs(suffridge::closed_form_eval({5, 2}, z) - direct) <
                  1e-12 * (1.0 + std::abs(direct)));
        }
    }
    SUBCASE("normalization f(0) = 0") {
        CHECK(suffridge::closed_form_eval({9, 4}, Complex(0.0)) == Complex(0.0));
    }
    SUBCASE("fallback at the removable singularity equals the direct sum") {
        const SuffridgeParams p{7, 3};
        const Complex z = std::polar(1.0, p.alpha());
        const Complex direct = oracle::naive_eval(oracle::suffridge_coeffs(7, 3), z);
        CHECK(std::abs(suffridge::closed_form_eval(p, z) - direct) < 1e-12 * (1.0 + std::abs(direct)));
    }
    SUBCASE("circle grids for a spread of (N, j)") {
        for (int n : {1, 2, 5, 12, 25, 40}) {
            for (int j = 1; j <= n; j += (n > 12 ? 3 : 1)) {
                const auto c = oracle::suffridge_coeffs(n, j);
                for (double r : {0.5, 0.9, 1.0}) {
                    for (int m = 0; m < 64; ++m) {
                        const Complex z = std::polar(r, 2.0 * kPi * m / 64.0);
                        const Complex direct = oracle::naive_eval(c, z);
                        CHECK(std::abs(suffridge::closed_form_eval({n, j}, z) - direct) <=
                              1e-9 * (1.0 + std::abs(direct)));
                    }
                }
            }
        }
    }
}

TEST_CASE("boundary formula audit") {
    SUBCASE("N = 1: direct value is e^{it}, printed formula deviates") {
        const auto audit = suffridge::boundary_formula_eval({1, 1}, kPi / 3.0);
        CHECK(std::abs(audit.direct - std::polar(1.0, kPi / 3.0)) < 1e-14);
        CHECK(audit.delta == doctest::Approx(std::abs(audit.printed - audit.direct)));
        CHECK(audit.delta > 0.1);  // the transcription fails the hand check here
    }
    SUBCASE("S_{5,1} at t = pi agrees with the extremal value") {
        const auto audit = suffridge::boundary_formula_eval({5, 1}, kPi);
        CHECK(std::abs(audit.direct - Complex(suffridge::value_at_minus_one(5), 0.0)) < 1e-12);
        CHECK(audit.delta < 1e-10);  // at t = pi the printed formula is exact
    }
    SUBCASE("singular angle rejected") {
        const SuffridgeParams p{5, 2};
        CHECK_THROWS_AS(suffridge::boundary_formula_eval(p, p.alpha()),
                        suffridge::SingularDenominator);
    }
}

TEST_CASE("extremal values at ±1") {
    SUBCASE("N = 1: S(z) = z") {
        CHECK(suffridge::value_at_minus_one(1) == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(suffridge::value_at_plus_one(1) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("N = 5 against direct summation") {
        const auto c = oracle::suffridge_coeffs(5, 1);
        const double sec = 1.0 / std::cos(kPi / 12.0);
        CHECK(suffridge::value_at_minus_one(5) == doctest::Approx(-0.3 * sec * sec).epsilon(1e-14));
        CHECK(std::abs(oracle::naive_eval(c, Complex(-1.0, 0.0)).real() -
                       suffridge::value_at_minus_one(5)) < 1e-12);
    }
    SUBCASE("agreement with direct evaluation for N <= 40") {
        for (int n = 1; n <= 40; ++n) {
            const auto c = oracle::suffridge_coeffs(n, 1);
            CHECK(std::abs(oracle::naive_eval(c, Complex(-1.0, 0.0)).real() -
                           suffridge::value_at_minus_one(n)) < 1e-10);
            CHECK(std::abs(oracle::naive_eval(c, Complex(1.0, 0.0)).real() -
                           suffridge::value_at_plus_one(n)) < 1e-10);
        }
    }
    SUBCASE("limit toward -1/4") {
        CHECK(std::abs(suffridge::value_at_minus_one(40) + 0.25) < 0.01);
    }
}

TEST_CASE("Brandt representation coincides with the closed form") {
    SUBCASE("spot checks") {
        const Complex a = suffridge::brandt_eval({5, 1}, Complex(0.3, 0.0));
        const Complex b = suffridge::closed_form_eval({5, 1}, Complex(0.3, 0.0));
        CHECK(std::abs(a - b) < 1e-8 * (1.0 + std::abs(b)));
        const Complex c = suffridge::brandt_eval({5, 2}, Complex(0.2, -0.4));
        const Complex d = suffridge::closed_form_eval({5, 2}, Complex(0.2, -0.4));
        CHECK(std::abs(c - d) < 1e-8 * (1.0 + std::abs(d)));
        CHECK(suffridge::brandt_eval({6, 3}, Complex(0.0)) == Complex(0.0));
    }
    SUBCASE("random z grid across (N, j), N <= 20") {
        suffridge::Rng rng(41);
        for (int n = 1; n <= 20; ++n) {
            for (int j = 1; j <= n; ++j) {
                for (int trial = 0; trial < 8; ++trial) {
                    const Complex z = std::polar(std::sqrt(rng.uniform()) * 0.9,
                                                 rng.uniform(0.0, 2.0 * kPi));
                    const Complex ref = suffridge::closed_form_eval({n, j}, z);
                    CHECK(std::abs(suffridge::brandt_eval({n, j}, z) - ref) <=
                          1e-8 * (1.0 + std::abs(ref)));
                }
            }
        }
    }
}

TEST_CASE("coefficient domination by the j = 1 member") {
    for (int n = 1; n <= 20; ++n) {
        const auto top = suffridge::coefficients({n, 1});
        for (int j = 2; j <= n; ++j) {
            const auto p = suffridge::coefficients({n, j});
            for (int k = 1; k <= n; ++k)
                CHECK(top.coeff(k) >= std::abs(p.coeff(k)) - 1e-12);
        }
    }
}
