#include <doctest.h>

#include <cmath>
#include <numbers>

#include "suffridge/gfamily.hpp"
#include "suffridge/suffridge.hpp"
#include "suffridge/univalence.hpp"

using suffridge::GFamilyParams;
using suffridge::Verdict;

TEST_CASE("G family special members") {
    SUBCASE("mu = 1 is S_{N,1}") {
        for (int n : {2, 5, 11, 20}) {
            const auto g = suffridge::g_family_coefficients({n, 1.0});
            const auto s = suffridge::coefficients({n, 1});
            for (int k = 1; k <= n; ++k) CHECK(std::abs(g.coeff(k) - s.coeff(k)) <= 1e-14);
        }
    }
    SUBCASE("mu = 0 is the Fejer coefficient sequence") {
        for (int n : {2, 7, 11}) {
            const auto g = suffridge::g_family_coefficients({n, 0.0});
            for (int k = 1; k <= n; ++k)
                CHECK(std::abs(g.coeff(k) - static_cast<double>(n + 1 - k) / n) <= 1e-14);
        }
    }
    SUBCASE("mu = -1 is z + z^N/N exactly") {
        const auto g = suffridge::g_family_coefficients({11, -1.0});
        CHECK(g.coeff(1) == 1.0);
        for (int k = 2; k <= 10; ++k) CHECK(g.coeff(k) == 0.0);
        CHECK(g.coeff(11) == 1.0 / 11.0);
    }
}

TEST_CASE("G family coefficients stay sane across mu in (-1, 1]") {
    for (int n : {5, 11}) {
        for (int i = 0; i <= 40; ++i) {
            const double mu = -1.0 + 2.0 * (i + 0.5) / 41.0;
            const auto g = suffridge::g_family_coefficients({n, mu});
            CHECK(g.coeff(1) == 1.0);
            for (int k = 1; k <= n; ++k) CHECK(std::isfinite(g.coeff(k)));
        }
    }
}

TEST_CASE("G family parameter validation") {
    CHECK_THROWS_AS(suffridge::g_family_coefficients({1, 0.5}), suffridge::ValidationError);
    CHECK_THROWS_AS(suffridge::g_family_coefficients({5, -5.0}), suffridge::ValidationError);
    // N + mu = 2 makes sin(pi j/(N+mu)) vanish at j = 2
    CHECK_THROWS_AS(suffridge::g_family_coefficients({5, -3.0}), suffridge::SingularParameter);
}

TEST_CASE("large-N limit toward z/(1-z)^{1+mu}") {
    SUBCASE("mu = 1: the Koebe function") {
        double prev = 1e9;
        for (int n : {25, 50, 100}) {
            const double e = suffridge::g_limit_check({n, 1.0}, 0.5, 512);
            CHECK(e < prev);
            prev = e;
        }
    }
    SUBCASE("mu = 0: geometric series target") {
        double prev = 1e9;
        for (int n : {25, 50, 100}) {
            const double e = suffridge::g_limit_check({n, 0.0}, 0.5, 512);
            CHECK(e < prev);
            prev = e;
        }
    }
    SUBCASE("radius zero") { CHECK(suffridge::g_limit_check({11, 0.3}, 0.0, 64) == 0.0); }
}

TEST_CASE("univalence across the conjectured segment at N = 11") {
    for (double mu : {1.0, 0.5, 0.0, -0.5, -1.0}) {
        const auto rep = suffridge::univalence_report(suffridge::g_family_coefficients({11, mu}));
        CHECK(rep.verdict == Verdict::pass);
        for (double m : rep.derivative_root_moduli) CHECK(std::abs(m - 1.0) <= 1e-5);
    }
    SUBCASE("N = 3, mu = 1 is the known univalent S_{3,1}") {
        const auto rep = suffridge::univalence_report(suffridge::g_family_coefficients({3, 1.0}));
        CHECK(rep.verdict == Verdict::pass);
    }
    SUBCASE("the mu = -1.15 boundary case is recorded") {
        const auto rep = suffridge::univalence_report(suffridge::g_family_coefficients({11, -1.15}));
        CHECK(rep.derivative_root_moduli.size() == 10);
        CHECK(rep.verdict != Verdict::inconclusive);
        MESSAGE("G_{11,-1.15} verdict: ", suffridge::to_string(rep.verdict));
    }
}

TEST_CASE("dense mu grid on [-1, 1] stays quasi-extremal at N = 11") {
    for (int i = 0; i <= 20; ++i) {
        const double mu = -1.0 + 2.0 * i / 20.0;
        const auto rep = suffridge::univalence_report(suffridge::g_family_coefficients({11, mu}));
        CHECK(rep.verdict == Verdict::pass);
        double dev = 0.0;
        for (double m : rep.derivative_root_moduli) dev = std::max(dev, std::abs(m - 1.0));
        CHECK(dev <= 1e-5);
    }
}

TEST_CASE("zeta estimate at N = 11") {
    const auto est = suffridge::zeta_estimate(11, 0.02, 1e-3);
    CHECK(est.n == 11);
    REQUIRE(est.first_fail.has_value());
    CHECK(est.mu_hi <= -1.0);
    CHECK(est.mu_lo < est.mu_hi);
    CHECK(est.mu_hi - est.mu_lo <= 1e-3);
    // the sweep certifies the coarse grid and everything down to the bracket
    for (double mu : {1.0, 0.5, 0.0, -0.5, -1.0}) {
        bool found = false;
        for (double c : est.certified_pass)
            if (std::abs(c - mu) < 1e-12) found = true;
        CHECK(found);
    }
    for (double c : est.certified_pass) CHECK(c >= est.mu_lo);
    CHECK(est.max_root_deviation <= 1e-5);
    MESSAGE("zeta(11) bracket: [", est.mu_lo, ", ", est.mu_hi, "]");
}

TEST_CASE("zeta estimate validates its knobs") {
    CHECK_THROWS_AS(suffridge::zeta_estimate(11, 0.2, 1e-3), suffridge::ValidationError);
    CHECK_THROWS_AS(suffridge::zeta_estimate(11, 0.02, 0.1), suffridge::ValidationError);
}
