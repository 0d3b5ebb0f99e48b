#include "suffridge/suffridge.hpp"

#include <cmath>
#include <numbers>

namespace suffridge {

namespace {

constexpr double kSingularTol = 1e-12;  // hard guard for the raw closed sums
constexpr double kSwitchTol = 1e-6;     // below this the rational form loses
                                        // >= 6 digits; the coefficient sum loses none

Complex trig_denominator(double alpha, Complex z) {
    return 1.0 - 2.0 * std::cos(alpha) * z + z * z;
}

}  // namespace

double SuffridgeParams::alpha() const {
    return j * std::numbers::pi / (n + 1);
}

void SuffridgeParams::validate() const {
    if (n < 1)
        throw ValidationError("SuffridgeParams: N must be >= 1");
    if (j < 1 || j > n)
        throw ValidationError("SuffridgeParams: j must lie in [1, N]");
}

RealPolynomial coefficients_at_angle(int n, double angle) {
    if (n < 1)
        throw ValidationError("coefficients_at_angle: N must be >= 1");
    const double s = std::sin(angle);
    if (s == 0.0)
        throw ValidationError("coefficients_at_angle: sin(angle) must be nonzero");
    std::vector<double> a(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        a[static_cast<std::size_t>(k) - 1] =
            (static_cast<double>(n + 1 - k) / n) * std::sin(k * angle) / s;
    return RealPolynomial(std::move(a));
}

RealPolynomial coefficients(const SuffridgeParams& p) {
    p.validate();
    return coefficients_at_angle(p.n, p.alpha());
}

Complex sine_sum_closed(const TrigSumParams& p, Complex z) {
    if (p.n < 1)
        throw ValidationError("sine_sum_closed: N must be >= 1");
    const Complex q = trig_denominator(p.alpha, z);
    if (std::abs(q) < kSingularTol)
        throw SingularDenominator("sine_sum_closed: z too close to e^{±i alpha}");
    const double a = p.alpha;
    const Complex num = std::sin(a) - std::sin((p.n + 1) * a) * pow_int(z, p.n) +
                        std::sin(p.n * a) * pow_int(z, p.n + 1);
    return z * num / q;
}

Complex cosine_sum_closed(const TrigSumParams& p, Complex z) {
    if (p.n < 1)
        throw ValidationError("cosine_sum_closed: N must be >= 1");
    const Complex q = trig_denominator(p.alpha, z);
    if (std::abs(q) < kSingularTol)
        throw SingularDenominator("cosine_sum_closed: z too close to e^{±i alpha}");
    const double a = p.alpha;
    const Complex num = std::cos(a) - z - std::cos((p.n + 1) * a) * pow_int(z, p.n) +
                        std::cos(p.n * a) * pow_int(z, p.n + 1);
    return z * num / q;
}

Complex weighted_sine_sum_closed(const TrigSumParams& p, Complex z) {
    if (p.n < 1)
        throw ValidationError("weighted_sine_sum_closed: N must be >= 1");
    const Complex q = trig_denominator(p.alpha, z);
    if (std::abs(q) < kSingularTol)
        throw SingularDenominator("weighted_sine_sum_closed: z too close to e^{±i alpha}");
    const double a = p.alpha;
    const int n = p.n;
    const double sa = std::sin(a), ca = std::cos(a);
    const double sn = std::sin(n * a), sn1 = std::sin((n + 1) * a);
    const Complex zn = pow_int(z, n);
    const Complex num = sa - sa * z * z - (n + 1.0) * sn1 * zn +
                        ((n + 2.0) * sn + 2.0 * n * ca * sn1) * zn * z -
                        ((n - 1.0) * sn1 + 2.0 * (n + 1.0) * ca * sn) * zn * z * z +
                        n * sn * zn * z * z * z;
    return z * num / (q * q);
}

Complex closed_form_eval(const SuffridgeParams& p, Complex z) {
    p.validate();
    const double a = p.alpha();
    const Complex q = trig_denominator(a, z);
    if (std::abs(q) < kSwitchTol)
        return coefficients(p)(z);  // the singularity is removable by construction
    const double sgn = (p.j % 2 == 0) ? 1.0 : -1.0;  // (-1)^j
    const int n = p.n;
    const Complex num = static_cast<double>(n) - 2.0 * (n + 1.0) * std::cos(a) * z +
                        (n + 2.0) * z * z + sgn * pow_int(z, n + 1) - sgn * pow_int(z, n + 3);
    return z * num / (static_cast<double>(n) * q * q);
}

BoundaryAudit boundary_formula_eval(const SuffridgeParams& p, double t) {
    p.validate();
    const double a = p.alpha();
    const double den = 2.0 * p.n * (std::cos(t) - std::cos(a));
    if (std::abs(std::cos(t) - std::cos(a)) < kSingularTol)
        throw SingularDenominator("boundary_formula_eval: cos t too close to cos alpha");
    const double sgn = (p.j % 2 == 0) ? 1.0 : -1.0;  // (-1)^j
    const Complex printed =
        Complex(p.n + 1.0, 0.0) / den +
        Complex(0.0, 1.0) * std::sin(t) *
            (1.0 - sgn * std::exp(Complex(0.0, (p.n + 1.0) * t))) / den;
    const Complex direct = coefficients(p)(std::polar(1.0, t));
    return {printed, direct, std::abs(printed - direct)};
}

double value_at_minus_one(int n) {
    if (n < 1)
        throw ValidationError("value_at_minus_one: N must be >= 1");
    const double sec = 1.0 / std::cos(std::numbers::pi / (2.0 * (n + 1)));
    return -0.25 * ((n + 1.0) / n) * sec * sec;
}

double value_at_plus_one(int n) {
    if (n < 1)
        throw ValidationError("value_at_plus_one: N must be >= 1");
    const double csc = 1.0 / std::sin(std::numbers::pi / (2.0 * (n + 1)));
    return 0.25 * ((n + 1.0) / n) * csc * csc;
}

Complex brandt_eval(const SuffridgeParams& p, Complex z) {
    p.validate();
    const int n = p.n + 1;           // representation order
    const bool odd = (p.j % 2 != 0);
    const int k0 = (p.j + 1) / 2;    // the only active node index
    const double b = 1.0 / (2.0 * std::sqrt(static_cast<double>(p.n)));

    // Active node angle: (2k0-1)pi/n for odd j, 2k0 pi/n for even j; both
    // equal j pi/(N+1). The weight half-angle is half of it in either case.
    const double theta = odd ? (2.0 * k0 - 1.0) * std::numbers::pi / n
                             : 2.0 * k0 * std::numbers::pi / n;
    const double half = odd ? (2.0 * k0 - 1.0) * std::numbers::pi / (2.0 * n)
                            : k0 * std::numbers::pi / n;

    const Complex d = 1.0 - 2.0 * z * std::cos(theta) + z * z;
    if (std::abs(d) < kSingularTol)
        throw SingularDenominator("brandt_eval: kernel denominator vanishes");

    // f = 4n (b^2 cos^2 + b'^2 sin^2) K_theta(z)
    //     - (1 ± z^n)(1 - z^2) 2z (b/D)^2 - (1 ± z^n)(1 - z^2) 2z (b'/D)^2
    // with + for odd j and - for even j, b = b'. The constant line of the
    // representation vanishes for a single active node with equal weights.
    const Complex zn = pow_int(z, n);
    const Complex ring = odd ? (1.0 + zn) : (1.0 - zn);
    const double cw = std::cos(half), sw = std::sin(half);
    const Complex lead = 4.0 * n * (b * b * cw * cw + b * b * sw * sw) * z / d;
    const Complex corr = ring * (1.0 - z * z) * 2.0 * z * (b * b) / (d * d);
    return lead - corr - corr;
}

}  // namespace suffridge
