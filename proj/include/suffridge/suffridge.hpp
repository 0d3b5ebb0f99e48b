#ifndef SUFFRIDGE_SUFFRIDGE_HPP
#define SUFFRIDGE_SUFFRIDGE_HPP

#include "suffridge/poly.hpp"

namespace suffridge {

/// Family parameters (N, j) with 1 <= j <= N and the node angle
/// alpha = j*pi/(N+1).
struct SuffridgeParams {
    int n = 1;
    int j = 1;

    double alpha() const;
    void validate() const;
};

/// Parameters of the finite trigonometric sums
///   S_N = sum sin(k a) z^k,  C_N = sum cos(k a) z^k,  T_N = sum k sin(k a) z^k.
struct TrigSumParams {
    double alpha = 0.0;
    int n = 1;
};

/// Coefficients a_k = ((N+1-k)/N) * sin(k*angle)/sin(angle). With
/// angle = j*pi/(N+1) this is the Suffridge polynomial S_{N,j}; other angles
/// give the continuous-parameter family sharing the same computation path.
RealPolynomial coefficients_at_angle(int n, double angle);

RealPolynomial coefficients(const SuffridgeParams& p);

/// Closed rational forms of the trig sums. Throw SingularDenominator when
/// 1 - 2cos(alpha) z + z^2 vanishes within tolerance (z near e^{±i alpha});
/// callers fall back to direct summation there.
Complex sine_sum_closed(const TrigSumParams& p, Complex z);
Complex cosine_sum_closed(const TrigSumParams& p, Complex z);
Complex weighted_sine_sum_closed(const TrigSumParams& p, Complex z);

/// Closed rational form of S_{N,j}. The singularity at z = e^{±i alpha} is
/// removable; below the switch tolerance on |denominator| this silently
/// evaluates the coefficient sum instead.
Complex closed_form_eval(const SuffridgeParams& p, Complex z);

/// The classical printed formula for S_{N,j}(e^{it}) evaluated verbatim,
/// side by side with the coefficient sum. The transcription commonly cited
/// fails a hand check away from t = pi, so the discrepancy is surfaced
/// rather than trusted; `direct` is the ground truth.
struct BoundaryAudit {
    Complex printed;
    Complex direct;
    double delta;  // |printed - direct|
};
BoundaryAudit boundary_formula_eval(const SuffridgeParams& p, double t);

/// S_{N,1}(-1) = -(1/4)((N+1)/N) sec^2(pi/(2N+2)) and
/// S_{N,1}(+1) = (1/4)((N+1)/N) csc^2(pi/(2N+2)).
double value_at_minus_one(int n);
double value_at_plus_one(int n);

/// Brandt-style rational representation of S_{N,j} with representation
/// order n = N+1 and a single active node k0 = floor((j+1)/2), all weights
/// 1/(2 sqrt(N)). Algebraically identical to closed_form_eval; the equality
/// is the defining contract and is pinned by tests.
Complex brandt_eval(const SuffridgeParams& p, Complex z);

}  // namespace suffridge

#endif
