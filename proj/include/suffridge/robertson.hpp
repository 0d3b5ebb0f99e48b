#ifndef SUFFRIDGE_ROBERTSON_HPP
#define SUFFRIDGE_ROBERTSON_HPP

#include <vector>

#include "suffridge/poly.hpp"
#include "suffridge/suffridge.hpp"

namespace suffridge {

/// U_k(t) by the three-term recurrence U_0 = 1, U_1 = 2t,
/// U_{k+1} = 2t U_k - U_{k-1}.
double chebyshev_u(int k, double t);

struct ChebyshevUDerivatives {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};
ChebyshevUDerivatives chebyshev_u_derivatives(int k, double t);

/// Residual of the second-kind Chebyshev differential identity
///   k(k+2) U_k = 3t U_k' - (1-t^2) U_k'',
/// computed with analytically recurred derivatives.
double chebyshev_identity_residual(int k, double t);

/// Robertson density d(mu)/dt = (2/pi) sqrt(1-t^2) sum_k b_k U_{k-1}(t).
double robertson_density(const RealPolynomial& p, double t);

/// Robertson measure mu(t) in closed form, normalized so that mu(-1) = 0:
///   mu(t) = b_1 [1/2 + (arcsin t + t sqrt(1-t^2))/pi]
///           - (2/pi)(1-t^2)^{3/2} sum_{k>=2} b_k U'_{k-1}(t)/(k^2-1).
double robertson_measure(const RealPolynomial& p, double t);
double robertson_measure(const SuffridgeParams& p, double t);

struct MeasureTable {
    std::vector<double> t;
    std::vector<double> mu;
    std::vector<double> density;
};

/// Grid of (t, mu(t), density(t)) on [-1, 1], endpoints included.
MeasureTable measure_table(const RealPolynomial& p, int grid);

/// |quadrature of  integral z density(t)/(1 - 2tz + z^2) dt  -  p(z)| for
/// |z| < 1, using Gauss-Chebyshev (second kind) nodes (the z numerator keeps
/// f(0) = 0; without it the integral returns p(z)/z). The node count is
/// doubled once as a convergence check; QuadratureNonConvergence if the two
/// estimates disagree.
double representation_check(const RealPolynomial& p, Complex z);

/// Limit measure of the family with j/(N+1) -> q: 0 for t < cos(q*pi),
/// 1 for t >= cos(q*pi) (right-closed by convention).
double step_limit(double q, double t);

/// Nodes/weights for  integral_{-1}^{1} sqrt(1-t^2) g(t) dt  ~  sum w_i g(t_i),
/// exact for polynomial g of degree <= 2m-1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_chebyshev_u(int m);

}  // namespace suffridge

#endif
