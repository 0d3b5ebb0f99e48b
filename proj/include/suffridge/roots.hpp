#ifndef SUFFRIDGE_ROOTS_HPP
#define SUFFRIDGE_ROOTS_HPP

#include <vector>

#include "suffridge/poly.hpp"

namespace suffridge {

struct RootOptions {
    /// Accept roots r with |p(r)| <= tol * max_k|c_k| * max(1, |r|)^deg.
    double tol = 1e-10;
    int max_iter = 500;
};

/// All deg(p) roots, with multiplicity. Aberth-Ehrlich simultaneous
/// iteration with a companion-matrix fallback; results sorted by argument,
/// then modulus. Throws NonConvergence if the residual bound cannot be met.
std::vector<Complex> roots(const Polynomial& p, const RootOptions& opts = {});

}  // namespace suffridge

#endif
