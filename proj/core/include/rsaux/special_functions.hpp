#ifndef RSAUX_SPECIAL_FUNCTIONS_HPP
#define RSAUX_SPECIAL_FUNCTIONS_HPP

#include <complex>

#include "rsaux/ext_complex.hpp"

namespace rsaux {

/*
 * Principal branch of log Gamma: analytic on the plane cut along
 * (-inf, 0], real on the positive axis, and satisfying
 * log Gamma(z+1) = Log z + log Gamma(z) with the principal Log.
 *
 * Stirling's series after an upward shift to Re z >= 12; exp of the
 * result matches Gamma(z) to relative 1e-12 for |z| <= 50.
 *
 * Throws pole_error at nonpositive integers.
 */
cplx log_gamma(const cplx& z);

/*
 * chi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2), the factor in the
 * functional equation zeta(s) = chi(s) zeta(1-s).
 *
 * Computed entirely in log space (the expansion multiplies chi by factors
 * with exponents of order pi |eta|^2, unrepresentable in binary64).
 * Exact zeros at s = 0, -2, -4, ... are detected by integer test before
 * any Gamma evaluation. Throws pole_error at s = 1, 3, 5, ...
 */
ExtComplex chi(const cplx& s);

/*
 * zeta by its Dirichlet series, valid for Re z >= 2. The truncation tail
 * is bounded by the integral comparison  sum_{n>N} n^{-x} <= N^{1-x}/(x-1)
 * and the sum stops once that bound drops below `tol` (absolute).
 */
cplx zeta_dirichlet(const cplx& z, double tol = 1e-12);

/*
 * Reference zeta for cross-checks: Euler-Maclaurin continuation for
 * Re z >= -1/2 and the functional equation below that. Relative error
 * <= 1e-10 for |Im z| <= 100. Throws pole_error at z = 1.
 */
cplx zeta_reference(const cplx& z);

/*
 * zeta(z) - sum_{n=1}^{k} n^{-z}, evaluated as a tail so no cancellation
 * occurs when the partial sum nearly exhausts zeta. Requires Re z > -1/2.
 */
cplx zeta_em_tail(const cplx& z, long k);

} // namespace rsaux

#endif
