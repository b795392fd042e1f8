#ifndef RSAUX_SADDLE_HPP
#define RSAUX_SADDLE_HPP

#include <complex>

#include "rsaux/contour.hpp"
#include "rsaux/ext_complex.hpp"

namespace rsaux {

/*
 * Saddle coordinates attached to a point s:
 *
 *   eta = sqrt((s-1)/(2 pi i)),  -pi/4 < arg eta <= 3 pi/4,
 *   eta1 = Re eta, eta2 = Im eta, m = floor(eta1 + eta2).
 *
 * eta is the saddle point of x^{s-1} e^{-pi i x^2}; the slanted line
 * m \searrow m+1 through m + 1/2 passes within 2^{-3/2} of it. The real
 * coordinates satisfy  eta1^2 - eta2^2 = t/(2 pi)  and
 * 2 eta1 eta2 = (1 - sigma)/(2 pi).
 */
struct EtaFrame {
    cplx s;
    cplx eta;
    double eta1 = 0.0;
    double eta2 = 0.0;
    long m = 0;
    double arg_eta = 0.0;

    double abs_eta() const { return std::abs(eta); }
};

// Builds the frame. Throws branch_error unless 0 < arg(s-1) < 2 pi, and
// domain_error if m would be negative.
EtaFrame eta_frame(const cplx& s);

/*
 * w(z) = exp{2 pi i eta^2 (log(1 + z/eta) - z/eta + (z/eta)^2/2)} - 1,
 * with the principal log; w(0) = 0 exactly. The parenthesis is summed as
 * the series sum_{n>=3} (-1)^{n-1} (z/eta)^n / n for |z/eta| <= 1/2, which
 * avoids the cancellation of the three explicit terms.
 *
 * Throws branch_error when 1 + z/eta lies on (-inf, 0].
 */
cplx w_factor(const cplx& z, const cplx& eta);

/*
 * The exactly-evaluable integral over the line k \searrow k+1:
 *
 *   (sqrt2 e^{3 pi i/8} sin(pi eta) - (-1)^k e^{2 pi i eta - 2 pi i (eta-k)^2})
 *   / (2 cos 2 pi eta)
 *
 * assembled from dominant-exponential logs so it neither overflows nor
 * loses the branch for large eta2. Throws pole_error when cos 2 pi eta
 * vanishes to within 1e-12 of its natural e^{2 pi |eta2|} scale.
 */
ExtComplex trig_term_ext(const EtaFrame& frame, long k);
cplx trig_term(const EtaFrame& frame, long k);

/*
 * Saddle remainder over the line m \searrow m+1:
 *
 *   R = int e^{-2 pi i (x-eta)^2} w(x-eta) / (e^{pi i x} - e^{-pi i x}) dx.
 *
 * `log_prefactor` multiplies the integrand by e^{log_prefactor}; the
 * expansion passes pi*eta2 so the result stays in binary64 range when the
 * unscaled remainder would be subnormal.
 */
QuadratureResult remainder_R(const EtaFrame& frame, double tol = 1e-10,
                             double log_prefactor = 0.0);

/*
 * Every term of the exact expansion at truncation index k >= m, plus the
 * relative deviation U of R(s) from its explicit main term.
 *
 * r_value reassembles
 *   R(s) = chi(s) eta^{s-1} e^{-pi i eta^2}
 *          { e^{pi i eta^2} sum_{n>k} (n/eta)^{s-1} - trig - corr - R }
 * which is an identity in k.
 */
struct ExpansionBreakdown {
    cplx s;
    long k = 0;
    EtaFrame frame;
    ExtComplex chi_factor;
    ExtComplex power_factor;      // eta^{s-1} e^{-pi i eta^2}
    cplx trig_term{0.0, 0.0};
    cplx correction_sum{0.0, 0.0};
    QuadratureResult remainder;
    cplx dirichlet_tail{0.0, 0.0};  // e^{pi i eta^2} sum_{n=k+1}^inf (n/eta)^{s-1}
    cplx u_value{0.0, 0.0};
    ExtComplex r_value;
    double est_rel_error = 0.0;
};

/*
 * Assembles the breakdown. The Dirichlet grouping sums the tail termwise
 * for sigma <= -10 (geometric-ratio truncation bound); for -10 < sigma < 1
 * the same grouping is fed from the Euler-Maclaurin tail of zeta(1-s), so
 * no large cancellation ever enters. Requires sigma < 1 and k >= m.
 */
ExpansionBreakdown assemble(const cplx& s, long k, double tol = 1e-9);

// Convenience: assemble at the natural truncation k = m.
ExpansionBreakdown assemble(const cplx& s, double tol = 1e-9);

/*
 * Explicit main factor of the large-|eta| form
 *
 *   R(s) ~ (e^{-pi i/8}/sqrt2) chi(s) eta^{s-1} e^{pi i (eta - eta^2)},
 *
 * without the 1 + O(1/|eta|) correction. Exactly zero where chi vanishes.
 */
ExtComplex leading_term(const cplx& s);

} // namespace rsaux

#endif
