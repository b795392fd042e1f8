#ifndef RSAUX_CONTOUR_HPP
#define RSAUX_CONTOUR_HPP

#include <cmath>
#include <complex>
#include <cstdint>

#include "rsaux/errors.hpp"
#include "rsaux/ext_complex.hpp"

namespace rsaux {

/*
 * Straight integration line crossing the real axis at `crossing`, with unit
 * direction `direction`. The integration segment is the arclength window
 * [center_offset - half_length, center_offset + half_length] measured from
 * the crossing; `center_offset` lets the window sit over a saddle that is
 * far from the real axis.
 */
struct LinePath {
    double crossing = 0.5;
    cplx direction{0.0, -1.0};
    double half_length = 8.0;
    int nodes = 64;            // initial trapezoid intervals
    double center_offset = 0.0;

    cplx point(double t) const { return cplx(crossing, 0.0) + (center_offset + t) * direction; }
};

struct QuadratureResult {
    cplx value{0.0, 0.0};
    double est_error = 0.0;    // truncation tail + last refinement delta
    long nodes_used = 0;
};

namespace detail {

// Success when the refinement delta reaches `tol * max(1, |value|)` or the
// roundoff floor; convergence_error when deltas stop contracting above both.
struct TrapezoidControl {
    double tol = 1e-10;
    int max_refinements = 14;
    double max_extension = 64.0;   // per side, in arclength units
};

} // namespace detail

/*
 * Trapezoid quadrature along `path` with automatic window extension and
 * geometric node doubling. The trapezoid rule converges geometrically for
 * analytic integrands with Gaussian decay along the line, which is the only
 * family used here. `integrand` maps a path point x to f(x); the returned
 * value includes the direction factor (it is the integral of f(x) dx).
 */
template <typename F>
QuadratureResult line_quadrature(const LinePath& path, F&& integrand, double tol = 1e-10) {
    detail::TrapezoidControl ctl;
    ctl.tol = tol;

    double lo = -path.half_length;
    double hi = path.half_length;
    const int n0 = std::max(path.nodes, 16);
    long evals = 0;

    auto f = [&](double t) -> cplx {
        ++evals;
        return integrand(path.point(t));
    };

    // coarse pass: peak magnitude for the extension threshold
    double peak = 0.0;
    {
        const double h = (hi - lo) / n0;
        for (int i = 0; i <= n0; ++i) peak = std::max(peak, std::abs(f(lo + i * h)));
    }
    if (peak == 0.0) {
        return {cplx(0.0, 0.0), 0.0, evals};
    }
    const double edge_limit = peak * std::max(tol, 1e-16) * 0.05;
    cplx f_lo = f(lo), f_hi = f(hi);
    double ext = 0.0;
    while (std::abs(f_lo) > edge_limit && ext < ctl.max_extension) {
        lo -= 1.0; ext += 1.0; f_lo = f(lo);
        peak = std::max(peak, std::abs(f_lo));
    }
    ext = 0.0;
    while (std::abs(f_hi) > edge_limit && ext < ctl.max_extension) {
        hi += 1.0; ext += 1.0; f_hi = f(hi);
        peak = std::max(peak, std::abs(f_hi));
    }

    // trapezoid with interval doubling; midpoint reuse keeps evals linear
    long n = n0;
    double h = (hi - lo) / n;
    cplx sum = 0.5 * (f_lo + f_hi);
    for (long i = 1; i < n; ++i) sum += f(lo + i * h);
    cplx estimate = sum * h * path.direction;

    const double tail = (std::abs(f_lo) + std::abs(f_hi));
    double delta = std::numeric_limits<double>::infinity();
    double prev_delta = delta;
    int stalls = 0;
    for (int r = 0; r < ctl.max_refinements; ++r) {
        cplx mid(0.0, 0.0);
        for (long i = 0; i < n; ++i) mid += f(lo + (i + 0.5) * h);
        const cplx refined = 0.5 * estimate + mid * (0.5 * h) * path.direction;
        n *= 2;
        h *= 0.5;
        prev_delta = delta;
        delta = std::abs(refined - estimate);
        estimate = refined;

        const double scale = std::max(1.0, std::abs(estimate));
        if (delta <= tol * scale || delta <= 8.0 * std::numeric_limits<double>::epsilon() * peak * (hi - lo)) {
            return {estimate, delta + tail, evals};
        }
        if (r >= 3 && delta > 0.5 * prev_delta) {
            if (++stalls >= 2) {
                throw convergence_error("line_quadrature: refinements stopped contracting");
            }
        } else {
            stalls = 0;
        }
    }
    throw convergence_error("line_quadrature: refinement budget exhausted");
}

/*
 * R(s) by its defining integral
 *
 *   R(s) = int x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x}) dx
 *
 * over the line of direction e^{-3 pi i/4} crossing (0,1), with x^{-s} on
 * the principal branch of the plane slit along (-inf, 0]. The line is moved
 * to cross at p + 1/2 next to the integrand's saddle sqrt(s/(2 pi i)),
 * collecting the residues n^{-s} of the poles 1..p swept on the way; this
 * keeps the quadrature relatively accurate for sigma far below 0.
 *
 * est_error is absolute but targets tol * max(1, |R|). Refuses |Im s| > 300
 * where phase oscillation exceeds what the line placement can absorb.
 */
QuadratureResult r_defining(const cplx& s, double tol = 1e-10);

/*
 * conj(R(1 - conj(s))) = int x^{s-1} e^{-pi i x^2} / (e^{pi i x} - e^{-pi i x}) dx
 * over the line of direction e^{-pi i/4} crossing (0,1), shifted to k + 1/2
 * near the saddle sqrt((s-1)/(2 pi i)) with the residues n^{s-1} collected.
 */
QuadratureResult r_reflected(const cplx& s, double tol = 1e-10);

// Largest |Im s| the oracle accepts.
inline constexpr double oracle_height_limit = 300.0;

} // namespace rsaux

#endif
