#include "rsaux/contour.hpp"

#include <cmath>

namespace rsaux {
namespace {

const cplx dir_defining = std::polar(1.0, -3.0 * pi / 4.0);
const cplx dir_reflected = std::polar(1.0, -pi / 4.0);

// Saddle branch with Re + Im >= 0, so floor(Re - Im) / floor(Re + Im)
// give the pole count swept when the line moves next to it.
cplx saddle_of(const cplx& numerator) {
    cplx xs = std::sqrt(numerator / cplx(0.0, 2.0 * pi));
    if (xs.real() + xs.imag() < 0.0) xs = -xs;
    return xs;
}

double initial_half_length(double tol) {
    return std::sqrt(std::max(std::log(1.0 / tol), 1.0) / pi) + 3.0;
}

} // namespace

namespace {

// R(s) for Im s >= 0: the saddle sqrt(s/(2 pi i)) then lies within reach of
// the down-left line family, so the quadrature sees a genuine saddle.
QuadratureResult r_defining_upper(const cplx& s, double tol) {
    const cplx xs = saddle_of(s);
    const long p = std::max(0L, static_cast<long>(std::floor(xs.real() - xs.imag())));

    LinePath path;
    path.crossing = static_cast<double>(p) + 0.5;
    path.direction = dir_defining;
    path.half_length = initial_half_length(tol);
    path.center_offset = ((xs - path.crossing) * std::conj(path.direction)).real();

    auto integrand = [&s](const cplx& x) {
        return std::exp(-s * std::log(x) + cplx(0.0, pi) * x * x - log_2i_sin_pi(x));
    };
    QuadratureResult q = line_quadrature(path, integrand, tol);

    double residue_mag = 0.0;
    for (long n = 1; n <= p; ++n) {
        const cplx term = std::exp(-s * std::log(static_cast<double>(n)));
        q.value += term;
        residue_mag += std::abs(term);
    }
    q.est_error += residue_mag * std::numeric_limits<double>::epsilon();
    return q;
}

/*
 * For Im s < 0 the defining saddle sits across the imaginary axis from the
 * whole down-left family (the lines cannot move past the branch point at 0)
 * and the fixed-path quadrature turns violently oscillatory. Conjugating
 * the path instead gives the exact identity
 *
 *   R(s) = conj( int_{0 \searrow 1} x^{-conj s} e^{-pi i x^2}
 *                / (e^{pi i x} - e^{-pi i x}) dx ),
 *
 * and that integrand's saddle sqrt(-conj(s)/(2 pi i)) lies next to the
 * down-right family, which shifts to it as usual.
 */
QuadratureResult r_defining_lower(const cplx& s, double tol) {
    const cplx w = std::conj(s);
    const cplx xs = saddle_of(-w);
    const long k = std::max(0L, static_cast<long>(std::floor(xs.real() + xs.imag())));

    LinePath path;
    path.crossing = static_cast<double>(k) + 0.5;
    path.direction = dir_reflected;
    path.half_length = initial_half_length(tol);
    path.center_offset = ((xs - path.crossing) * std::conj(path.direction)).real();

    auto integrand = [&w](const cplx& x) {
        return std::exp(-w * std::log(x) - cplx(0.0, pi) * x * x - log_2i_sin_pi(x));
    };
    QuadratureResult q = line_quadrature(path, integrand, tol);

    double residue_mag = 0.0;
    for (long n = 1; n <= k; ++n) {
        const cplx term = std::exp(-w * std::log(static_cast<double>(n)));
        q.value += term;
        residue_mag += std::abs(term);
    }
    q.value = std::conj(q.value);
    q.est_error += residue_mag * std::numeric_limits<double>::epsilon();
    return q;
}

} // namespace

QuadratureResult r_defining(const cplx& s, double tol) {
    if (std::fabs(s.imag()) > oracle_height_limit) {
        throw range_error("r_defining: |Im s| > 300 unsupported, use the expansion");
    }
    return s.imag() >= 0.0 ? r_defining_upper(s, tol) : r_defining_lower(s, tol);
}

QuadratureResult r_reflected(const cplx& s, double tol) {
    if (std::fabs(s.imag()) > oracle_height_limit) {
        throw range_error("r_reflected: |Im s| > 300 unsupported, use the expansion");
    }
    const cplx xs = saddle_of(s - 1.0);
    const long k = std::max(0L, static_cast<long>(std::floor(xs.real() + xs.imag())));

    LinePath path;
    path.crossing = static_cast<double>(k) + 0.5;
    path.direction = dir_reflected;
    path.half_length = initial_half_length(tol);
    path.center_offset = ((xs - path.crossing) * std::conj(path.direction)).real();

    auto integrand = [&s](const cplx& x) {
        return std::exp((s - 1.0) * std::log(x) - cplx(0.0, pi) * x * x - log_2i_sin_pi(x));
    };
    QuadratureResult q = line_quadrature(path, integrand, tol);

    double residue_mag = 0.0;
    for (long n = 1; n <= k; ++n) {
        const cplx term = std::exp((s - 1.0) * std::log(static_cast<double>(n)));
        q.value += term;
        residue_mag += std::abs(term);
    }
    q.est_error += residue_mag * std::numeric_limits<double>::epsilon();
    return q;
}

} // namespace rsaux
