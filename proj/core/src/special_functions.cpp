#include "rsaux/special_functions.hpp"

#include <cmath>

#include "rsaux/errors.hpp"

namespace rsaux {
namespace {

constexpr double log_2pi_half = 0.91893853320467274178032973640562;  // ln(2 pi)/2
constexpr double log_pi = 1.1447298858494001741434273513531;

// B_{2k} / (2k (2k-1)) for Stirling's series.
constexpr double stirling_coeff[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// Bernoulli numbers B_2, B_4, ... for Euler-Maclaurin.
constexpr double bernoulli2k[] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
};

bool is_nonpositive_integer(const cplx& z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Stirling for Re w >= 12.
cplx log_gamma_stirling(const cplx& w) {
    const cplx lw = std::log(w);
    cplx acc = (w - 0.5) * lw - w + log_2pi_half;
    const cplx w2 = w * w;
    cplx p = w;
    for (double c : stirling_coeff) {
        const cplx term = c / p;
        acc += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
        p *= w2;
    }
    return acc;
}

} // namespace

cplx log_gamma(const cplx& z) {
    if (is_nonpositive_integer(z)) {
        throw pole_error("log_gamma: pole at nonpositive integer");
    }
    // Shift until Stirling applies; each step subtracts a principal Log,
    // which preserves the analytic branch on the cut plane.
    cplx w = z;
    cplx shift(0.0, 0.0);
    while (w.real() < 12.0) {
        shift += std::log(w);
        w += 1.0;
    }
    return log_gamma_stirling(w) - shift;
}

ExtComplex chi(const cplx& s) {
    if (s.imag() == 0.0 && s.real() == std::floor(s.real())) {
        const double r = s.real();
        const long n = static_cast<long>(r);
        if (r <= 0.0 && n % 2 == 0) return ExtComplex::zero();   // Gamma(s/2) pole
        if (r >= 1.0 && n % 2 == 1) {
            throw pole_error("chi: pole at positive odd integer");
        }
    }
    const cplx lg_num = log_gamma(0.5 * (1.0 - s));
    const cplx lg_den = log_gamma(0.5 * s);
    return ExtComplex::from_log((s - 0.5) * log_pi + lg_num - lg_den);
}

cplx zeta_dirichlet(const cplx& z, double tol) {
    if (z.real() < 2.0) {
        throw domain_error("zeta_dirichlet: requires Re z >= 2");
    }
    const double x = z.real();
    cplx acc(1.0, 0.0);
    for (long n = 2; n < 1000000; ++n) {
        const double lnn = std::log(static_cast<double>(n));
        if (-x * lnn < -745.0) break;                  // term underflows
        acc += std::exp(-z * lnn);
        // integral-comparison tail bound
        const double tail = std::exp((1.0 - x) * lnn) / (x - 1.0);
        if (tail <= tol) break;
    }
    return acc;
}

namespace {

// Euler-Maclaurin zeta tail: zeta(z) - sum_{n<=k} n^{-z}, Re z > -1/2.
cplx em_tail(const cplx& z, long k) {
    const double im = std::fabs(z.imag());
    const long N = std::max<long>(k + 1, std::max<long>(24, static_cast<long>(im * 1.1) + 12));
    cplx acc(0.0, 0.0);
    for (long n = k + 1; n < N; ++n) {
        acc += std::exp(-z * std::log(static_cast<double>(n)));
    }
    const double lnN = std::log(static_cast<double>(N));
    const cplx Npow = std::exp(-z * lnN);              // N^{-z}
    acc += Npow * (static_cast<double>(N) / (z - 1.0)) + 0.5 * Npow;
    // correction sum: B_{2k}/(2k)! * z (z+1)...(z+2k-2) * N^{-z-2k+1}
    cplx poch = z;                                     // rising factorial
    double fact = 2.0;                                 // (2k)!
    cplx Nfac = Npow / static_cast<double>(N);         // N^{-z-2k+1}
    for (std::size_t j = 0; j < sizeof(bernoulli2k) / sizeof(double); ++j) {
        const cplx term = bernoulli2k[j] / fact * poch * Nfac;
        acc += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
        const double k2 = 2.0 * static_cast<double>(j + 1);
        poch *= (z + k2 - 1.0) * (z + k2);
        fact *= (k2 + 1.0) * (k2 + 2.0);
        Nfac /= static_cast<double>(N) * static_cast<double>(N);
    }
    return acc;
}

} // namespace

cplx zeta_em_tail(const cplx& z, long k) {
    if (z.real() < -0.5) {
        throw domain_error("zeta_em_tail: requires Re z > -1/2");
    }
    return em_tail(z, k);
}

cplx zeta_reference(const cplx& z) {
    if (z == cplx(1.0, 0.0)) {
        throw pole_error("zeta_reference: pole at z = 1");
    }
    if (z.real() >= -0.5) {
        return em_tail(z, 0);
    }
    // functional equation: zeta(z) = 2^z pi^{z-1} sin(pi z/2) Gamma(1-z) zeta(1-z)
    if (z.imag() == 0.0 && z.real() == std::floor(z.real())
        && static_cast<long>(z.real()) % 2 == 0) {
        return {0.0, 0.0};                             // trivial zero of zeta
    }
    const cplx lg = log_gamma(1.0 - z);
    const cplx lsin = log_sin_pi(0.5 * z);
    const cplx lfac = z * std::log(2.0) + (z - 1.0) * log_pi + lsin + lg;
    return std::exp(lfac) * em_tail(1.0 - z, 0);
}

} // namespace rsaux
