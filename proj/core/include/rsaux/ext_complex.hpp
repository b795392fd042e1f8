#ifndef RSAUX_EXT_COMPLEX_HPP
#define RSAUX_EXT_COMPLEX_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace rsaux {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Wrap an angle into (-pi, pi].
inline double wrap_phase(double a) {
    if (a > -pi && a <= pi) return a;
    a = std::remainder(a, 2.0 * pi);   // (-pi, pi] up to the boundary case
    if (a <= -pi) a += 2.0 * pi;
    return a;
}

/*
 * Complex value stored as (log|z|, arg z).
 *
 * The expansion multiplies factors like eta^{s-1} e^{-pi i eta^2} whose
 * moduli reach e^{+-pi |eta|^2}; those are far outside binary64 range, so
 * every such factor is carried in log form and only small final
 * combinations are collapsed to an ordinary complex.
 */
struct ExtComplex {
    double log_modulus = neg_inf;   // natural log of |z|; -inf encodes 0
    double phase = 0.0;             // radians, in (-pi, pi] when nonzero

    static ExtComplex zero() { return {}; }

    static ExtComplex from_complex(const cplx& z) {
        if (z == cplx(0.0, 0.0)) return zero();
        return {std::log(std::abs(z)), std::arg(z)};
    }

    // exp(l) for a complex exponent l = log z.
    static ExtComplex from_log(const cplx& l) {
        return {l.real(), wrap_phase(l.imag())};
    }

    static ExtComplex from_polar(double log_mod, double ph) {
        if (log_mod == neg_inf) return zero();
        return {log_mod, wrap_phase(ph)};
    }

    bool is_zero() const { return log_modulus == neg_inf; }

    // Collapses to an ordinary complex; overflows to inf and underflows to 0.
    cplx to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        return std::polar(std::exp(log_modulus), phase);
    }

    // exp(log_modulus + shift) * e^{i phase}; lets callers remove a known scale.
    cplx to_complex_scaled(double log_shift) const {
        if (is_zero()) return {0.0, 0.0};
        return std::polar(std::exp(log_modulus + log_shift), phase);
    }

    ExtComplex operator*(const ExtComplex& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return from_polar(log_modulus + o.log_modulus, phase + o.phase);
    }

    ExtComplex operator/(const ExtComplex& o) const {
        return from_polar(log_modulus - o.log_modulus, phase - o.phase);
    }

    ExtComplex operator*(const cplx& z) const { return *this * from_complex(z); }

    ExtComplex operator-() const {
        if (is_zero()) return zero();
        return from_polar(log_modulus, phase + pi);
    }

    ExtComplex conj() const { return from_polar(log_modulus, -phase); }
};

// a - b for log-form values: a * (1 - e^{log b - log a}), larger modulus first.
inline ExtComplex ext_sub(const ExtComplex& a, const ExtComplex& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    const ExtComplex* big = &a;
    const ExtComplex* small = &b;
    double sign = 1.0;
    if (b.log_modulus > a.log_modulus) {
        big = &b;
        small = &a;
        sign = -1.0;
    }
    const cplx ratio = std::polar(std::exp(small->log_modulus - big->log_modulus),
                                  small->phase - big->phase);
    const cplx rest = 1.0 - ratio;
    if (rest == cplx(0.0, 0.0)) return ExtComplex::zero();
    const ExtComplex diff = *big * ExtComplex::from_complex(rest);
    return sign > 0 ? diff : -diff;
}

// expm1 for complex arguments, accurate for small |z|.
inline cplx cexpm1(const cplx& z) {
    const double ex = std::expm1(z.real());
    const double cy = std::cos(z.imag());
    const double sy = std::sin(z.imag());
    // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
    const double sh = std::sin(0.5 * z.imag());
    return {ex * cy - 2.0 * sh * sh, (ex + 1.0) * sy};
}

/*
 * log(e^{i pi z} - e^{-i pi z}) = log(2 i sin(pi z)), computed from the
 * dominant exponential so it stays finite for |Im z| in the thousands.
 */
inline cplx log_2i_sin_pi(const cplx& z) {
    const cplx ipz = cplx(0.0, pi) * z;
    if (z.imag() <= 0.0) {
        // |e^{i pi z}| >= 1 dominates
        return ipz + std::log(1.0 - std::exp(-2.0 * ipz));
    }
    return -ipz + cplx(0.0, pi) + std::log(1.0 - std::exp(2.0 * ipz));
}

// log sin(pi z) on the same dominant-exponential scheme.
inline cplx log_sin_pi(const cplx& z) {
    return log_2i_sin_pi(z) - cplx(std::log(2.0), 0.5 * pi);
}

// log cos(w): cos w = (e^{iw} + e^{-iw})/2.
inline cplx log_cos(const cplx& w) {
    const cplx iw = cplx(0.0, 1.0) * w;
    if (w.imag() <= 0.0) {
        return iw + std::log(0.5 * (1.0 + std::exp(-2.0 * iw)));
    }
    return -iw + std::log(0.5 * (1.0 + std::exp(2.0 * iw)));
}

// log(e^a + e^b) for reals, safe against overflow.
inline double log_add(double a, double b) {
    if (a == neg_inf) return b;
    if (b == neg_inf) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(-std::fabs(a - b)));
}

// log sinh(x) for x > 0.
inline double log_sinh(double x) {
    return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
}

// log cosh(x) for x >= 0.
inline double log_cosh(double x) {
    return x + std::log1p(std::exp(-2.0 * x)) - std::log(2.0);
}

} // namespace rsaux

#endif
