#include "rsaux/saddle.hpp"

#include <cmath>

#include "rsaux/errors.hpp"
#include "rsaux/special_functions.hpp"

namespace rsaux {
namespace {

const cplx I(0.0, 1.0);

// log(1+u) - u + u^2/2 without cancellation for small |u|.
cplx log1p_tail(const cplx& u) {
    if (u.imag() == 0.0 && u.real() <= -1.0) {
        throw branch_error("w_factor: 1 + z/eta on the negative real cut");
    }
    if (std::abs(u) <= 0.5) {
        cplx acc(0.0, 0.0);
        cplx p = u * u * u;
        double sign = 1.0;
        for (int n = 3; n < 80; ++n) {
            const cplx term = sign * p / static_cast<double>(n);
            acc += term;
            if (std::abs(term) < 1e-20 * std::abs(acc)) break;
            p *= u;
            sign = -sign;
        }
        return acc;
    }
    return std::log(1.0 + u) - u + 0.5 * u * u;
}

} // namespace

EtaFrame eta_frame(const cplx& s) {
    const cplx sm1 = s - 1.0;
    double a = std::atan2(sm1.imag(), sm1.real());
    if (a <= 0.0) a += 2.0 * pi;
    if (!(a > 0.0 && a < 2.0 * pi) || sm1 == cplx(0.0, 0.0)) {
        throw branch_error("eta_frame: requires 0 < arg(s-1) < 2 pi");
    }
    EtaFrame f;
    f.s = s;
    f.arg_eta = 0.5 * (a - 0.5 * pi);
    f.eta = std::polar(std::sqrt(std::abs(sm1) / (2.0 * pi)), f.arg_eta);
    f.eta1 = f.eta.real();
    f.eta2 = f.eta.imag();
    f.m = static_cast<long>(std::floor(f.eta1 + f.eta2));
    if (f.m < 0) {
        throw domain_error("eta_frame: m < 0");
    }
    return f;
}

cplx w_factor(const cplx& z, const cplx& eta) {
    if (z == cplx(0.0, 0.0)) return {0.0, 0.0};
    const cplx B = 2.0 * pi * I * eta * eta * log1p_tail(z / eta);
    return cexpm1(B);
}

ExtComplex trig_term_ext(const EtaFrame& frame, long k) {
    const cplx eta = frame.eta;
    const cplx log_den = std::log(2.0) + log_cos(2.0 * pi * eta);
    // pole guard on the e^{2 pi |eta2|}-scaled modulus of cos 2 pi eta
    const double scaled = log_den.real() - std::log(2.0) - 2.0 * pi * std::fabs(frame.eta2);
    if (scaled < std::log(1e-12) - std::log(2.0)) {
        throw pole_error("trig_term: cos 2 pi eta vanishes (eta near odd quarter-integers)");
    }
    const cplx L1 = 0.5 * std::log(2.0) + cplx(0.0, 3.0 * pi / 8.0) + log_sin_pi(eta);
    const cplx dk = eta - static_cast<double>(k);
    const cplx L2 = cplx(0.0, pi * static_cast<double>(k))
        + 2.0 * pi * I * eta - 2.0 * pi * I * dk * dk;
    return ext_sub(ExtComplex::from_log(L1 - log_den), ExtComplex::from_log(L2 - log_den));
}

cplx trig_term(const EtaFrame& frame, long k) {
    return trig_term_ext(frame, k).to_complex();
}

QuadratureResult remainder_R(const EtaFrame& frame, double tol, double log_prefactor) {
    const cplx eta = frame.eta;
    LinePath path;
    path.crossing = static_cast<double>(frame.m) + 0.5;
    path.direction = std::polar(1.0, -pi / 4.0);
    path.half_length = std::sqrt(std::max(std::log(1.0 / tol), 1.0) / pi) + 3.0;
    path.center_offset = ((eta - path.crossing) * std::conj(path.direction)).real();

    auto integrand = [&](const cplx& x) -> cplx {
        const cplx z = x - eta;
        const cplx A = log_prefactor - 2.0 * pi * I * z * z - log_2i_sin_pi(x);
        const cplx B = 2.0 * pi * I * eta * eta * log1p_tail(z / eta);
        if (B.real() <= 30.0) {
            return std::exp(A) * cexpm1(B);
        }
        return std::exp(A + B) - std::exp(A);   // w dominates 1 here
    };
    return line_quadrature(path, integrand, tol);
}

namespace {

// e^{pi i eta^2} sum_{n=k+1}^inf (n/eta)^{s-1}, scaled by e^{scale}.
// Termwise in log space; the term ratio ((n+1)/n)^{sigma-1} < 1 is
// decreasing, so the dropped tail is below the last geometric bound.
cplx dirichlet_tail_scaled(const cplx& s, const EtaFrame& f, long k, double scale,
                           double* tail_bound) {
    const cplx log_eta = std::log(f.eta);
    const cplx base = cplx(0.0, pi) * f.eta * f.eta + scale;
    cplx acc(0.0, 0.0);
    double last_mag = 0.0;
    long n = k + 1;
    for (; n < k + 1000000; ++n) {
        const cplx lt = (s - 1.0) * (std::log(static_cast<double>(n)) - log_eta) + base;
        const cplx term = std::exp(lt);
        acc += term;
        last_mag = std::abs(term);
        const double ratio = std::exp((s.real() - 1.0) * std::log1p(1.0 / static_cast<double>(n)));
        const double tail = last_mag * ratio / (1.0 - ratio);
        if (tail < 1e-17 * std::max(1.0, std::abs(acc)) || last_mag == 0.0) {
            *tail_bound = tail;
            return acc;
        }
    }
    throw convergence_error("assemble: Dirichlet tail did not converge");
}

} // namespace

ExpansionBreakdown assemble(const cplx& s, long k, double tol) {
    if (s.real() >= 1.0) {
        throw domain_error("assemble: requires sigma < 1");
    }
    ExpansionBreakdown b;
    b.s = s;
    b.k = k;
    b.frame = eta_frame(s);
    const EtaFrame& f = b.frame;
    if (k < f.m) {
        throw domain_error("assemble: k must be >= m");
    }
    const cplx eta = f.eta;
    const cplx log_eta = std::log(eta);
    const double scale = pi * f.eta2;    // common prefactor e^{scale} for the bracket

    b.chi_factor = chi(s);
    b.power_factor = ExtComplex::from_log((s - 1.0) * log_eta - cplx(0.0, pi) * eta * eta);

    const ExtComplex trig_ext = trig_term_ext(f, k);
    const cplx trig_scaled = trig_ext.to_complex_scaled(scale);
    b.trig_term = trig_ext.to_complex();

    cplx corr_scaled(0.0, 0.0);
    for (long j = f.m + 1; j <= k; ++j) {
        const cplx dj = static_cast<double>(j) - eta;
        const cplx lt = cplx(0.0, pi * static_cast<double>(j - 1)) - 2.0 * pi * I * dj * dj + scale;
        corr_scaled += std::exp(lt) * w_factor(dj, eta);
    }
    b.correction_sum = corr_scaled * std::exp(-scale);

    QuadratureResult rem = remainder_R(f, tol, scale);
    b.remainder = rem;
    b.remainder.value = rem.value * std::exp(-scale);
    b.remainder.est_error = rem.est_error * std::exp(-scale);

    double dir_tail_bound = 0.0;
    cplx dirtail_scaled;
    if (s.real() <= -10.0) {
        dirtail_scaled = dirichlet_tail_scaled(s, f, k, scale, &dir_tail_bound);
    } else {
        // same grouping fed from the Euler-Maclaurin tail of zeta(1-s)
        const cplx tail_em = zeta_em_tail(1.0 - s, k);
        if (tail_em == cplx(0.0, 0.0)) {
            dirtail_scaled = cplx(0.0, 0.0);
        } else {
            const cplx lt = std::log(tail_em) + (1.0 - s) * log_eta
                + cplx(0.0, pi) * eta * eta + scale;
            dirtail_scaled = std::exp(lt);
        }
        dir_tail_bound = 1e-14 * std::abs(dirtail_scaled);
    }
    b.dirichlet_tail = dirtail_scaled * std::exp(-scale);

    const cplx braces_scaled = dirtail_scaled - trig_scaled - corr_scaled - rem.value;
    b.r_value = b.chi_factor * b.power_factor
        * ExtComplex::from_polar(ExtComplex::from_complex(braces_scaled).log_modulus - scale,
                                 ExtComplex::from_complex(braces_scaled).phase);

    const double braces_mag = std::abs(braces_scaled);
    b.est_rel_error = braces_mag > 0.0
        ? (rem.est_error + dir_tail_bound) / braces_mag
        : 0.0;

    // U of the main-factor form, from the same scaled pieces
    const cplx log_main = 0.5 * std::log(2.0) + cplx(0.0, 3.0 * pi / 8.0) + log_sin_pi(eta);
    const cplx logA = std::log(2.0) + log_cos(2.0 * pi * eta) - log_main;
    const cplx inner_scaled = -dirtail_scaled + corr_scaled + rem.value;
    if (inner_scaled != cplx(0.0, 0.0)) {
        b.u_value = (ExtComplex::from_log(logA) * ExtComplex::from_complex(inner_scaled))
                        .to_complex_scaled(-scale);
    }
    const cplx dk = eta - static_cast<double>(k);
    b.u_value -= std::exp(cplx(0.0, pi * static_cast<double>(k)) + 2.0 * pi * I * eta
                          - 2.0 * pi * I * dk * dk - log_main);
    return b;
}

ExpansionBreakdown assemble(const cplx& s, double tol) {
    return assemble(s, eta_frame(s).m, tol);
}

ExtComplex leading_term(const cplx& s) {
    const ExtComplex chi_ext = chi(s);
    if (chi_ext.is_zero()) return ExtComplex::zero();
    const EtaFrame f = eta_frame(s);
    const cplx rest = cplx(0.0, -pi / 8.0) - 0.5 * std::log(2.0)
        + (s - 1.0) * std::log(f.eta) + pi * I * (f.eta - f.eta * f.eta);
    return chi_ext * ExtComplex::from_log(rest);
}

} // namespace rsaux
