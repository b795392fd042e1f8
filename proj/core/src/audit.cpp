#include "rsaux/audit.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <iomanip>

#include "rsaux/errors.hpp"
#include "rsaux/ext_complex.hpp"

namespace rsaux {
namespace {

double simpson_slice(const std::function<double(double)>& f, double a, double fa,
                     double b, double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double fa,
                            double b, double fb, double m, double fm, double whole,
                            double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_slice(f, a, fa, m, fm, lm, flm);
    const double right = simpson_slice(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0) {
        throw convergence_error("audit quadrature: depth exhausted");
    }
    if (std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
         + adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    return adaptive_simpson_rec(f, a, fa, b, fb, m, fm,
                                simpson_slice(f, a, fa, b, fb, m, fm), tol, 48);
}

constexpr double sqrt2 = 1.4142135623730950488;

// integrand of the sup-integral study, with and without the e^{pi u/sqrt2} weight
double sup_integrand(double u, double abs_eta, bool with_linear) {
    const double expo = -2.0 * pi * u * u
        + (with_linear ? pi * u / sqrt2 : 0.0)
        + (4.0 * pi / 3.0) * std::pow(2.0, 1.5) * u * u * u / abs_eta;
    return u * u * u * std::exp(expo);
}

double sup_value(double abs_eta, bool with_linear, double tol) {
    return integrate([=](double u) { return sup_integrand(u, abs_eta, with_linear); },
                     0.0, abs_eta / 4.0, tol);
}

// scan + golden refinement of the sup over |eta| in [sqrt2, 400]
double sup_scan(bool with_linear, int oversample, double tol) {
    const int npts = 200 * oversample;
    const double lo = sqrt2, hi = 400.0;
    double best = 0.0, best_eta = lo;
    for (int i = 0; i < npts; ++i) {
        const double e = lo * std::pow(hi / lo, static_cast<double>(i) / (npts - 1));
        const double v = sup_value(e, with_linear, tol);
        if (v > best) { best = v; best_eta = e; }
    }
    double a = best_eta * 0.85, b = best_eta * 1.18;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = sup_value(c1, with_linear, tol), f2 = sup_value(c2, with_linear, tol);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            a = c1; c1 = c2; f1 = f2;
            c2 = a + gr * (b - a); f2 = sup_value(c2, with_linear, tol);
        } else {
            b = c2; c2 = c1; f2 = f1;
            c1 = b - gr * (b - a); f1 = sup_value(c1, with_linear, tol);
        }
    }
    return std::max(best, std::max(f1, f2));
}

} // namespace

std::string to_string(Relation r) {
    switch (r) {
        case Relation::equals: return "equals";
        case Relation::less_than: return "less_than";
        case Relation::greater_than: return "greater_than";
    }
    return "?";
}

AuditItem make_audit_item(std::string name, double paper, double computed,
                          Relation rel, double tol) {
    AuditItem item;
    item.name = std::move(name);
    item.paper_value = paper;
    item.computed_value = computed;
    item.relation = rel;
    item.tolerance = tol;
    switch (rel) {
        case Relation::equals:
            item.margin = tol - std::fabs(computed - paper);
            item.pass = std::fabs(computed - paper) <= tol;
            break;
        case Relation::less_than:
            item.margin = paper - computed;
            item.pass = computed <= paper;
            break;
        case Relation::greater_than:
            item.margin = computed - paper;
            item.pass = computed >= paper;
            break;
    }
    return item;
}

double lemma_series_term3() {
    const cplx b(0.5, 0.5);
    const cplx omb = 1.0 - b;
    const cplx inv_b2 = 1.0 / (b * b);
    const cplx t = inv_b2 * (cplx(1.0 / 3.0) - 1.0 + 1.0
                             - omb * omb * omb / 3.0 + omb * omb - omb);
    return std::abs(t);
}

AuditItem audit_lemma_series() {
    const cplx b(0.5, 0.5);
    const cplx omb = 1.0 - b;                  // |1-b| = 2^{-1/2}
    const cplx inv_b2 = 1.0 / (b * b);
    double sum = 0.0;
    cplx pw = omb;                             // (1-b)^{n-2}
    for (long n = 3;; ++n) {
        const double n0 = static_cast<double>(n);
        const cplx term = inv_b2 * (1.0 / n0 - 2.0 / (n0 - 1.0) + 1.0 / (n0 - 2.0)
                                    - pw * omb * omb / n0
                                    + 2.0 * pw * omb / (n0 - 1.0)
                                    - pw / (n0 - 2.0));
        sum += std::abs(term);
        pw *= omb;
        // telescoping rational tail + geometric complex tail
        const double tail_rational = 2.0 / ((n0 - 1.0) * n0);
        const double tail_geom = 2.0 * std::abs(pw) * 3.5 / ((n0 - 1.0) * (1.0 - std::abs(omb)));
        if (tail_rational + tail_geom < 1e-9) break;
        if (n > 2000000) throw convergence_error("audit_lemma_series: no convergence");
    }
    return make_audit_item("lemma31.series_sum", 0.7439893, sum, Relation::equals, 5e-7);
}

std::vector<AuditItem> audit_quadrature_constants(int oversample) {
    const double tol = 1e-11 / oversample;
    std::vector<AuditItem> out;

    // limit of the cubic-weight Gaussian integral; integrand < 1e-22 beyond 5.5
    const double jinf = integrate([](double u) {
        return u * u * u * std::exp(-2.0 * pi * u * u + pi * u / sqrt2);
    }, 0.0, 5.5, tol);
    out.push_back(make_audit_item("thm33.cubic_gaussian", 0.0453198, jinf,
                                  Relation::equals, 1e-6));

    const double c_i2 = 8.0 * sqrt2 * std::exp(7.0 * pi / 16.0) / pi;
    out.push_back(make_audit_item("thm33.I2_coefficient", 14.2355, c_i2,
                                  Relation::less_than, 0.0));

    const double sup_f = sup_scan(true, oversample, tol);
    out.push_back(make_audit_item("thm33.sup_integral", 0.14406, sup_f,
                                  Relation::less_than, 0.0));

    const double i11 = (2.0 * pi * sqrt2 * std::exp(pi / 2.0) / 3.0)
        * integrate([](double u) { return std::exp(-2.0 * pi * u * u + pi * u / sqrt2); },
                    0.0, std::pow(2.0, -1.5), tol);
    out.push_back(make_audit_item("thm33.I11", 5.7518, i11, Relation::less_than, 0.0));

    const double i12 = 2.0 * sqrt2 * std::exp(pi / 2.0) * (4.0 * pi / 3.0)
        * std::pow(2.0, 1.5) * sup_f;
    out.push_back(make_audit_item("thm33.I12", 23.2227, i12, Relation::less_than, 0.0));

    const double i11p = (2.0 * pi * sqrt2 * std::exp(pi / 4.0) / 3.0)
        * integrate([](double u) { return std::exp(-2.0 * pi * u * u); },
                    0.0, std::pow(2.0, -1.5), tol);
    out.push_back(make_audit_item("thm33.I11p", 1.8143, i11p, Relation::less_than, 0.0));

    const double sup_g = sup_scan(false, oversample, tol);
    const double i12p = 2.0 * sqrt2 * std::exp(pi / 4.0) * (4.0 * pi / 3.0)
        * std::pow(2.0, 1.5) * sup_g;
    out.push_back(make_audit_item("thm33.I12p", 2.0367, i12p, Relation::less_than, 0.0));

    out.push_back(make_audit_item("thm33.total_decay", 28.9745, i11 + i12,
                                  Relation::less_than, 0.0));
    out.push_back(make_audit_item("thm33.total_flat", 3.8510, i11p + i12p,
                                  Relation::less_than, 0.0));
    return out;
}

std::vector<AuditItem> audit_scalar_inequalities(int oversample) {
    const long n = 10000L * oversample;
    std::vector<AuditItem> out;

    // |cos((1-i)u)|^2 / cosh(2u) = (cos 2u + cosh 2u) / (2 cosh 2u) > 1/4
    auto cos_cosh_ratio = [](double u) {
        return 0.5 * (std::cos(2.0 * u) / std::cosh(2.0 * u) + 1.0);
    };
    double ratio_min = 1e300;
    double ratio_argmin = 0.0;
    for (long i = 0; i <= n; ++i) {
        const double u = -10.0 + 20.0 * static_cast<double>(i) / n;
        const double r = cos_cosh_ratio(u);
        if (r < ratio_min) { ratio_min = r; ratio_argmin = u; }
    }
    {   // golden-section polish so the value is grid-independent
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = ratio_argmin - 20.0 / n, b = ratio_argmin + 20.0 / n;
        double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
        double f1 = cos_cosh_ratio(c1), f2 = cos_cosh_ratio(c2);
        for (int it = 0; it < 80; ++it) {
            if (f1 > f2) { a = c1; c1 = c2; f1 = f2; c2 = a + gr * (b - a); f2 = cos_cosh_ratio(c2); }
            else { b = c2; c2 = c1; f2 = f1; c1 = b - gr * (b - a); f1 = cos_cosh_ratio(c1); }
        }
        ratio_min = std::min(ratio_min, std::min(f1, f2));
    }
    out.push_back(make_audit_item("lemma32.cos_cosh_ratio", 0.25, ratio_min,
                                  Relation::greater_than, 0.0));
    // beyond the grid: ratio >= (1 - 1/cosh 20)/2
    out.push_back(make_audit_item("lemma32.cos_cosh_tail", 0.25,
                                  0.5 * (1.0 - 1.0 / std::cosh(20.0)),
                                  Relation::greater_than, 0.0));

    // x cosh 2x / sinh x < (1+x) e^x for x > 0, normalized margin in logs.
    // Fixed grid endpoints keep the minimum stable when the grid is refined
    // (the margin vanishes only at x -> 0, outside the grid).
    double margin_min = 1e300;
    const double x_lo = 1e-4, x_hi = 60.0;
    for (long i = 0; i <= n; ++i) {
        const double x = x_lo + (x_hi - x_lo) * static_cast<double>(i) / n;
        const double log_lhs = std::log(x) + log_cosh(2.0 * x) - log_sinh(x);
        const double log_rhs = std::log1p(x) + x;
        margin_min = std::min(margin_min, 1.0 - std::exp(log_lhs - log_rhs));
    }
    out.push_back(make_audit_item("lemma41.xcosh_sinh_margin", 0.0, margin_min,
                                  Relation::greater_than, 0.0));
    {
        const double x = 700.0;   // tail dominance: lhs -> x e^x, margin -> 1/(1+x)
        const double log_lhs = std::log(x) + log_cosh(2.0 * x) - log_sinh(x);
        const double log_rhs = std::log1p(x) + x;
        out.push_back(make_audit_item("lemma41.xcosh_sinh_tail", 0.0,
                                      1.0 - std::exp(log_lhs - log_rhs),
                                      Relation::greater_than, 0.0));
    }

    // crossing point of e^x = 1 + 2x
    double lo = 1.0, hi = 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (std::exp(mid) - 1.0 - 2.0 * mid < 0.0 ? lo : hi) = mid;
    }
    const double x0 = 0.5 * (lo + hi);
    out.push_back(make_audit_item("lemma41.x0_crossing", 1.25643, x0,
                                  Relation::equals, 1e-5));

    // 1 + 2x > e^x on (0, x0): margin on an interior grid with fixed ends
    double m2 = 1e300;
    const double a2 = 1e-4 * x0, b2 = (1.0 - 1e-4) * x0;
    for (long i = 0; i <= n; ++i) {
        const double x = a2 + (b2 - a2) * static_cast<double>(i) / n;
        m2 = std::min(m2, 1.0 + 2.0 * x - std::exp(x));
    }
    out.push_back(make_audit_item("lemma41.one_plus_2x_margin", 0.0, m2,
                                  Relation::greater_than, 0.0));

    // |e^x - 1| <= 2x on [0, 1]
    double m3 = 1e300;
    for (long i = 0; i <= n; ++i) {
        const double x = static_cast<double>(i) / n;
        m3 = std::min(m3, 2.0 * x - std::expm1(x));
    }
    out.push_back(make_audit_item("thm33.expm1_le_2x", 0.0, m3,
                                  Relation::greater_than, 0.0));
    return out;
}

namespace {

double log10_of_log(double natural_log) { return natural_log / std::log(10.0); }

// max of f on [a, b] by golden section, then bisection on the numerical
// derivative when it changes sign; falls back to the better endpoint.
double golden_max(const std::function<double(double)>& f, double a, double b) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = f(c1), f2 = f(c2);
    double lo = a, hi = b;
    for (int it = 0; it < 200; ++it) {
        if (f1 < f2) { lo = c1; c1 = c2; f1 = f2; c2 = lo + gr * (hi - lo); f2 = f(c2); }
        else { hi = c2; c2 = c1; f2 = f1; c1 = hi - gr * (hi - lo); f1 = f(c1); }
    }
    double best = std::max(f1, f2);
    const double h = 1e-7 * (b - a);
    auto deriv = [&](double x) { return (f(x + h) - f(x - h)) / (2.0 * h); };
    double da = deriv(a + h), db = deriv(b - h);
    if (da * db < 0.0) {
        double x1 = a + h, x2 = b - h;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (x1 + x2);
            if (deriv(mid) * da > 0.0) x1 = mid; else x2 = mid;
        }
        best = std::max(best, f(0.5 * (x1 + x2)));
    }
    return std::max(best, std::max(f(a), f(b)));
}

} // namespace

std::vector<AuditItem> audit_region_constants(int oversample) {
    (void)oversample;   // closed forms below; grids live in golden_max
    std::vector<AuditItem> out;

    const double phi_max = golden_max([](double p) {
        const double sp = std::sin(p), cp = std::cos(p);
        return pi * (sp - 104.0 * sp * sp * cp * cp);
    }, pi / 4.0, std::atan(10.0));
    out.push_back(make_audit_item("thm42.phi_max", -0.076876, phi_max,
                                  Relation::less_than, 0.0));

    const double b = 52.0 * pi / sqrt2;
    const double stage1 = 1.10942 * (sqrt2 / b) * (1.0 + b) * std::exp(-0.076876 * 52.0);
    out.push_back(make_audit_item("thm42.stage_first", 0.0290564, stage1,
                                  Relation::less_than, 0.0));

    const double pref5 = (sqrt2 / (5.0 * pi)) * (1.0 + 5.0 * pi);
    const double stage2 = pref5 * 29.0 / 52.0;
    out.push_back(make_audit_item("thm42.stage_second", 0.83891, stage2,
                                  Relation::less_than, 0.0));

    const double log_stage3 = std::log(pref5) + std::log(15.0 / 52.0)
        + pi * 52.0 - pi * 52.0 * 52.0 / 32.0;
    out.push_back(make_audit_item("thm42.stage_third_log10",
                                  std::log10(3.0) - 45.0, log10_of_log(log_stage3),
                                  Relation::less_than, 0.0));

    const double log_stage4 = -4.0 * pi * 4.5 * 5.0 - 0.5 * std::log(2.0) - log_sinh(5.0 * pi);
    out.push_back(make_audit_item("thm42.stage_fourth_log10",
                                  std::log10(4.0) - 130.0, log10_of_log(log_stage4),
                                  Relation::less_than, 0.0));

    const double total = stage1 + stage2 + std::exp(log_stage3) + std::exp(log_stage4);
    out.push_back(make_audit_item("thm42.stage_total", 0.868, total,
                                  Relation::less_than, 0.0));

    // wedge staging at |eta| = 42, alpha = pi/8
    const double alpha = pi / 8.0, e42 = 42.0;
    const double sa = std::sin(alpha), ca = std::cos(alpha);
    const double pref42 = sqrt2 * (1.0 + 1.0 / (pi * e42 * sa));
    const double log_w1 = std::log(1.10942 * pref42)
        + pi * e42 * ca - 2.0 * pi * e42 * e42 * sa * sa * sa * sa;
    out.push_back(make_audit_item("cor43.wedge_first_log10",
                                  std::log10(9.0) - 50.0, log10_of_log(log_w1),
                                  Relation::less_than, 0.0));

    const double w2 = pref42 * (29.0 / e42
        + 15.0 * std::exp(pi * e42 * ca - pi * e42 * e42 / 32.0) / e42);
    out.push_back(make_audit_item("cor43.wedge_second", 0.99582, w2,
                                  Relation::less_than, 0.0));

    const double eta2w = e42 * sa;
    const double log_w3 = -4.0 * pi * (eta2w - 0.5) * eta2w
        - 0.5 * std::log(2.0) - log_sinh(pi * eta2w);
    out.push_back(make_audit_item("cor43.wedge_third_log10",
                                  std::log10(2.0) - 1388.0, log10_of_log(log_w3),
                                  Relation::less_than, 0.0));
    return out;
}

std::vector<AuditItem> run_all_audits(int oversample) {
    std::vector<AuditItem> out;
    const AuditItem series = audit_lemma_series();
    out.push_back(series);
    out.push_back(make_audit_item("lemma31.series_lt_3_4", 0.75, series.computed_value,
                                  Relation::less_than, 0.0));
    for (auto&& v : audit_quadrature_constants(oversample)) out.push_back(v);
    for (auto&& v : audit_scalar_inequalities(oversample)) out.push_back(v);
    for (auto&& v : audit_region_constants(oversample)) out.push_back(v);
    return out;
}

std::string audit_table(const std::vector<AuditItem>& items) {
    std::ostringstream os;
    os << std::left << std::setw(28) << "name" << std::setw(14) << "relation"
       << std::setw(24) << "computed" << std::setw(24) << "paper"
       << std::setw(14) << "margin" << "pass\n";
    for (const auto& it : items) {
        os << std::left << std::setw(28) << it.name
           << std::setw(14) << to_string(it.relation)
           << std::setw(24) << std::setprecision(12) << it.computed_value
           << std::setw(24) << it.paper_value
           << std::setw(14) << std::setprecision(3) << it.margin
           << (it.pass ? "yes" : "NO") << "\n";
    }
    return os.str();
}

} // namespace rsaux
