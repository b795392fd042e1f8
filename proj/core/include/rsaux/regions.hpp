#ifndef RSAUX_REGIONS_HPP
#define RSAUX_REGIONS_HPP

#include <map>
#include <set>
#include <string>

#include "rsaux/ext_complex.hpp"
#include "rsaux/saddle.hpp"

namespace rsaux {

/*
 * Region definitions, s-plane inequalities taken literally:
 *
 *   G       sigma < 0, |s-1| >= radius_G, t >= -slope (1-sigma),
 *           (1-sigma)^2 >= parabola * t        (only trivial zeros)
 *   H       eta1 >= 2 and eta2 >= 2            (main-term lemma applies)
 *   G_alpha |t| tan(2 alpha) <= 1 - sigma      (leading asymptotic holds)
 *   Wedge   1 - sigma > |t|, |s-1| >= radius_wedge
 *   Subpoly t >= t0 and A t^{2/5} log t > 1 - sigma   (conditional on A, t0)
 */
struct RegionParams {
    double radius_G = 5408.0 * pi;
    double radius_wedge = 3528.0 * pi;
    double slope = 99.0 / 20.0;
    double parabola = 225.0 * pi;
    double alpha = pi / 8.0;       // in (0, pi/4)
    double A = 1.0;                // subpolynomial region; unverified default
    double t0 = 1e6;               // unverified default

    // extensions housed for experimentation with the t^{2/5} log t proof
    double psi_B = 1.0;

    static RegionParams from_file(const std::string& path);
};

enum class Region { G, H, G_alpha, Wedge, Subpoly };

std::string to_string(Region r);

// Labels of every region whose defining inequalities hold at s
// (closed where the inequality is >=, open where it is strict).
std::set<Region> classify(const cplx& s, const RegionParams& params = {});

/*
 * Right-hand side of the saddle-remainder bound
 *
 *   |R| <= min(4, 29 e^{-pi eta2})/|eta| + 15 e^{-pi |eta|^2/32}/|eta|,
 *
 * valid for sigma < 1 and |s-1| >= 4 pi (precondition checked).
 */
double bound_remainder(const EtaFrame& frame);

/*
 * Evaluated bound on |U| for eta1 >= 2, eta2 >= 2, with each summand kept
 * in natural-log form (components reach 1e-1388 in the wedge staging, far
 * below binary64 underflow).
 */
struct BoundCertificate {
    double r_bound = 0.0;      // remainder bound (collapsed; may underflow to 0)
    double u_bound = 0.0;      // total |U| bound (collapsed)
    double log_u_bound = neg_inf;
    bool log_space = true;
    // named subterms, natural-log values; "min_branch" records which branch
    // min(4, 29 e^{-pi eta2}) selected (0 = flat 4, 1 = 29 e^{-pi eta2})
    std::map<std::string, double> log_components;
    double component(const std::string& name) const;
};

BoundCertificate bound_U(const EtaFrame& frame);

enum class Verdict { zero_free, trivial_only, unknown };

std::string to_string(Verdict v);

struct VerdictResult {
    Verdict verdict = Verdict::unknown;
    bool conditional = false;   // subpolynomial region depends on caller (A, t0)
    long trivial_zero_n = -1;   // n when s sits on the trivial zero -2n
};

// trivial_only on G or the wedge, zero_free (conditional) on the
// subpolynomial region, unknown elsewhere.
VerdictResult zero_free_verdict(const cplx& s, const RegionParams& params = {});

} // namespace rsaux

#endif
