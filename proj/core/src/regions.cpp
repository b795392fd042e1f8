#include "rsaux/regions.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "rsaux/errors.hpp"

namespace rsaux {

RegionParams RegionParams::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw domain_error("RegionParams: cannot open config file " + path);
    }
    RegionParams p;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        }
        if (trimmed.empty()) continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos) {
            throw domain_error("RegionParams: line " + std::to_string(lineno) + " is not key=value");
        }
        const std::string key = trimmed.substr(0, eq);
        double value;
        try {
            value = std::stod(trimmed.substr(eq + 1));
        } catch (const std::exception&) {
            throw domain_error("RegionParams: bad number on line " + std::to_string(lineno));
        }
        if (key == "radius_G") p.radius_G = value;
        else if (key == "radius_wedge") p.radius_wedge = value;
        else if (key == "slope") p.slope = value;
        else if (key == "parabola") p.parabola = value;
        else if (key == "alpha") p.alpha = value;
        else if (key == "A") p.A = value;
        else if (key == "t0") p.t0 = value;
        else throw domain_error("RegionParams: unknown key '" + key + "'");
    }
    if (!(p.alpha > 0.0 && p.alpha < pi / 4.0)) {
        throw domain_error("RegionParams: alpha must lie in (0, pi/4)");
    }
    if (p.A <= 0.0 || p.t0 <= 0.0) {
        throw domain_error("RegionParams: A and t0 must be positive");
    }
    return p;
}

std::string to_string(Region r) {
    switch (r) {
        case Region::G: return "G";
        case Region::H: return "H";
        case Region::G_alpha: return "G_alpha";
        case Region::Wedge: return "Wedge";
        case Region::Subpoly: return "Subpoly";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::zero_free: return "zero_free";
        case Verdict::trivial_only: return "trivial_only";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

std::set<Region> classify(const cplx& s, const RegionParams& params) {
    const double sigma = s.real();
    const double t = s.imag();
    const double one_minus_sigma = 1.0 - sigma;
    const double mod_sm1 = std::abs(s - 1.0);

    std::set<Region> out;
    if (sigma < 0.0 && mod_sm1 >= params.radius_G
        && t >= -params.slope * one_minus_sigma
        && one_minus_sigma * one_minus_sigma >= params.parabola * t) {
        out.insert(Region::G);
    }
    if (std::fabs(t) * std::tan(2.0 * params.alpha) <= one_minus_sigma) {
        out.insert(Region::G_alpha);
    }
    if (one_minus_sigma > std::fabs(t) && mod_sm1 >= params.radius_wedge) {
        out.insert(Region::Wedge);
    }
    if (t >= params.t0 && params.A * std::pow(t, 0.4) * std::log(t) > one_minus_sigma) {
        out.insert(Region::Subpoly);
    }
    try {
        const EtaFrame f = eta_frame(s);
        if (f.eta1 >= 2.0 && f.eta2 >= 2.0) out.insert(Region::H);
    } catch (const domain_error&) {
        // no frame, no H
    }
    return out;
}

double bound_remainder(const EtaFrame& frame) {
    if (!(frame.s.real() < 1.0) || std::abs(frame.s - 1.0) < 4.0 * pi) {
        throw domain_error("bound_remainder: requires sigma < 1 and |s-1| >= 4 pi");
    }
    const double ae = frame.abs_eta();
    const double first = std::min(4.0, 29.0 * std::exp(-pi * frame.eta2)) / ae;
    const double second = 15.0 * std::exp(-pi * ae * ae / 32.0) / ae;
    return first + second;
}

double BoundCertificate::component(const std::string& name) const {
    const auto it = log_components.find(name);
    return it == log_components.end() ? 0.0 : std::exp(it->second);
}

BoundCertificate bound_U(const EtaFrame& frame) {
    if (!(frame.eta1 >= 2.0 && frame.eta2 >= 2.0)) {
        throw domain_error("bound_U: requires eta1 >= 2 and eta2 >= 2");
    }
    const double e2 = frame.eta2;
    const double ae = frame.abs_eta();
    const double log_ae = std::log(ae);

    // shared prefactor (sqrt2 / (pi eta2)) (1 + pi eta2) e^{pi eta2}
    const double log_pref = 0.5 * std::log(2.0) - std::log(pi * e2)
        + std::log1p(pi * e2) + pi * e2;

    BoundCertificate cert;
    // first summand: 1.10942 * pref * e^{-2 pi eta1^2 eta2^2/|eta|^2}
    const double log_first = std::log(1.10942) + log_pref
        - 2.0 * pi * frame.eta1 * frame.eta1 * e2 * e2 / (ae * ae);
    cert.log_components["first"] = log_first;

    // remainder bound, log form: min(4, 29 e^{-pi eta2})/|eta| + 15 e^{-pi |eta|^2/32}/|eta|
    const double log_min_flat = std::log(4.0);
    const double log_min_exp = std::log(29.0) - pi * e2;
    const bool exp_branch = log_min_exp < log_min_flat;
    const double log_r1 = std::min(log_min_flat, log_min_exp) - log_ae;
    const double log_r2 = std::log(15.0) - pi * ae * ae / 32.0 - log_ae;
    const double log_rb = log_add(log_r1, log_r2);
    cert.log_components["min_branch"] = exp_branch ? 1.0 : 0.0;
    cert.log_components["r_bound"] = log_rb;
    cert.r_bound = std::exp(log_rb);

    // second summand: pref * r_bound
    const double log_second = log_pref + log_rb;
    cert.log_components["second"] = log_second;

    // third summand: e^{-4 pi (eta2 - 1/2) eta2} / (sqrt2 sinh pi eta2)
    const double log_third = -4.0 * pi * (e2 - 0.5) * e2
        - 0.5 * std::log(2.0) - log_sinh(pi * e2);
    cert.log_components["third"] = log_third;

    cert.log_u_bound = log_add(log_add(log_first, log_second), log_third);
    cert.u_bound = std::exp(cert.log_u_bound);
    return cert;
}

VerdictResult zero_free_verdict(const cplx& s, const RegionParams& params) {
    const std::set<Region> labels = classify(s, params);
    VerdictResult r;
    if (labels.count(Region::G) || labels.count(Region::Wedge)) {
        r.verdict = Verdict::trivial_only;
        if (s.imag() == 0.0 && s.real() < 0.0 && s.real() == std::floor(s.real())) {
            const long n = static_cast<long>(-s.real());
            if (n % 2 == 0) r.trivial_zero_n = n / 2;
        }
        return r;
    }
    if (labels.count(Region::Subpoly)) {
        r.verdict = Verdict::zero_free;
        r.conditional = true;   // depends on the caller-supplied (A, t0)
        return r;
    }
    return r;
}

} // namespace rsaux
