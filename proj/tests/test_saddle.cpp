#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rsaux/contour.hpp"
#include "rsaux/errors.hpp"
#include "rsaux/regions.hpp"
#include "rsaux/saddle.hpp"
#include "rsaux/special_functions.hpp"

using namespace rsaux;

namespace {

// s on the ray with prescribed eta
cplx s_of_eta(const cplx& eta) { return 1.0 + cplx(0.0, 2.0 * pi) * eta * eta; }

} // namespace

TEST_CASE("eta_frame at exactly solvable points") {
    SUBCASE("(s-1)/(2 pi i) = 2i") {
        const EtaFrame f = eta_frame({1.0 - 4.0 * pi, 0.0});
        CHECK(std::abs(f.eta - cplx(1.0, 1.0)) < 1e-14);
        CHECK(f.eta1 == doctest::Approx(1.0));
        CHECK(f.eta2 == doctest::Approx(1.0));
        CHECK(f.m == 2);
    }
    SUBCASE("(s-1)/(2 pi i) = -1 forces arg eta = pi/2") {
        const EtaFrame f = eta_frame({1.0, -2.0 * pi});
        CHECK(std::abs(f.eta - cplx(0.0, 1.0)) < 1e-14);
        CHECK(f.m == 1);
    }
    SUBCASE("radical cross-check far out") {
        const EtaFrame f = eta_frame({-20000.0, 100.0});
        CHECK(f.eta1 * f.eta1 - f.eta2 * f.eta2
              == doctest::Approx(100.0 / (2.0 * pi)).epsilon(1e-12));
        CHECK(2.0 * f.eta1 * f.eta2 == doctest::Approx(20001.0 / (2.0 * pi)).epsilon(1e-12));
    }
}

TEST_CASE("eta_frame invariants on a random panel") {
    oracles::Rng rng(101);
    for (int i = 0; i < 100; ++i) {
        const cplx s = rng.in_rect(-80.0, 0.9, -200.0, 200.0);
        if (s.imag() == 0.0) continue;
        const EtaFrame f = eta_frame(s);
        const cplx target = (s - 1.0) / cplx(0.0, 2.0 * pi);
        CHECK(std::abs(f.eta * f.eta - target) <= 1e-13 * std::abs(target));
        CHECK(f.arg_eta > -pi / 4.0);
        CHECK(f.arg_eta <= 3.0 * pi / 4.0);
        CHECK(f.m >= 0);
        CHECK(f.m == static_cast<long>(std::floor(f.eta1 + f.eta2)));
        CHECK(f.eta1 * f.eta1 - f.eta2 * f.eta2
              == doctest::Approx(s.imag() / (2.0 * pi)).epsilon(1e-12));
        CHECK(2.0 * f.eta1 * f.eta2
              == doctest::Approx((1.0 - s.real()) / (2.0 * pi)).epsilon(1e-12));
    }
}

TEST_CASE("eta_frame branch restriction") {
    CHECK_THROWS_AS(eta_frame({2.0, 0.0}), branch_error);   // arg(s-1) = 0
    CHECK_THROWS_AS(eta_frame({1.0, 0.0}), branch_error);
    CHECK_NOTHROW(eta_frame({0.5, 0.0}));                   // arg(s-1) = pi
}

TEST_CASE("w_factor vanishes at zero and respects its cut") {
    const cplx eta(5.0, 5.0);
    CHECK(w_factor({0.0, 0.0}, eta) == cplx(0.0, 0.0));
    CHECK_THROWS_AS(w_factor(-2.0 * eta, eta), branch_error);
}

TEST_CASE("w_factor against the literal series oracle") {
    const cplx eta(5.0, 5.0);
    const cplx z(0.3, 0.1);
    const cplx got = w_factor(z, eta);
    const cplx expect = oracles::w_series(z, eta);
    CHECK(std::abs(got - expect) <= 1e-13 * std::abs(expect));
}

TEST_CASE("cubic-in-z bound on w inside |z| <= |eta|/2") {
    oracles::Rng rng(55);
    for (int i = 0; i < 100; ++i) {
        const cplx eta = std::polar(rng.uniform(2.0, 40.0), rng.uniform(0.05, pi / 2.0 - 0.05));
        const cplx z = std::polar(rng.uniform(0.0, 0.5 * std::abs(eta)),
                                  rng.uniform(-pi, pi));
        if (std::abs(1.0 + z / eta) < 1e-6) continue;
        const double bound = std::expm1((4.0 * pi / 3.0) * std::pow(std::abs(z), 3.0) / std::abs(eta));
        CHECK(std::abs(w_factor(z, eta)) <= bound * (1.0 + 1e-12) + 1e-300);
    }
}

TEST_CASE("trig_term pole at real eta = 1/4") {
    const EtaFrame f = eta_frame(s_of_eta({0.25, 0.0}));
    CHECK_THROWS_AS(trig_term(f, f.m), pole_error);
}

TEST_CASE("trig_term equals its defining line integral") {
    const EtaFrame f = eta_frame(s_of_eta({1.0, 1.0}));   // eta = 1+i
    const long k = 2;
    LinePath path;
    path.crossing = static_cast<double>(k) + 0.5;
    path.direction = std::polar(1.0, -pi / 4.0);
    const cplx eta = f.eta;
    const auto q = line_quadrature(path, [&](const cplx& x) {
        return std::exp(-cplx(0.0, 2.0 * pi) * (x - eta) * (x - eta) - log_2i_sin_pi(x));
    }, 1e-13);
    const cplx tt = trig_term(f, k);
    CHECK(std::abs(tt - q.value) <= 1e-12);
    // frozen reference for the same point
    CHECK(tt.real() == doctest::Approx(0.02817803481).epsilon(1e-9));
    CHECK(tt.imag() == doctest::Approx(-0.01167172418).epsilon(1e-9));
}

TEST_CASE("trig_term approaches its large-eta2 limit geometrically") {
    auto limit_defect = [](double eta2) {
        const EtaFrame f = eta_frame(s_of_eta({1.5, eta2}));
        const ExtComplex tt = trig_term_ext(f, f.m);
        // ratio against (1/sqrt2) e^{7 pi i/8} e^{pi i eta}
        const ExtComplex ratio = tt * ExtComplex::from_log(
            0.5 * std::log(2.0) - cplx(0.0, 7.0 * pi / 8.0) - cplx(0.0, pi) * f.eta);
        return std::abs(ratio.to_complex() - 1.0);
    };
    const double d1 = limit_defect(1.25), d2 = limit_defect(2.0), d3 = limit_defect(2.75);
    CHECK(d2 < 0.2 * d1);
    CHECK(d3 < 0.2 * d2);
    for (double eta2 : {10.0, 20.0, 40.0}) {
        CHECK(limit_defect(eta2) < 1e-12);
    }
}

TEST_CASE("remainder magnitude sits under both closed-form bounds") {
    const EtaFrame f = eta_frame({1.0 - 6400.0 * pi, 0.0});   // eta = 40+40i
    REQUIRE(std::abs(f.eta - cplx(40.0, 40.0)) < 1e-10);
    const double scale = pi * f.eta2;
    const auto q = remainder_R(f, 1e-10, scale);
    const double log_rem = std::log(std::abs(q.value)) - scale;
    // tight form, log space
    const double log_tight = std::log(bound_remainder(f));
    CHECK(log_rem <= log_tight);
    // flat form evaluates to about 0.0707
    const double flat = 4.0 / f.abs_eta()
        + 15.0 * std::exp(-pi * f.abs_eta() * f.abs_eta() / 32.0) / f.abs_eta();
    CHECK(flat == doctest::Approx(0.070710678).epsilon(1e-6));
    CHECK(log_rem <= std::log(flat));
}

TEST_CASE("assemble reproduces the oracle and is independent of k") {
    oracles::Rng rng(2024);
    for (int i = 0; i < 4; ++i) {
        const cplx s = rng.in_rect(-55.0, -20.0, 12.0, 90.0);
        const EtaFrame f = eta_frame(s);
        const ExpansionBreakdown b = assemble(s, f.m, 1e-10);
        const auto oracle = r_defining(s, 1e-12);
        const cplx got = b.r_value.to_complex();
        CHECK(std::abs(got - oracle.value) <= 1e-8 * std::abs(oracle.value));
        for (long k : {f.m + 1, f.m + 2, f.m + 5}) {
            const cplx other = assemble(s, k, 1e-10).r_value.to_complex();
            CHECK(std::abs(other - got) <= 1e-9 * std::abs(got));
        }
    }
}

TEST_CASE("assemble works on the analytic-zeta route for moderate sigma") {
    const cplx s(-4.5, 11.0);
    const ExpansionBreakdown b = assemble(s, 1e-10);
    const auto oracle = r_defining(s, 1e-12);
    CHECK(std::abs(b.r_value.to_complex() - oracle.value)
          <= 1e-8 * std::abs(oracle.value));
}

TEST_CASE("assemble rejects bad arguments") {
    CHECK_THROWS_AS(assemble({1.5, 3.0}, 1e-9), domain_error);
    const EtaFrame f = eta_frame({-30.0, 30.0});
    CHECK_THROWS_AS(assemble({-30.0, 30.0}, f.m - 1, 1e-9), domain_error);
}

TEST_CASE("|U| < 0.9 inside the trivial-zeros-only region") {
    const cplx s(-3969.6, 17423.3);
    REQUIRE(classify(s).count(Region::G) == 1);
    const ExpansionBreakdown b = assemble(s, 1e-9);
    CHECK(std::abs(b.u_value) < 0.9);
}

TEST_CASE("breakdown recomposes through the main-factor form") {
    // r_value must equal -chi eta^{s-1} e^{-pi i eta^2}
    //                    * (sqrt2 e^{3 pi i/8} sin pi eta)/(2 cos 2 pi eta) * (1+U)
    for (const cplx s : {cplx(-47.0, 23.0), cplx(-4.5, 11.0), cplx(-31.0, 64.0)}) {
        const EtaFrame f = eta_frame(s);
        for (long k : {f.m, f.m + 2}) {
            const ExpansionBreakdown b = assemble(s, k, 1e-10);
            const cplx log_main = 0.5 * std::log(2.0) + cplx(0.0, 3.0 * pi / 8.0)
                + log_sin_pi(f.eta) - std::log(2.0) - log_cos(2.0 * pi * f.eta);
            const ExtComplex recomposed = -(b.chi_factor * b.power_factor
                * ExtComplex::from_log(log_main)
                * ExtComplex::from_complex(1.0 + b.u_value));
            const ExtComplex ratio = recomposed / b.r_value;
            CHECK(std::abs(ratio.to_complex() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("correction terms are dominated by their w factor") {
    const cplx s(-47.0, 23.0);
    const EtaFrame f = eta_frame(s);
    for (long j = f.m + 1; j <= f.m + 5; ++j) {
        const cplx dj = static_cast<double>(j) - f.eta;
        const cplx term = std::exp(-cplx(0.0, 2.0 * pi) * dj * dj) * w_factor(dj, f.eta);
        CHECK(std::abs(term) <= std::abs(w_factor(dj, f.eta)) * (1.0 + 1e-12));
    }
}

TEST_CASE("w stays under exp((3pi/2)|x-eta|^2) on the integration line") {
    const cplx s(-47.0, 23.0);
    const EtaFrame f = eta_frame(s);
    const cplx dir = std::polar(1.0, -pi / 4.0);
    const cplx c(static_cast<double>(f.m) + 0.5, 0.0);
    const double tc = ((f.eta - c) * std::conj(dir)).real();
    for (double t = -6.0; t <= 6.0; t += 0.25) {
        const cplx x = c + (tc + t) * dir;
        const cplx z = x - f.eta;
        CHECK(std::abs(w_factor(z, f.eta))
              <= std::exp(1.5 * pi * std::norm(z)) * (1.0 + 1e-12));
    }
}

TEST_CASE("leading_term vanishes with chi and matches the expansion's main factor") {
    CHECK(leading_term({-2000.0, 0.0}).is_zero());

    // at large eta2 the exact main term converges to leading_term
    const EtaFrame f = eta_frame(s_of_eta({30.0, 40.0}));
    const ExtComplex lead = leading_term(f.s);
    const ExtComplex main_exact = -(chi(f.s)
        * ExtComplex::from_log((f.s - 1.0) * std::log(f.eta)
                               - cplx(0.0, pi) * f.eta * f.eta)
        * trig_term_ext(f, f.m));
    const ExtComplex ratio = main_exact / lead;
    CHECK(std::abs(ratio.to_complex() - 1.0) < 1e-6);
}

TEST_CASE("r_value relative deviation from leading_term decays like 1/|eta|") {
    auto lambda_at = [](double abs_eta) {
        const cplx eta = std::polar(abs_eta, 3.0 * pi / 8.0);
        const cplx s = s_of_eta(eta);
        const ExpansionBreakdown b = assemble(s, 1e-9);
        const cplx ratio = (b.r_value / leading_term(s)).to_complex();
        return std::abs(ratio - 1.0) * abs_eta;
    };
    const double l1 = lambda_at(60.0), l2 = lambda_at(120.0);
    CHECK(l1 > 1e-3);
    CHECK(l1 < 10.0);
    CHECK(l2 < 10.0);
}
