#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rsaux/errors.hpp"
#include "rsaux/special_functions.hpp"

using namespace rsaux;

TEST_CASE("log_gamma at exact classical values") {
    CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
    CHECK(log_gamma({0.5, 0.0}).real() == doctest::Approx(0.5 * std::log(pi)).epsilon(1e-14));
    CHECK(std::abs(log_gamma({0.5, 0.0}).imag()) < 1e-15);
    CHECK(log_gamma({5.0, 0.0}).real() == doctest::Approx(std::log(24.0)).epsilon(1e-14));
}

TEST_CASE("log_gamma throws at nonpositive integers") {
    CHECK_THROWS_AS(log_gamma({0.0, 0.0}), pole_error);
    CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), pole_error);
}

TEST_CASE("log_gamma matches tgamma on the positive axis") {
    for (double x = 0.25; x < 20.0; x += 0.375) {
        const double expected = std::lgamma(x);
        CHECK(log_gamma({x, 0.0}).real() == doctest::Approx(expected).epsilon(5e-14));
    }
}

TEST_CASE("log_gamma recurrence log G(z+1) = Log z + log G(z)") {
    oracles::Rng rng(42);
    int checked = 0;
    while (checked < 200) {
        cplx z = rng.in_rect(-30.0, 30.0, -30.0, 30.0);
        if (std::abs(z) > 30.0) continue;
        if (z.real() < 0.5 && std::fabs(z.imag()) < 0.1) continue;   // stay off the cut
        const cplx lhs = log_gamma(z + 1.0);
        const cplx rhs = std::log(z) + log_gamma(z);
        CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(rhs)));
        ++checked;
    }
}

TEST_CASE("exp(log_gamma) has small relative error out to |z| = 50") {
    // double-argument duplication: G(2z) = G(z) G(z+1/2) 2^{2z-1} / sqrt(pi)
    oracles::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        cplx z = rng.in_rect(0.5, 24.0, -24.0, 24.0);
        const cplx lhs = log_gamma(2.0 * z);
        const cplx rhs = log_gamma(z) + log_gamma(z + 0.5)
            + (2.0 * z - 1.0) * std::log(2.0) - 0.5 * std::log(pi);
        // compare exp-side relative error without overflowing: |e^d - 1| ~ |d|
        cplx d = lhs - rhs;
        d = {d.real(), std::remainder(d.imag(), 2.0 * pi)};
        CHECK(std::abs(d) < 1e-12);
    }
}

TEST_CASE("chi at the functional-equation symmetry point and its zeros/poles") {
    CHECK(std::abs(chi({0.5, 0.0}).to_complex() - cplx(1.0, 0.0)) < 1e-13);
    CHECK(chi({-2.0, 0.0}).is_zero());
    CHECK(chi({0.0, 0.0}).is_zero());
    CHECK(chi({-40.0, 0.0}).is_zero());
    CHECK_THROWS_AS(chi({1.0, 0.0}), pole_error);
    CHECK_THROWS_AS(chi({3.0, 0.0}), pole_error);
}

TEST_CASE("chi(2) = zeta(2)/zeta(-1) against the alternating-series oracle") {
    const cplx expected = oracles::zeta_cvz({2.0, 0.0}) / oracles::zeta_cvz({-1.0, 0.0});
    const cplx got = chi({2.0, 0.0}).to_complex();
    CHECK(std::abs(got - expected) <= 1e-10 * std::abs(expected));
    CHECK(got.real() == doctest::Approx(-2.0 * pi * pi).epsilon(1e-12));
}

TEST_CASE("chi(s) chi(1-s) = 1") {
    oracles::Rng rng(11);
    int checked = 0;
    while (checked < 100) {
        cplx s = rng.in_rect(-20.0, 21.0, -40.0, 40.0);
        if (std::fabs(s.imag()) < 0.2) continue;   // keep clear of poles and zeros
        const ExtComplex prod = chi(s) * chi(1.0 - s);
        CHECK(std::fabs(prod.log_modulus) < 1e-9);
        CHECK(std::fabs(prod.phase) < 1e-9);
        ++checked;
    }
}

TEST_CASE("zeta_dirichlet basics") {
    CHECK_THROWS_AS(zeta_dirichlet({1.9, 0.0}), domain_error);
    CHECK(std::fabs(zeta_dirichlet({200.0, 0.0}).real() - 1.0) <= std::pow(2.0, -190.0));
    const double z12 = 691.0 * std::pow(pi, 12.0) / 638512875.0;
    CHECK(zeta_dirichlet({12.0, 0.0}, 1e-15).real() == doctest::Approx(z12).epsilon(1e-13));

    oracles::Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const cplx z = rng.in_rect(2.0, 12.0, -50.0, 50.0);
        const cplx a = zeta_dirichlet(std::conj(z));
        const cplx b = std::conj(zeta_dirichlet(z));
        CHECK(std::abs(a - b) < 1e-15 * std::abs(a));
    }
}

TEST_CASE("zeta_reference classical values and pole") {
    CHECK(zeta_reference({0.0, 0.0}).real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(zeta_reference({-1.0, 0.0}).real() == doctest::Approx(-1.0 / 12.0).epsilon(1e-12));
    CHECK(zeta_reference({0.5, 0.0}).real()
          == doctest::Approx(-1.4603545088095868).epsilon(1e-12));
    CHECK(std::abs(zeta_reference({-4.0, 0.0})) == 0.0);
    CHECK_THROWS_AS(zeta_reference({1.0, 0.0}), pole_error);
}

TEST_CASE("zeta_reference against the alternating-series oracle") {
    oracles::Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        const cplx z = rng.in_rect(-2.5, 20.0, -30.0, 30.0);
        if (std::abs(z - cplx(1.0, 0.0)) < 0.3) continue;
        const cplx ref = zeta_reference(z);
        const cplx cvz = oracles::zeta_cvz(z);
        CHECK(std::abs(ref - cvz) <= 1e-10 * std::max(1.0, std::abs(cvz)));
    }
    // larger heights, Dirichlet-dominated
    for (int i = 0; i < 20; ++i) {
        const cplx z = rng.in_rect(2.0, 30.0, -100.0, 100.0);
        const cplx ref = zeta_reference(z);
        const cplx dir = zeta_dirichlet(z, 1e-14);
        CHECK(std::abs(ref - dir) <= 1e-10 * std::abs(dir));
    }
}

TEST_CASE("zeta_em_tail subtracts the partial sum without cancellation") {
    const cplx z(3.0, 4.0);
    cplx partial(0.0, 0.0);
    for (long n = 1; n <= 7; ++n) partial += std::exp(-z * std::log((double)n));
    const cplx direct = zeta_reference(z) - partial;
    CHECK(std::abs(zeta_em_tail(z, 7) - direct) < 1e-12);
    CHECK(std::abs(zeta_em_tail(z, 0) - zeta_reference(z)) < 1e-14);
    CHECK_THROWS_AS(zeta_em_tail({-1.0, 0.0}, 3), domain_error);
}

TEST_CASE("ExtComplex round trip") {
    oracles::Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        const cplx z = std::polar(std::exp(rng.uniform(-600.0, 600.0)),
                                  rng.uniform(-pi, pi));
        const cplx back = ExtComplex::from_complex(z).to_complex();
        CHECK(std::abs(back - z) <= 1e-14 * std::abs(z));
    }
    CHECK(ExtComplex::zero().to_complex() == cplx(0.0, 0.0));
    CHECK(ExtComplex::from_complex({0.0, 0.0}).is_zero());
}

TEST_CASE("ExtComplex multiplication chains stay associative") {
    oracles::Rng rng(29);
    std::vector<ExtComplex> factors;
    for (int i = 0; i < 100; ++i) {
        factors.push_back(ExtComplex::from_polar(rng.uniform(-50.0, 50.0),
                                                 rng.uniform(-pi, pi)));
    }
    ExtComplex fwd = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) fwd = fwd * factors[i];
    ExtComplex bwd = factors.back();
    for (std::size_t i = factors.size() - 1; i-- > 0;) bwd = factors[i] * bwd;
    CHECK(std::fabs(fwd.log_modulus - bwd.log_modulus)
          <= 1e-12 * std::max(1.0, std::fabs(fwd.log_modulus)));
    CHECK(std::fabs(wrap_phase(fwd.phase - bwd.phase)) <= 1e-12);
}
