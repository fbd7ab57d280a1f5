#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "birefsim/planewave.hpp"

using namespace birefsim;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("crystal medium accessors and invariants") {
    const CrystalMedium m{1.225, 1.375};
    CHECK(m.mean_index() == doctest::Approx(1.30).epsilon(1e-14));
    CHECK(m.birefringence() == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(m.width() == 1.0);
    CHECK(m.wavenumber_ordinary(2.0) == doctest::Approx(2.45));
    CHECK(m.phase_difference(10.0) == doctest::Approx(1.5).epsilon(1e-12));

    CHECK_THROWS_AS(CrystalMedium(0.9, 1.2), domain_error);   // n_o < 1
    CHECK_THROWS_AS(CrystalMedium(1.2, 0.9), domain_error);   // n_e < 1
    CHECK_THROWS_AS(CrystalMedium(1.3, 1.2), domain_error);   // dn < 0
    CHECK_THROWS_AS(CrystalMedium(1.2, 1.2), domain_error);   // dn = 0
    CHECK_THROWS_AS(CrystalMedium(1.2, 1.3, 0.0), domain_error);
    CHECK_THROWS_AS(CrystalMedium(1.2, 1.3, -1.0), domain_error);
}

TEST_CASE("filter angle canonicalization") {
    CHECK(FilterSetting(0.0).angle() == 0.0);
    CHECK(FilterSetting(0.3).angle() == 0.3);
    CHECK(FilterSetting(2.0 * pi + 0.1).angle() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(FilterSetting(-0.1).angle() == doctest::Approx(2.0 * pi - 0.1).epsilon(1e-14));
    CHECK(FilterSetting(-6.0 * pi).angle() >= 0.0);
    CHECK(FilterSetting(-6.0 * pi).angle() < 2.0 * pi);
    CHECK_THROWS_AS(FilterSetting(std::nan("")), domain_error);
}

TEST_CASE("fresnel reflectance") {
    CHECK(fresnel_reflectance(1.0, 1.0) == 0.0);
    CHECK(fresnel_reflectance(1.0, 1.25) ==
          doctest::Approx(0.012345679012345678).epsilon(1e-12));
    // hand evaluation of |(1 - 1.3)/(1 + 1.3)|^2
    CHECK(fresnel_reflectance(1.0, 1.30) ==
          doctest::Approx(0.017013232514177693).epsilon(1e-12));
    CHECK(fresnel_reflectance(1.3, 1.0) == fresnel_reflectance(1.0, 1.3)); // symmetric
    CHECK_THROWS_AS(fresnel_reflectance(0.0, 1.2), domain_error);
    CHECK_THROWS_AS(fresnel_reflectance(1.2, -1.0), domain_error);
}

TEST_CASE("filtered amplitude at the marked points") {
    CHECK(std::abs(filtered_amplitude(0.25 * pi, pi)) < 1e-12);    // half waveplate zero
    CHECK(std::abs(filtered_amplitude(0.75 * pi, 0.0)) < 1e-12);   // second family zero

    const auto aligned = filtered_amplitude(0.0, 1.234);
    CHECK(aligned.real() == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-15));
    CHECK(aligned.imag() == 0.0);

    const auto constructive = filtered_amplitude(0.25 * pi, 0.0);
    CHECK(std::abs(constructive - std::complex<double>{1.0, 0.0}) < 1e-15);
}

TEST_CASE("modulus and phase") {
    const auto p = modulus_and_phase(0.25 * pi, 0.5 * pi);
    CHECK(p.modulus == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(p.modulus == doctest::Approx(std::abs(p.z)).epsilon(1e-12)); // both routes agree
    CHECK_FALSE(p.singular);

    const auto aligned = modulus_and_phase(0.0, -3.7);
    CHECK(aligned.modulus == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-15));
    CHECK(aligned.chi == 0.0);

    const auto zero = modulus_and_phase(0.25 * pi, pi);
    CHECK(zero.singular);
    CHECK(zero.modulus < 1e-7);
}

TEST_CASE("closed-form modulus matches the complex route on random points") {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> ub(0.0, 2.0 * pi), uu(-20.0, 20.0);
    for (int i = 0; i < 10000; ++i) {
        const double beta = ub(rng), dkd = uu(rng);
        const double m2 = std::norm(filtered_amplitude(beta, dkd));
        const double closed = 0.5 * (1.0 + std::sin(2.0 * beta) * std::cos(dkd));
        CHECK(std::abs(m2 - closed) <= 1e-12);
        CHECK(std::sqrt(m2) <= 1.0 + 1e-15);
    }
}

TEST_CASE("periodicity in dkd without argument reduction") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ub(0.0, 2.0 * pi), uu(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double beta = ub(rng), dkd = uu(rng);
        CHECK(std::abs(filtered_amplitude(beta, dkd + 2.0 * pi) -
                       filtered_amplitude(beta, dkd)) <= 1e-12);
    }
}

TEST_CASE("argument of z agrees with the closed-form arctan modulo pi") {
    for (double beta = 0.05; beta < pi; beta += 0.083) {
        for (double dkd = -6.0; dkd < 6.0; dkd += 0.147) {
            const double denom = std::cos(dkd) + 1.0 / std::tan(beta);
            const auto p = modulus_and_phase(beta, dkd);
            if (p.singular || p.modulus < 1e-3 || std::abs(denom) < 1e-6) continue;
            const double arctan_form = std::atan(std::sin(dkd) / denom);
            CHECK(std::abs(std::remainder(p.chi - arctan_form, pi)) < 1e-10);
        }
    }
}

TEST_CASE("zero points enumeration") {
    SUBCASE("window covering one period") {
        const auto pts = zero_points({0.0, pi, 0.0, 2.0 * pi});
        REQUIRE(pts.size() == 3);
        CHECK(pts[0].beta == doctest::Approx(0.25 * pi).epsilon(1e-15));
        CHECK(pts[0].dkd == doctest::Approx(pi).epsilon(1e-15));
        CHECK(pts[1].beta == doctest::Approx(0.75 * pi).epsilon(1e-15));
        CHECK(pts[1].dkd == 0.0);
        CHECK(pts[2].beta == doctest::Approx(0.75 * pi).epsilon(1e-15));
        CHECK(pts[2].dkd == doctest::Approx(2.0 * pi).epsilon(1e-15));
    }
    SUBCASE("window around a higher waveplate order") {
        const auto pts = zero_points({0.2 * pi, 0.3 * pi, 2.0 * pi, 4.0 * pi});
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].beta == doctest::Approx(0.25 * pi).epsilon(1e-15));
        CHECK(pts[0].dkd == doctest::Approx(3.0 * pi).epsilon(1e-15));
    }
    SUBCASE("window missing both families") {
        CHECK(zero_points({0.3 * pi, 0.5 * pi, 2.0 * pi, 4.0 * pi}).empty());
    }
    SUBCASE("empty window") {
        CHECK(zero_points({1.0, 0.0, 0.0, 1.0}).empty());
    }
    SUBCASE("negative beta branch") {
        const auto pts = zero_points({-pi, 0.0, -0.5, 0.5});
        REQUIRE(pts.size() == 1); // beta = -pi/4 is the 3pi/4 family shifted down
        CHECK(pts[0].beta == doctest::Approx(-0.25 * pi).epsilon(1e-15));
        CHECK(pts[0].dkd == 0.0);
    }
    SUBCASE("non-finite window rejected") {
        CHECK_THROWS_AS(zero_points({0.0, std::nan(""), 0.0, 1.0}), domain_error);
    }
}

TEST_CASE("every enumerated zero has vanishing amplitude and unit winding") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> off(-8.0, 8.0);
    for (int i = 0; i < 50; ++i) {
        const double b0 = off(rng), u0 = off(rng);
        for (const auto& p : zero_points({b0, b0 + 5.0, u0, u0 + 9.0})) {
            CHECK(std::abs(filtered_amplitude(p.beta, p.dkd)) < 1e-12);
            CHECK(std::abs(phase_winding(p, 0.05, 64)) == 1);
        }
    }
}

TEST_CASE("phase winding around amplitude zeros") {
    const int w_half = phase_winding({0.25 * pi, pi}, 0.05, 256);
    const int w_other = phase_winding({0.75 * pi, 0.0}, 0.05, 256);
    const int w_period = phase_winding({0.75 * pi, 2.0 * pi}, 0.05, 256);
    CHECK(std::abs(w_half) == 1);
    CHECK(std::abs(w_other) == 1);
    CHECK(w_other == -w_half);      // the two families wind oppositely
    CHECK(w_period == w_other);

    CHECK(phase_winding({0.10 * pi, 0.30 * pi}, 0.05, 256) == 0);
    CHECK(phase_winding({0.5, 2.0}, 0.08, 64) == 0);

    // minimum sample count still resolves the winding
    CHECK(std::abs(phase_winding({0.25 * pi, pi}, 0.05, 16)) == 1);
}

TEST_CASE("phase winding error paths") {
    CHECK_THROWS_AS(phase_winding({0.25 * pi, pi}, 0.05, 8), domain_error);
    CHECK_THROWS_AS(phase_winding({0.25 * pi, pi}, 0.0, 64), domain_error);
    // loop glued to the zero: every sample sits below the amplitude tolerance
    CHECK_THROWS_AS(phase_winding({0.25 * pi, pi}, 1e-13, 64), singularity_error);
}

TEST_CASE("monochromatic field branches join continuously at the slab faces") {
    const CrystalMedium m{1.225, 1.375};
    for (double omega : {2.0, 7.5, 20.94}) {
        for (double t : {-1.0, 0.4, 3.0}) {
            const auto l0 = monochromatic_field(Region::before, omega, 0.0, t, m, 0.3);
            const auto r0 = monochromatic_field(Region::inside, omega, 0.0, t, m, 0.3);
            CHECK(std::abs(l0 - r0) < 1e-13);
            const auto l1 = monochromatic_field(Region::inside, omega, m.width(), t, m, 0.3);
            const auto r1 = monochromatic_field(Region::after, omega, m.width(), t, m, 0.3);
            CHECK(std::abs(l1 - r1) < 1e-13);
        }
    }
}

TEST_CASE("filtered monochromatic amplitude after the slab has modulus |z|") {
    // downstream of the crystal the field is z times a unit-modulus carrier
    const CrystalMedium m{1.225, 1.375};
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uo(0.5, 30.0), ub(0.0, 2.0 * pi);
    for (int i = 0; i < 200; ++i) {
        const double omega = uo(rng), beta = ub(rng);
        const auto field = monochromatic_field(omega, 2.5, 0.7, m, beta);
        const auto z = filtered_amplitude(beta, m.phase_difference(omega));
        CHECK(std::abs(field) == doctest::Approx(std::abs(z)).epsilon(1e-12));
    }
}
