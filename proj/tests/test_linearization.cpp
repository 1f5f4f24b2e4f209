#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gyrostab/linearization.hpp"

using namespace gyrostab;

namespace {

GyrostatParams axis1() {
    return GyrostatParams(InertiaSpectrum(3.0, 2.0, 1.0), {1.0, 0.0, 0.0});
}

Mat3 random_matrix(std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    Mat3 m;
    for (double& e : m.a) e = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("jacobian at the origin") {
    const auto p = axis1();
    const Mat3 j = jacobian_rhs(p, {{0.0, 0.0, 0.0}});
    // h -> mu x I^{-1} h = (1,0,0) x (h1/3, h2/2, h3)
    CHECK(j(1, 2) == doctest::Approx(-1.0));
    CHECK(j(2, 1) == doctest::Approx(0.5));
    CHECK(j(0, 0) == doctest::Approx(0.0));
    CHECK(j(0, 1) == doctest::Approx(0.0));
    CHECK(j(0, 2) == doctest::Approx(0.0));
    CHECK(j(1, 1) == doctest::Approx(0.0));
    CHECK(j(2, 2) == doctest::Approx(0.0));
}

TEST_CASE("jacobian matches finite differences") {
    const auto p = axis1();
    std::mt19937 rng(5u);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    const double h = 1e-6;
    for (int trial = 0; trial < 100; ++trial) {
        const Vec3 m{dist(rng), dist(rng), dist(rng)};
        const Mat3 j = jacobian_rhs(p, {m});
        for (int k = 0; k < 3; ++k) {
            Vec3 e{0, 0, 0};
            e[k] = h;
            const Vec3 col = (rhs(p, {m + e}) - rhs(p, {m - e})) / (2.0 * h);
            for (int i = 0; i < 3; ++i)
                CHECK(j(i, k) == doctest::Approx(col[i]).epsilon(1e-6));
        }
    }
}

TEST_CASE("eigenvalues of a diagonal matrix") {
    Mat3 m = Mat3::zero();
    m(0, 0) = 1.0;
    m(1, 1) = -2.0;
    m(2, 2) = 3.0;
    const auto ev = eigenvalues3(m);
    CHECK(ev[0].real() == doctest::Approx(-2.0));
    CHECK(ev[1].real() == doctest::Approx(1.0));
    CHECK(ev[2].real() == doctest::Approx(3.0));
    for (const auto& e : ev) CHECK(std::fabs(e.imag()) <= 1e-12);
}

TEST_CASE("eigenvalues of a rotation block") {
    Mat3 m = Mat3::zero();
    m(1, 2) = -1.0;
    m(2, 1) = 1.0;
    const auto ev = eigenvalues3(m);
    // {0, +i, -i}
    double max_re = 0.0, max_im = 0.0;
    for (const auto& e : ev) {
        max_re = std::max(max_re, std::fabs(e.real()));
        max_im = std::max(max_im, std::fabs(e.imag()));
    }
    CHECK(max_re <= 1e-12);
    CHECK(max_im == doctest::Approx(1.0));
}

TEST_CASE("eigenvalue invariants on random matrices") {
    std::mt19937 rng(17u);
    for (int trial = 0; trial < 200; ++trial) {
        const Mat3 m = random_matrix(rng);
        const auto ev = eigenvalues3(m);
        const auto sum = ev[0] + ev[1] + ev[2];
        const auto prod = ev[0] * ev[1] * ev[2];
        const auto pair_sum = ev[0] * ev[1] + ev[0] * ev[2] + ev[1] * ev[2];
        CHECK(sum.real() == doctest::Approx(trace(m)).epsilon(1e-8));
        CHECK(std::fabs(sum.imag()) <= 1e-8);
        CHECK(prod.real() == doctest::Approx(det(m)).epsilon(1e-7));
        CHECK(std::fabs(prod.imag()) <= 1e-7 * std::max(1.0, std::fabs(det(m))));
        CHECK(pair_sum.real() == doctest::Approx(minor_sum(m)).epsilon(1e-7));
    }
}

TEST_CASE("complex eigenvalues come in conjugate pairs") {
    std::mt19937 rng(23u);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ev = eigenvalues3(random_matrix(rng));
        double im_sum = 0.0;
        for (const auto& e : ev) im_sum += e.imag();
        CHECK(std::fabs(im_sum) <= 1e-10);
    }
}

TEST_CASE("spectral spot value on the axis-1 family") {
    const auto p = axis1();
    const Equilibrium e = family_point(p, {FamilyTag::M12Axis, 0}, -2.0);
    const SpectralVerdict v = spectral_verdict(p, e);
    CHECK(v.verdict == Spectral::SpectrallyUnstable);
    CHECK(v.max_real == doctest::Approx(1.0 / std::sqrt(18.0)).epsilon(1e-9));
}

TEST_CASE("stable family members are spectrally inconclusive") {
    const auto p = axis1();
    for (double q : {-4.0, -1.0, 0.0, 1.0, 3.0}) {
        const Equilibrium e = family_point(p, {FamilyTag::M12Axis, 0}, q);
        const SpectralVerdict v = spectral_verdict(p, e);
        CAPTURE(q);
        CHECK(v.verdict == Spectral::SpectrallyStableInconclusive);
    }
}

TEST_CASE("singular points are spectrally stable") {
    const auto p = axis1();
    const Equilibrium e = family_point(p, {FamilyTag::M12Axis, 0}, -3.0);
    CHECK(spectral_verdict(p, e).verdict == Spectral::SpectrallyStableInconclusive);
}
