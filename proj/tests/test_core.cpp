#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gyrostab/core.hpp"

using namespace gyrostab;

namespace {

GyrostatParams reference() {
    return GyrostatParams(InertiaSpectrum(3.0, 2.0, 1.0), {1.0, 0.0, 0.0});
}

}  // namespace

TEST_CASE("inertia spectrum enforces strict ordering") {
    CHECK_NOTHROW(InertiaSpectrum(3.0, 2.0, 1.0));
    CHECK_THROWS_AS(InertiaSpectrum(1.0, 2.0, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(InertiaSpectrum(3.0, 3.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(InertiaSpectrum(3.0, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(InertiaSpectrum(3.0, 2.0, -1.0), std::invalid_argument);
}

TEST_CASE("axis alignment detection") {
    const InertiaSpectrum I(3.0, 2.0, 1.0);
    CHECK(GyrostatParams(I, {1.0, 0.0, 0.0}).axis_alignment() == AxisAlignment::Axis1);
    CHECK(GyrostatParams(I, {0.0, -2.0, 0.0}).axis_alignment() == AxisAlignment::Axis2);
    CHECK(GyrostatParams(I, {0.0, 0.0, 0.5}).axis_alignment() == AxisAlignment::Axis3);
    CHECK(GyrostatParams(I, {1.0, 1.0, 0.0}).axis_alignment() == AxisAlignment::None);
    CHECK(GyrostatParams(I, {0.0, 0.0, 0.0}).axis_alignment() == AxisAlignment::Zero);
    CHECK(GyrostatParams(I, {1.0, 1e-15, 0.0}).axis_alignment() == AxisAlignment::Axis1);
    CHECK(GyrostatParams(I, {0.0, 1.0, 0.0}).aligned_axis() == 1);
}

TEST_CASE("rhs spot value") {
    const auto p = reference();
    const Vec3 f = rhs(p, {{0.0, 1.0, 0.0}});
    CHECK(f.x == doctest::Approx(0.0));
    CHECK(f.y == doctest::Approx(0.0));
    CHECK(f.z == doctest::Approx(0.5));
}

TEST_CASE("first integral spot values") {
    const auto p = reference();
    const BodyState s{{0.0, 1.0, 0.0}};
    CHECK(f1(p, s) == doctest::Approx(0.25));
    CHECK(f2(p, s) == doctest::Approx(1.0));
    const ConservedPair c = conserved(p, s);
    CHECK(c.f1 == doctest::Approx(0.25));
    CHECK(c.f2 == doctest::Approx(1.0));
}

TEST_CASE("rhs equals cross product of the integral gradients") {
    const auto p = reference();
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const BodyState s{{dist(rng), dist(rng), dist(rng)}};
        const auto [g1, g2] = gradients(p, s);
        const Vec3 f = rhs(p, s);
        const Vec3 diff = f - cross(g2, g1);
        CHECK(norm(diff) <= 1e-12 * std::max(1.0, norm(f)));
    }
}

TEST_CASE("rhs is orthogonal to both integral gradients") {
    const auto p = reference();
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const BodyState s{{dist(rng), dist(rng), dist(rng)}};
        const auto [g1, g2] = gradients(p, s);
        const Vec3 f = rhs(p, s);
        const double scale = std::max(1.0, norm(f) * (norm(g1) + norm(g2)));
        CHECK(std::fabs(dot(f, g1)) <= 1e-12 * scale);
        CHECK(std::fabs(dot(f, g2)) <= 1e-12 * scale);
    }
}

TEST_CASE("gradients match finite differences") {
    const auto p = reference();
    const BodyState s{{0.4, -1.1, 0.7}};
    const auto [g1, g2] = gradients(p, s);
    const double h = 1e-5;
    for (int k = 0; k < 3; ++k) {
        Vec3 e{0, 0, 0};
        e[k] = h;
        const double d1 = (f1(p, {s.m + e}) - f1(p, {s.m - e})) / (2.0 * h);
        const double d2 = (f2(p, {s.m + e}) - f2(p, {s.m - e})) / (2.0 * h);
        CHECK(d1 == doctest::Approx(g1[k]).epsilon(1e-6));
        CHECK(d2 == doctest::Approx(g2[k]).epsilon(1e-6));
    }
}

TEST_CASE("momentum / angular velocity round trip") {
    const auto p = reference();
    const BodyState s{{0.3, -0.8, 1.9}};
    const Vec3 w = omega_from_momentum(p, s);
    const BodyState back = momentum_from_omega(p, w);
    CHECK(norm(back.m - s.m) <= 1e-14);
    CHECK(w.x == doctest::Approx(0.1));
    CHECK(w.y == doctest::Approx(-0.4));
    CHECK(w.z == doctest::Approx(1.9));
}

TEST_CASE("auxiliary form matches the momentum equation") {
    const auto p = reference();
    const Vec3 a = to_auxiliary_form(p);
    CHECK(a.x == doctest::Approx(-1.0 / 3.0));
    CHECK(a.y == doctest::Approx(0.0));
    CHECK(a.z == doctest::Approx(0.0));
    std::mt19937 rng(13u);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const BodyState s{{dist(rng), dist(rng), dist(rng)}};
        const Vec3 n = shift_state(p, s);
        const Vec3 aux = cross(n, p.inertia().apply_inverse(n)) + cross(n, a);
        CHECK(norm(aux - rhs(p, s)) <= 1e-12 * std::max(1.0, norm(rhs(p, s))));
    }
}

TEST_CASE("rhs is quadratically homogeneous when mu vanishes") {
    const GyrostatParams p(InertiaSpectrum(3.0, 2.0, 1.0), {0.0, 0.0, 0.0});
    const BodyState s{{0.5, -1.0, 2.0}};
    const Vec3 f = rhs(p, s);
    const Vec3 f2x = rhs(p, {2.0 * s.m});
    CHECK(norm(f2x - 4.0 * f) <= 1e-12 * std::max(1.0, norm(f2x)));
}
