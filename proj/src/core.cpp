#include "gyrostab/core.hpp"

#include <cmath>

namespace gyrostab {

InertiaSpectrum::InertiaSpectrum(double i1, double i2, double i3)
    : i1_(i1), i2_(i2), i3_(i3) {
    if (!(std::isfinite(i1) && std::isfinite(i2) && std::isfinite(i3)))
        throw std::invalid_argument("inertia moments must be finite");
    if (!(i3 > 0.0))
        throw std::invalid_argument("inertia moments must be positive");
    if (!(i1 > i2 && i2 > i3))
        throw std::invalid_argument("inertia must be strictly decreasing: i1 > i2 > i3");
}

namespace {

AxisAlignment detect_alignment(const Vec3& mu) {
    const double thresh = 1e-14 * std::max(1.0, norm(mu));
    const bool z1 = std::fabs(mu.x) <= thresh;
    const bool z2 = std::fabs(mu.y) <= thresh;
    const bool z3 = std::fabs(mu.z) <= thresh;
    if (z1 && z2 && z3) return AxisAlignment::Zero;
    if (!z1 && z2 && z3) return AxisAlignment::Axis1;
    if (z1 && !z2 && z3) return AxisAlignment::Axis2;
    if (z1 && z2 && !z3) return AxisAlignment::Axis3;
    return AxisAlignment::None;
}

}  // namespace

GyrostatParams::GyrostatParams(InertiaSpectrum inertia, Vec3 mu)
    : inertia_(inertia), mu_(mu), alignment_(detect_alignment(mu)) {
    if (!finite(mu)) throw std::invalid_argument("gyrostatic moment must be finite");
}

int GyrostatParams::aligned_axis() const {
    switch (alignment_) {
        case AxisAlignment::Axis1: return 0;
        case AxisAlignment::Axis2: return 1;
        case AxisAlignment::Axis3: return 2;
        default:
            throw std::logic_error("mu is not aligned with a single axis");
    }
}

double GyrostatParams::residual_scale(const Vec3& m) const {
    return (norm(mu_) + norm(m)) / inertia_.i3();
}

Vec3 rhs(const GyrostatParams& params, const BodyState& state) {
    return cross(state.m + params.mu(), params.inertia().apply_inverse(state.m));
}

double f1(const GyrostatParams& params, const BodyState& state) {
    return 0.5 * dot(state.m, params.inertia().apply_inverse(state.m));
}

double f2(const GyrostatParams& params, const BodyState& state) {
    const Vec3 n = state.m + params.mu();
    return 0.5 * dot(n, n);
}

ConservedPair conserved(const GyrostatParams& params, const BodyState& state) {
    return {f1(params, state), f2(params, state)};
}

Vec3 omega_from_momentum(const GyrostatParams& params, const BodyState& state) {
    return params.inertia().apply_inverse(state.m);
}

BodyState momentum_from_omega(const GyrostatParams& params, const Vec3& omega) {
    return {params.inertia().apply(omega)};
}

Vec3 to_auxiliary_form(const GyrostatParams& params) {
    return -params.inertia().apply_inverse(params.mu());
}

Vec3 shift_state(const GyrostatParams& params, const BodyState& state) {
    return state.m + params.mu();
}

std::pair<Vec3, Vec3> gradients(const GyrostatParams& params, const BodyState& state) {
    return {params.inertia().apply_inverse(state.m), state.m + params.mu()};
}

}  // namespace gyrostab
