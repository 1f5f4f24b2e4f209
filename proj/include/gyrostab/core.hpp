#pragma once

/**
 * Gyrostat model: parameters, state, right-hand side and the two first
 * integrals.
 *
 * The dynamical variable is the body-frame angular momentum M with
 *     dM/dt = (M + mu) x I^{-1} M,
 * where I = diag(I1, I2, I3), I1 > I2 > I3 > 0, and mu is the constant
 * gyrostatic moment of the internal rotor.  Conserved along every
 * trajectory:
 *     F1 = 1/2 M . I^{-1} M        (kinetic-energy type)
 *     F2 = 1/2 (M + mu).(M + mu)   (shifted momentum norm)
 */

#include <stdexcept>
#include <utility>

#include "gyrostab/vec3.hpp"

namespace gyrostab {

/// Principal moments of inertia, strictly ordered i1 > i2 > i3 > 0.
class InertiaSpectrum {
public:
    InertiaSpectrum(double i1, double i2, double i3);

    double i1() const { return i1_; }
    double i2() const { return i2_; }
    double i3() const { return i3_; }

    /// Moment along axis k, k in {0,1,2}.
    double moment(int k) const { return k == 0 ? i1_ : (k == 1 ? i2_ : i3_); }

    Vec3 apply(const Vec3& v) const { return {i1_ * v.x, i2_ * v.y, i3_ * v.z}; }
    Vec3 apply_inverse(const Vec3& v) const { return {v.x / i1_, v.y / i2_, v.z / i3_}; }

private:
    double i1_, i2_, i3_;
};

/// Which single component of mu is nonzero, if any.
enum class AxisAlignment { Axis1, Axis2, Axis3, None, Zero };

class GyrostatParams {
public:
    GyrostatParams(InertiaSpectrum inertia, Vec3 mu);

    const InertiaSpectrum& inertia() const { return inertia_; }
    const Vec3& mu() const { return mu_; }
    AxisAlignment axis_alignment() const { return alignment_; }

    /// 0-based aligned axis index; requires Axis1/Axis2/Axis3 alignment.
    int aligned_axis() const;

    /// Natural residual scale near a state M (used to normalize rhs norms).
    double residual_scale(const Vec3& m) const;

private:
    InertiaSpectrum inertia_;
    Vec3 mu_;
    AxisAlignment alignment_;
};

/// Body-frame angular momentum state.
struct BodyState {
    Vec3 m;
};

struct ConservedPair {
    double f1 = 0.0;
    double f2 = 0.0;
};

/// dM/dt = (M + mu) x I^{-1} M
Vec3 rhs(const GyrostatParams& params, const BodyState& state);

double f1(const GyrostatParams& params, const BodyState& state);
double f2(const GyrostatParams& params, const BodyState& state);
ConservedPair conserved(const GyrostatParams& params, const BodyState& state);

Vec3 omega_from_momentum(const GyrostatParams& params, const BodyState& state);
BodyState momentum_from_omega(const GyrostatParams& params, const Vec3& omega);

/// Drift vector a = -I^{-1} mu of the auxiliary form
/// dN/dt = N x I^{-1} N + a x N obtained by the shift N = M + mu.
Vec3 to_auxiliary_form(const GyrostatParams& params);
Vec3 shift_state(const GyrostatParams& params, const BodyState& state);

/// (grad F1, grad F2) = (I^{-1} M, M + mu)
std::pair<Vec3, Vec3> gradients(const GyrostatParams& params, const BodyState& state);

}  // namespace gyrostab
