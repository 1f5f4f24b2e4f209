#pragma once

/**
 * Fixed-step RK4 trajectory integration with conservation monitoring, and
 * the invariant-set escape experiment that certifies Lyapunov instability
 * of the two singular uniform rotations.
 */

#include <optional>
#include <vector>

#include "gyrostab/classifier.hpp"

namespace gyrostab {

struct Trajectory {
    std::vector<double> times;
    std::vector<BodyState> states;
    double drift_f1 = 0.0;  // max relative deviation of F1 from its initial value
    double drift_f2 = 0.0;

    double drift() const { return drift_f1 > drift_f2 ? drift_f1 : drift_f2; }
};

struct EscapeResult {
    bool escaped = false;
    std::optional<double> escape_time;
    double max_deviation = 0.0;  // max ||M(t) - Me||
    double threshold_x = 0.0;    // turning point of the escape coordinate
};

/// One classical RK4 step of y' = f(y).
template <typename F>
Vec3 rk4_step(F&& f, const Vec3& y, double dt) {
    const Vec3 k1 = f(y);
    const Vec3 k2 = f(y + (dt / 2.0) * k1);
    const Vec3 k3 = f(y + (dt / 2.0) * k2);
    const Vec3 k4 = f(y + dt * k3);
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Integrate from `initial` to t_end with fixed step dt.  Storage is
/// decimated to at most ~1e5 points; drift is tracked on every step.
/// Throws std::runtime_error on blow-up (component > 1e12 x initial scale).
Trajectory integrate(const GyrostatParams& params, const BodyState& initial, double dt,
                     double t_end);

/// Closed-form squared rate of the on-axis escape coordinate x at a
/// singular point, as a function on the joint level set; negative values
/// indicate the inadmissible side.  Rejects non-singular equilibria.
double projected_x_rate_squared(const GyrostatParams& params, const Equilibrium& singular,
                                double x);

/// Integrate from a small on-level-set displacement of a singular point
/// (or from a plain delta-perturbation of a non-singular one) and record
/// whether the trajectory leaves the escape_radius ball around it.
EscapeResult escape_experiment(const GyrostatParams& params, const Equilibrium& eq,
                               double delta, double dt, double t_max,
                               double escape_radius);

}  // namespace gyrostab
