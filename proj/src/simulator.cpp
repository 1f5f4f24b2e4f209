#include "gyrostab/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gyrostab {

Trajectory integrate(const GyrostatParams& params, const BodyState& initial, double dt,
                     double t_end) {
    if (!(dt > 0.0) || !(t_end > 0.0))
        throw std::invalid_argument("dt and t_end must be positive");

    const auto f = [&](const Vec3& m) { return rhs(params, {m}); };
    const long nsteps = static_cast<long>(std::ceil(t_end / dt));
    const long stride = std::max<long>(1, nsteps / 100000);
    const double blowup = 1e12 * std::max(1.0, norm(initial.m) + norm(params.mu()));

    const double f1_0 = f1(params, initial);
    const double f2_0 = f2(params, initial);
    const double s1 = std::max(1.0, std::fabs(f1_0));
    const double s2 = std::max(1.0, std::fabs(f2_0));

    Trajectory traj;
    traj.times.push_back(0.0);
    traj.states.push_back(initial);

    Vec3 m = initial.m;
    for (long i = 1; i <= nsteps; ++i) {
        const double step = std::min(dt, t_end - (i - 1) * dt);
        m = rk4_step(f, m, step);
        const double t = std::min(i * dt, t_end);
        if (std::fabs(m.x) > blowup || std::fabs(m.y) > blowup || std::fabs(m.z) > blowup)
            throw std::runtime_error("integration diverged at t = " + std::to_string(t));
        traj.drift_f1 = std::max(traj.drift_f1, std::fabs(f1(params, {m}) - f1_0) / s1);
        traj.drift_f2 = std::max(traj.drift_f2, std::fabs(f2(params, {m}) - f2_0) / s2);
        if (i % stride == 0 || i == nsteps) {
            traj.times.push_back(t);
            traj.states.push_back({m});
        }
    }
    return traj;
}

namespace {

struct EscapeGeometry {
    ReducedSystem reduced;
    Quadratic gate;   // the off-axis square with a linear term; gates admissibility
    int gate_index;   // which off-axis slot the gate describes (p or r)
    double side;      // admissible sign of x near 0
    double threshold; // nonzero root of the gate quadratic
};

EscapeGeometry escape_geometry(const GyrostatParams& params, const Equilibrium& eq) {
    ReducedSystem red = reduce_level_system(params, eq);
    const double tol_u = 1e-10 * std::max({1.0, std::fabs(red.u.a), std::fabs(red.u.b)});
    const double tol_v = 1e-10 * std::max({1.0, std::fabs(red.v.a), std::fabs(red.v.b)});
    const bool u_linear = std::fabs(red.u.b) > tol_u;
    const bool v_linear = std::fabs(red.v.b) > tol_v;
    if (u_linear == v_linear)
        throw std::invalid_argument("not a singular equilibrium (no pure-quadratic branch)");
    const Quadratic gate = u_linear ? red.u : red.v;
    EscapeGeometry geo{std::move(red), gate, u_linear ? 0 : 1,
                       gate.b > 0.0 ? 1.0 : -1.0, -gate.b / gate.a};
    return geo;
}

}  // namespace

double projected_x_rate_squared(const GyrostatParams& params, const Equilibrium& singular,
                                double x) {
    if (!is_singular_point(params, singular.point))
        throw std::invalid_argument("equilibrium is not one of the singular points");

    const InertiaSpectrum& in = params.inertia();
    const double i1 = in.i1(), i2 = in.i2(), i3 = in.i3();
    if (params.axis_alignment() == AxisAlignment::Axis1) {
        const double mu1 = params.mu().x;
        return -(2.0 * x * x * x * (i1 - i2) / (i1 * i1 * i2 * i3)) *
               (0.5 * x * (i1 - i3) - i1 * (i2 - i3) * mu1 / (i1 - i2));
    }
    // Axis 3 analogue, obtained by the same projection of the momentum
    // equation onto the mu axis.
    const double mu3 = params.mu().z;
    return -(2.0 * x * x * x * (i2 - i3) / (i3 * i3 * i1 * i2)) *
           (0.5 * x * (i1 - i3) + i3 * (i1 - i2) * mu3 / (i2 - i3));
}

EscapeResult escape_experiment(const GyrostatParams& params, const Equilibrium& eq,
                               double delta, double dt, double t_max,
                               double escape_radius) {
    if (!(delta > 0.0) || !(dt > 0.0) || !(t_max > 0.0) || !(escape_radius > 0.0))
        throw std::invalid_argument("delta, dt, t_max and escape_radius must be positive");

    const Vec3 me = eq.point.m;
    Vec3 m0;
    double threshold_x = 0.0;

    if (is_singular_point(params, eq.point)) {
        const EscapeGeometry geo = escape_geometry(params, eq);
        threshold_x = geo.threshold;
        const ReducedSystem& red = geo.reduced;
        const double x0 = geo.side * delta;
        const double up = red.u.eval(x0);
        const double vp = red.v.eval(x0);
        if (up < 0.0 || vp < 0.0)
            throw std::invalid_argument("delta outside the admissible level-set branch");
        // Pick branch signs so the escape coordinate moves away from 0:
        // xdot = (1/Ir - 1/Ip) Mp Mr on the invariant set.
        const double c = 1.0 / params.inertia().moment(red.r) -
                         1.0 / params.inertia().moment(red.p);
        const double sr = (geo.side * c > 0.0) ? 1.0 : -1.0;
        m0 = red.reconstruct(x0, 1.0, sr).m;
    } else {
        // Plain perturbation; stability should keep the trajectory at the
        // scale of delta.
        const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
        m0 = me + delta * Vec3{inv_sqrt3, inv_sqrt3, inv_sqrt3};
    }

    const auto f = [&](const Vec3& m) { return rhs(params, {m}); };
    const long nsteps = static_cast<long>(std::ceil(t_max / dt));
    EscapeResult res;
    res.threshold_x = threshold_x;
    res.max_deviation = norm(m0 - me);

    Vec3 m = m0;
    for (long i = 1; i <= nsteps; ++i) {
        m = rk4_step(f, m, dt);
        const double dev = norm(m - me);
        res.max_deviation = std::max(res.max_deviation, dev);
        if (!res.escaped && dev >= escape_radius) {
            res.escaped = true;
            res.escape_time = i * dt;
        }
    }
    return res;
}

}  // namespace gyrostab
