#include "gyrostab/isolation.hpp"

#include <cmath>

namespace gyrostab {

const char* isolation_name(Isolation v) {
    switch (v) {
        case Isolation::Isolated: return "isolated";
        case Isolation::NotIsolated: return "not_isolated";
        case Isolation::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* case_tag_name(CaseTag t) {
    switch (t) {
        case CaseTag::I1: return "I.1";
        case CaseTag::I2: return "I.2";
        case CaseTag::I3Positive: return "I.3-positive";
        case CaseTag::I3Negative: return "I.3-negative";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
        case CaseTag::Numeric: return "numeric";
    }
    return "?";
}

BodyState ReducedSystem::reconstruct(double x, double sign_p, double sign_r) const {
    Vec3 m;
    m[axis] = base.point.m[axis] + x;
    m[p] = sign_p * std::sqrt(std::max(0.0, u.eval(x)));
    m[r] = sign_r * std::sqrt(std::max(0.0, v.eval(x)));
    return {m};
}

ReducedSystem reduce_level_system(const GyrostatParams& params, const Equilibrium& eq) {
    const AxisAlignment al = params.axis_alignment();
    if (al != AxisAlignment::Axis1 && al != AxisAlignment::Axis2 && al != AxisAlignment::Axis3)
        throw std::invalid_argument(
            "level-set reduction requires mu along exactly one principal axis; "
            "use the numeric sampling oracle instead");

    const int k = params.aligned_axis();
    const int p = (k == 0) ? 1 : 0;
    const int r = (k == 2) ? 1 : 2;

    const InertiaSpectrum& in = params.inertia();
    const double ik = in.moment(k), ip = in.moment(p), ir = in.moment(r);
    const Vec3& me = eq.point.m;
    const double mk = me[k], mp = me[p], mr = me[r];
    const double muk = params.mu()[k];

    // Level equations in x = M_k - mk, with w = Mp^2, s = Mr^2:
    //   w/ip + s/ir = A(x),  w + s = B(x)
    const Quadratic A{-1.0 / ik, -2.0 * mk / ik, mp * mp / ip + mr * mr / ir};
    const Quadratic B{-1.0, -2.0 * (mk + muk), mp * mp + mr * mr};

    // Cramer elimination; determinant 1/ip - 1/ir is nonzero by strict
    // inertia ordering.
    const double d = 1.0 / ip - 1.0 / ir;
    Quadratic u, v;
    u.a = (A.a - B.a / ir) / d;
    u.b = (A.b - B.b / ir) / d;
    u.c = (A.c - B.c / ir) / d;
    v.a = (B.a / ip - A.a) / d;
    v.b = (B.b / ip - A.b) / d;
    v.c = (B.c / ip - A.c) / d;

    return ReducedSystem{params, eq, k, p, r, u, v};
}

namespace {

double coeff_threshold(const Quadratic& q) {
    return 1e-12 * std::max({1.0, std::fabs(q.a), std::fabs(q.b), std::fabs(q.c)});
}

// Is q(x) >= 0 for all sufficiently small |x| on side s (s = +1 or -1)?
// Decided by the first significant coefficient among (c, b, a); an
// identically vanishing quadratic counts as admissible.
bool nonneg_on_side(const Quadratic& q, double s) {
    const double tol = coeff_threshold(q);
    if (std::fabs(q.c) > tol) return q.c > 0.0;
    if (std::fabs(q.b) > tol) return q.b * s > 0.0;
    if (std::fabs(q.a) > tol) return q.a > 0.0;
    return true;
}

bool degenerate_linear(const Quadratic& q) {
    return std::fabs(q.b) <= coeff_threshold(q) && std::fabs(q.c) <= coeff_threshold(q);
}

}  // namespace

IsolationVerdict sign_analysis(const ReducedSystem& red) {
    IsolationVerdict out;

    const bool plus_ok = nonneg_on_side(red.u, +1.0) && nonneg_on_side(red.v, +1.0);
    const bool minus_ok = nonneg_on_side(red.u, -1.0) && nonneg_on_side(red.v, -1.0);
    const bool not_isolated = plus_ok || minus_ok;

    const double mpe = red.base.point.m[red.p];
    const double mre = red.base.point.m[red.r];
    const double off_scale = 1e-12 * std::max(1.0, norm(red.base.point.m));
    const bool on_axis_base = std::fabs(mpe) <= off_scale && std::fabs(mre) <= off_scale;

    if (on_axis_base) {
        if (degenerate_linear(red.u) || degenerate_linear(red.v))
            out.case_tag = not_isolated ? CaseTag::I2 : CaseTag::I1;
        else
            out.case_tag = not_isolated ? CaseTag::I3Negative : CaseTag::I3Positive;
    } else {
        out.case_tag = not_isolated ? CaseTag::II : CaseTag::III;
    }

    if (!not_isolated) {
        out.verdict = Isolation::Isolated;
        return out;
    }

    // Concrete witness on the admissible side.
    const double side = plus_ok ? +1.0 : -1.0;
    const InertiaSpectrum& in = red.params.inertia();
    const double q_param = std::fabs(red.base.point.m[red.axis]);
    double xw = side * 1e-4 *
                std::max({1.0, q_param, norm(red.params.mu()) / (in.i1() - in.i2())});
    bool found = false;
    for (int it = 0; it < 40; ++it) {
        if (red.u.eval(xw) >= 0.0 && red.v.eval(xw) >= 0.0) {
            found = true;
            break;
        }
        xw /= 2.0;
    }
    if (!found) {
        out.verdict = Isolation::Inconclusive;
        return out;
    }

    const double sp = (std::fabs(mpe) > off_scale) ? (mpe > 0.0 ? 1.0 : -1.0) : 1.0;
    const double sr = (std::fabs(mre) > off_scale) ? (mre > 0.0 ? 1.0 : -1.0) : 1.0;
    out.verdict = Isolation::NotIsolated;
    out.witness_x = xw;
    out.witness = red.reconstruct(xw, sp, sr);
    return out;
}

namespace {

std::vector<Vec3> fibonacci_sphere(int n) {
    std::vector<Vec3> dirs;
    dirs.reserve(n);
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / n;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        dirs.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
    }
    return dirs;
}

struct LevelObjective {
    const GyrostatParams& params;
    Vec3 center;
    double f1e, f2e;

    double g(const Vec3& m) const {
        const double r1 = f1(params, {m}) - f1e;
        const double r2 = f2(params, {m}) - f2e;
        return r1 * r1 + r2 * r2;
    }
};

Vec3 project_to_sphere(const Vec3& center, double radius, const Vec3& m) {
    Vec3 d = m - center;
    const double n = norm(d);
    if (n == 0.0) d = {radius, 0.0, 0.0};
    else d = d * (radius / n);
    return center + d;
}

// Minimize g on the sphere ||m - center|| = radius from one start:
// projected-gradient burn-in followed by tangent-plane Gauss-Newton.
double minimize_on_sphere(const LevelObjective& obj, double radius, Vec3& m, int budget) {
    const int n_grad = std::max(10, (2 * budget) / 5);
    const int n_gn = std::max(10, budget - n_grad);
    double g = obj.g(m);

    for (int it = 0; it < n_grad; ++it) {
        const auto [g1, g2] = gradients(obj.params, {m});
        const double r1 = f1(obj.params, {m}) - obj.f1e;
        const double r2 = f2(obj.params, {m}) - obj.f2e;
        Vec3 grad = 2.0 * (r1 * g1 + r2 * g2);
        const Vec3 nh = (m - obj.center) / radius;
        grad = grad - dot(grad, nh) * nh;
        const double gn = norm(grad);
        if (gn == 0.0) break;
        double step = radius / gn;
        bool accepted = false;
        for (int bt = 0; bt < 30; ++bt) {
            const Vec3 cand = project_to_sphere(obj.center, radius, m - step * grad);
            const double gc = obj.g(cand);
            if (gc < g) {
                m = cand;
                g = gc;
                accepted = true;
                break;
            }
            step /= 2.0;
        }
        if (!accepted) break;
    }

    for (int it = 0; it < n_gn; ++it) {
        const Vec3 nh = (m - obj.center) / radius;
        // Tangent basis.
        Vec3 e1 = std::fabs(nh.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        e1 = e1 - dot(e1, nh) * nh;
        e1 = e1 / norm(e1);
        const Vec3 e2 = cross(nh, e1);

        const auto [g1, g2] = gradients(obj.params, {m});
        const double r1 = f1(obj.params, {m}) - obj.f1e;
        const double r2 = f2(obj.params, {m}) - obj.f2e;
        const double j11 = dot(g1, e1), j12 = dot(g1, e2);
        const double j21 = dot(g2, e1), j22 = dot(g2, e2);
        const double dt = j11 * j22 - j12 * j21;
        double t1, t2;
        const double jn = std::max({std::fabs(j11), std::fabs(j12), std::fabs(j21),
                                    std::fabs(j22), 1e-300});
        if (std::fabs(dt) > 1e-14 * jn * jn) {
            t1 = (-r1 * j22 + r2 * j12) / dt;
            t2 = (-j11 * r2 + j21 * r1) / dt;
        } else {
            // Rank-deficient: least-squares along the dominant row.
            const double nr = j11 * j11 + j12 * j12 + j21 * j21 + j22 * j22;
            if (nr == 0.0) break;
            t1 = -(r1 * j11 + r2 * j21) / nr;
            t2 = -(r1 * j12 + r2 * j22) / nr;
        }
        double alpha = 1.0;
        bool accepted = false;
        for (int bt = 0; bt < 30; ++bt) {
            const Vec3 cand = project_to_sphere(obj.center, radius,
                                                m + alpha * (t1 * e1 + t2 * e2));
            const double gc = obj.g(cand);
            if (gc < g) {
                m = cand;
                g = gc;
                accepted = true;
                break;
            }
            alpha /= 2.0;
        }
        if (!accepted) break;
    }
    return g;
}

}  // namespace

LevelSampleReport sample_level_set(const GyrostatParams& params, const Equilibrium& eq,
                                   const std::vector<double>& radii, int budget) {
    if (radii.empty()) throw std::invalid_argument("radii must be nonempty");
    for (size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) throw std::invalid_argument("radii must be positive");
        if (i > 0 && !(radii[i] < radii[i - 1]))
            throw std::invalid_argument("radii must be strictly decreasing");
    }

    const LevelObjective obj{params, eq.point.m, f1(params, eq.point), f2(params, eq.point)};
    const double level_scale = std::max(1.0, std::fabs(obj.f1e) + std::fabs(obj.f2e));
    const auto starts = fibonacci_sphere(32);

    LevelSampleReport report;
    for (double r : radii) {
        LevelSampleEntry entry;
        entry.radius = r;
        entry.min_g = std::numeric_limits<double>::infinity();
        for (const Vec3& d : starts) {
            Vec3 m = eq.point.m + r * d;
            const double g = minimize_on_sphere(obj, r, m, budget);
            if (g < entry.min_g) {
                entry.min_g = g;
                entry.argmin = m;
            }
        }
        report.per_radius.push_back(entry);
    }

    // At an isolated equilibrium the constrained minimum rides one level
    // surface while the other residual is quadratic in the radius, so
    // sqrt(min_g) scales like r^2; a non-isolated one sits at rounding level.
    const double not_isolated_cut = 1e-11 * level_scale;
    const double isolated_cut = 1e-6 * level_scale;
    bool all_tiny = true;
    bool all_large = true;
    for (const auto& e : report.per_radius) {
        const double root = std::sqrt(e.min_g);
        if (root > not_isolated_cut) all_tiny = false;
        if (root < isolated_cut * e.radius * e.radius) all_large = false;
    }
    if (all_tiny)
        report.verdict = Isolation::NotIsolated;
    else if (all_large)
        report.verdict = Isolation::Isolated;
    else
        report.verdict = Isolation::Inconclusive;
    return report;
}

}  // namespace gyrostab
