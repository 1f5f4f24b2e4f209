#include "gyrostab/selfcheck.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "gyrostab/simulator.hpp"

namespace gyrostab {

namespace {

struct Checker {
    SelfcheckResult result;

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++result.passed;
        } else {
            ++result.failed;
            result.failures.push_back(what);
        }
    }
};

Vec3 random_state(std::mt19937& rng, double box) {
    std::uniform_real_distribution<double> dist(-box, box);
    return {dist(rng), dist(rng), dist(rng)};
}

}  // namespace

SelfcheckResult run_selfcheck(const GyrostatParams& params) {
    Checker c;
    std::mt19937 rng(20240817u);
    const double box = 3.0 * std::max(1.0, norm(params.mu()));

    // Flow is orthogonal to both integral gradients.
    {
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            const BodyState s{random_state(rng, box)};
            const Vec3 f = rhs(params, s);
            const auto [g1, g2] = gradients(params, s);
            const double scale = std::max(1.0, norm(f) * (norm(g1) + norm(g2)));
            if (std::fabs(dot(f, g1)) > 1e-12 * scale ||
                std::fabs(dot(f, g2)) > 1e-12 * scale)
                ok = false;
        }
        c.check(ok, "rhs orthogonal to grad F1 and grad F2");
    }

    // Auxiliary-form equivalence: N x I^{-1}N + a x N equals the momentum rhs.
    {
        bool ok = true;
        const Vec3 a = to_auxiliary_form(params);
        for (int i = 0; i < 200; ++i) {
            const BodyState s{random_state(rng, box)};
            const Vec3 n = shift_state(params, s);
            const Vec3 rhs_n =
                cross(n, params.inertia().apply_inverse(n)) + cross(n, a);
            const Vec3 diff = rhs_n - rhs(params, s);
            if (norm(diff) > 1e-12 * std::max(1.0, params.residual_scale(s.m) * norm(s.m)))
                ok = false;
        }
        c.check(ok, "auxiliary-form rhs equivalence");
    }

    // Every materialized family point is an equilibrium with a rank-deficient
    // integral Jacobian.
    {
        bool eq_ok = true, rank_ok = true;
        for (const auto& fam : enumerate_families(params)) {
            for (double p : {-4.0, -1.0, -0.37, 0.0, 0.2, 1.0, 3.5}) {
                Equilibrium e;
                try {
                    e = family_point(params, fam, p);
                } catch (const std::invalid_argument&) {
                    continue;  // pole or invalid parameter
                }
                if (!is_equilibrium(params, e.point)) eq_ok = false;
                const auto [g1, g2] = gradients(params, e.point);
                const double gscale = std::max(1.0, norm(g1) + norm(g2));
                if (integral_jacobian_rank_defect(params, e.point) > 1e-10 * gscale)
                    rank_ok = false;
                if (!fam.has_parameter()) break;
            }
        }
        c.check(eq_ok, "family points satisfy rhs = 0");
        c.check(rank_ok, "rank defect vanishes at family points");
    }

    // M2(lambda) -> M1 in the large-lambda limit.
    {
        const Equilibrium far = family_point(params, {FamilyTag::M2}, 1e6);
        const Vec3 m1 = -params.mu();
        c.check(norm(far.point.m - m1) <= 1e-5 * std::max(1.0, norm(params.mu())),
                "M2 family closes onto M1 for large lambda");
    }

    // Short conservation run.
    {
        const BodyState init{random_state(rng, box)};
        const Trajectory t = integrate(params, init, 1e-3, 10.0);
        c.check(t.drift() <= 1e-8, "conservation drift within bound");
    }

    const AxisAlignment al = params.axis_alignment();
    const bool aligned = al == AxisAlignment::Axis1 || al == AxisAlignment::Axis2 ||
                         al == AxisAlignment::Axis3;

    if (aligned) {
        const int axis = params.aligned_axis();
        const double mu_scale = std::max(1.0, norm(params.mu()));

        // Reduction reproduces both level equations for admissible x.
        {
            bool ok = true;
            std::uniform_real_distribution<double> xdist(-2.0 * mu_scale, 2.0 * mu_scale);
            std::uniform_real_distribution<double> qdist(-4.0 * mu_scale, 4.0 * mu_scale);
            int tested = 0;
            for (int i = 0; i < 4000 && tested < 500; ++i) {
                const Equilibrium e =
                    family_point(params, {FamilyTag::M12Axis, axis}, qdist(rng));
                const ReducedSystem red = reduce_level_system(params, e);
                const double x = xdist(rng);
                if (red.u.eval(x) < 0.0 || red.v.eval(x) < 0.0) continue;
                ++tested;
                const BodyState s = red.reconstruct(x, 1.0, -1.0);
                const double scale =
                    std::max(1.0, std::fabs(f1(params, e.point)) + std::fabs(f2(params, e.point)));
                if (std::fabs(f1(params, s) - f1(params, e.point)) > 1e-10 * scale ||
                    std::fabs(f2(params, s) - f2(params, e.point)) > 1e-10 * scale)
                    ok = false;
            }
            c.check(ok && tested > 0, "reduced system reproduces the level equations");
        }

        // Route agreement on a q-sweep of the merged on-axis family.
        {
            bool iso_agree = true, spec_agree = true, invariants = true;
            for (int i = 0; i < 201; ++i) {
                const double q = -5.0 * mu_scale + i * (10.0 * mu_scale / 200.0);
                const Equilibrium e = family_point(params, {FamilyTag::M12Axis, axis}, q);
                const StabilityReport rep = synthesize(params, e);
                if (!report_invariants_hold(rep)) invariants = false;
                if (rep.closed_form == ClosedForm::BoundaryWithinTolerance ||
                    rep.singular_case)
                    continue;
                const bool cf_stable = rep.closed_form == ClosedForm::StableWrtF1F2;
                if (cf_stable != (rep.isolation.verdict == Isolation::Isolated))
                    iso_agree = false;
                if (cf_stable && rep.spectral.verdict == Spectral::SpectrallyUnstable)
                    spec_agree = false;
                if (!cf_stable &&
                    rep.spectral.verdict != Spectral::SpectrallyUnstable)
                    spec_agree = false;
            }
            c.check(iso_agree, "closed form agrees with sign analysis on the sweep");
            c.check(spec_agree, "closed form agrees with the spectrum on the sweep");
            c.check(invariants, "report invariants hold on the sweep");
        }
    }

    return c.result;
}

}  // namespace gyrostab
