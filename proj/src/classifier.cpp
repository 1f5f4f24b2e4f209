#include "gyrostab/classifier.hpp"

#include <cmath>

namespace gyrostab {

const char* closed_form_name(ClosedForm v) {
    switch (v) {
        case ClosedForm::StableWrtF1F2: return "stable";
        case ClosedForm::NotStableWrtF1F2: return "not_stable";
        case ClosedForm::BoundaryWithinTolerance: return "boundary";
        case ClosedForm::Unsupported: return "unsupported";
    }
    return "?";
}

const char* lyapunov_name(Lyapunov v) {
    switch (v) {
        case Lyapunov::Stable: return "stable";
        case Lyapunov::Unstable: return "unstable";
        case Lyapunov::Undecided: return "undecided";
    }
    return "?";
}

namespace {

bool near_endpoint(double q, double e) {
    return std::fabs(q - e) <= 1e-12 * std::max(1.0, std::fabs(e));
}

/// Stable-set membership for the merged on-axis family, endpoint
/// inclusion exactly as printed in the three axis theorems.
ClosedForm classify_on_axis(const GyrostatParams& params, int axis, double q) {
    const InertiaSpectrum& in = params.inertia();
    const double mu_k = params.mu()[axis];

    double ea, eb;  // the two interval endpoints
    if (axis == 0) {
        ea = -in.i1() * mu_k / (in.i1() - in.i2());
        eb = -in.i1() * mu_k / (in.i1() - in.i3());
    } else if (axis == 1) {
        ea = -in.i2() * mu_k / (in.i2() - in.i3());
        eb = in.i2() * mu_k / (in.i1() - in.i2());
    } else {
        ea = in.i3() * mu_k / (in.i1() - in.i3());
        eb = in.i3() * mu_k / (in.i2() - in.i3());
    }
    if (near_endpoint(q, ea) || near_endpoint(q, eb))
        return ClosedForm::BoundaryWithinTolerance;

    bool stable;
    if (axis == 0) {
        stable = (mu_k > 0.0) ? (q < ea || q >= eb) : (q < eb || q >= ea);
    } else if (axis == 1) {
        stable = (mu_k > 0.0) ? (ea <= q && q <= eb) : (eb <= q && q <= ea);
    } else {
        stable = (mu_k > 0.0) ? (q <= ea || q > eb) : (q < eb || q >= ea);
    }
    return stable ? ClosedForm::StableWrtF1F2 : ClosedForm::NotStableWrtF1F2;
}

}  // namespace

ClosedForm classify_closed_form(const GyrostatParams& params, const Equilibrium& eq) {
    const AxisAlignment al = params.axis_alignment();
    if (al != AxisAlignment::Axis1 && al != AxisAlignment::Axis2 && al != AxisAlignment::Axis3)
        return ClosedForm::Unsupported;

    const int axis = params.aligned_axis();
    const Vec3& m = eq.point.m;
    const double off_tol = 1e-12 * std::max(1.0, norm(m));
    bool on_axis = true;
    for (int k = 0; k < 3; ++k)
        if (k != axis && std::fabs(m[k]) > off_tol) on_axis = false;

    if (on_axis) return classify_on_axis(params, axis, m[axis]);

    switch (eq.family.tag) {
        case FamilyTag::M3:
        case FamilyTag::M5:
            return ClosedForm::StableWrtF1F2;
        case FamilyTag::M4:
            return ClosedForm::NotStableWrtF1F2;
        default:
            return ClosedForm::Unsupported;
    }
}

std::vector<Equilibrium> singular_points(const GyrostatParams& params) {
    const InertiaSpectrum& in = params.inertia();
    std::vector<Equilibrium> out;
    switch (params.axis_alignment()) {
        case AxisAlignment::Axis1: {
            const double q = -in.i1() * params.mu().x / (in.i1() - in.i2());
            out.push_back(family_point(params, {FamilyTag::M12Axis, 0}, q));
            break;
        }
        case AxisAlignment::Axis3: {
            const double q = in.i3() * params.mu().z / (in.i2() - in.i3());
            out.push_back(family_point(params, {FamilyTag::M12Axis, 2}, q));
            break;
        }
        default:
            break;  // axis 2 is fully decided by closed form + spectrum
    }
    return out;
}

bool is_singular_point(const GyrostatParams& params, const BodyState& state) {
    for (const Equilibrium& s : singular_points(params)) {
        const double tol = 1e-8 * std::max(1.0, norm(s.point.m));
        if (norm(state.m - s.point.m) <= tol) return true;
    }
    return false;
}

StabilityReport synthesize(const GyrostatParams& params, const Equilibrium& eq) {
    StabilityReport rep;
    rep.equilibrium = eq;
    rep.closed_form = classify_closed_form(params, eq);

    const AxisAlignment al = params.axis_alignment();
    const bool aligned = al == AxisAlignment::Axis1 || al == AxisAlignment::Axis2 ||
                         al == AxisAlignment::Axis3;
    if (aligned) {
        rep.isolation = sign_analysis(reduce_level_system(params, eq));
    } else {
        const auto sample = sample_level_set(params, eq, {1e-1, 1e-2, 1e-3});
        rep.isolation.verdict = sample.verdict;
        rep.isolation.case_tag = CaseTag::Numeric;
        if (sample.verdict == Isolation::NotIsolated && !sample.per_radius.empty()) {
            const auto& last = sample.per_radius.back();
            rep.isolation.witness = BodyState{last.argmin};
        }
    }

    rep.spectral = spectral_verdict(params, eq);
    rep.singular_case = aligned && is_singular_point(params, eq.point);
    // The singular endpoints are decided by the theorem: they are not
    // stable with respect to {F1, F2} even though q sits on an interval
    // endpoint numerically.
    if (rep.singular_case) rep.closed_form = ClosedForm::NotStableWrtF1F2;

    if (rep.closed_form == ClosedForm::StableWrtF1F2)
        rep.lyapunov = Lyapunov::Stable;
    else if (rep.singular_case)
        rep.lyapunov = Lyapunov::Unstable;
    else if (rep.spectral.verdict == Spectral::SpectrallyUnstable)
        rep.lyapunov = Lyapunov::Unstable;
    else if (rep.isolation.verdict == Isolation::Isolated)
        rep.lyapunov = Lyapunov::Stable;
    else
        rep.lyapunov = Lyapunov::Undecided;
    return rep;
}

bool report_invariants_hold(const StabilityReport& rep) {
    if (rep.closed_form == ClosedForm::StableWrtF1F2 && rep.lyapunov != Lyapunov::Stable)
        return false;
    if (rep.spectral.verdict == Spectral::SpectrallyUnstable &&
        rep.lyapunov != Lyapunov::Unstable)
        return false;
    if (rep.singular_case) {
        if (rep.closed_form != ClosedForm::NotStableWrtF1F2) return false;
        if (rep.spectral.verdict != Spectral::SpectrallyStableInconclusive) return false;
        if (rep.lyapunov != Lyapunov::Unstable) return false;
    }
    if (rep.isolation.verdict == Isolation::NotIsolated && !rep.isolation.witness)
        return false;
    return true;
}

}  // namespace gyrostab
