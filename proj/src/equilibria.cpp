#include "gyrostab/equilibria.hpp"

#include <cmath>

namespace gyrostab {

namespace {

bool mu_component_zero(const GyrostatParams& params, int k) {
    const double thresh = 1e-14 * std::max(1.0, norm(params.mu()));
    return std::fabs(params.mu()[k]) <= thresh;
}

}  // namespace

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::M1: return "M1";
        case FamilyTag::M2: return "M2";
        case FamilyTag::M3: return "M3";
        case FamilyTag::M4: return "M4";
        case FamilyTag::M5: return "M5";
        case FamilyTag::M12Axis: return "M12";
    }
    return "?";
}

bool EquilibriumFamily::valid_for(const GyrostatParams& params) const {
    switch (tag) {
        case FamilyTag::M1:
        case FamilyTag::M2:
            return true;
        case FamilyTag::M3: return mu_component_zero(params, 0);
        case FamilyTag::M4: return mu_component_zero(params, 1);
        case FamilyTag::M5: return mu_component_zero(params, 2);
        case FamilyTag::M12Axis:
            switch (params.axis_alignment()) {
                case AxisAlignment::Axis1: return axis == 0;
                case AxisAlignment::Axis2: return axis == 1;
                case AxisAlignment::Axis3: return axis == 2;
                default: return false;
            }
    }
    return false;
}

std::vector<EquilibriumFamily> enumerate_families(const GyrostatParams& params) {
    std::vector<EquilibriumFamily> out;
    out.push_back({FamilyTag::M1});
    out.push_back({FamilyTag::M2});
    if (mu_component_zero(params, 0)) out.push_back({FamilyTag::M3});
    if (mu_component_zero(params, 1)) out.push_back({FamilyTag::M4});
    if (mu_component_zero(params, 2)) out.push_back({FamilyTag::M5});
    switch (params.axis_alignment()) {
        case AxisAlignment::Axis1: out.push_back({FamilyTag::M12Axis, 0}); break;
        case AxisAlignment::Axis2: out.push_back({FamilyTag::M12Axis, 1}); break;
        case AxisAlignment::Axis3: out.push_back({FamilyTag::M12Axis, 2}); break;
        default: break;
    }
    return out;
}

Equilibrium family_point(const GyrostatParams& params, const EquilibriumFamily& family,
                         double parameter) {
    if (!family.valid_for(params))
        throw std::invalid_argument("equilibrium family not valid for these parameters");

    const InertiaSpectrum& in = params.inertia();
    const Vec3& mu = params.mu();
    Vec3 p;

    switch (family.tag) {
        case FamilyTag::M1:
            p = -mu;
            break;
        case FamilyTag::M2: {
            for (int k = 0; k < 3; ++k) {
                const double pole = 1.0 / in.moment(k);
                if (std::fabs(parameter - pole) <= 1e-12 * std::fabs(pole))
                    throw std::invalid_argument("lambda coincides with a pole 1/Ik");
                p[k] = parameter * in.moment(k) / (1.0 - parameter * in.moment(k)) * mu[k];
            }
            break;
        }
        case FamilyTag::M3:
            p = {parameter, in.i2() / (in.i1() - in.i2()) * mu.y,
                 in.i3() / (in.i1() - in.i3()) * mu.z};
            break;
        case FamilyTag::M4:
            p = {in.i1() / (in.i2() - in.i1()) * mu.x, parameter,
                 in.i3() / (in.i2() - in.i3()) * mu.z};
            break;
        case FamilyTag::M5:
            p = {in.i1() / (in.i3() - in.i1()) * mu.x, in.i2() / (in.i3() - in.i2()) * mu.y,
                 parameter};
            break;
        case FamilyTag::M12Axis:
            p = {};
            p[family.axis] = parameter;
            break;
    }
    return {family, parameter, BodyState{p}};
}

bool is_equilibrium(const GyrostatParams& params, const BodyState& state, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const double scale = params.residual_scale(state.m);
    return norm(rhs(params, state)) <= tol * std::max(scale, 1e-300);
}

double integral_jacobian_rank_defect(const GyrostatParams& params, const BodyState& state) {
    const auto [g1, g2] = gradients(params, state);
    // Smallest singular value of the 2x3 matrix with rows g1, g2.  Using
    // sigma_min * sigma_max = |g1 x g2| avoids the cancellation that the
    // Gram-matrix eigenvalue formula suffers for nearly parallel rows.
    const double a = dot(g1, g1), b = dot(g1, g2), c = dot(g2, g2);
    const double t = a + c;
    const double disc = std::sqrt(std::max(0.0, (a - c) * (a - c) + 4.0 * b * b));
    const double sigma_max = std::sqrt(0.5 * (t + disc));
    if (sigma_max == 0.0) return 0.0;
    return norm(cross(g1, g2)) / sigma_max;
}

namespace {

// Leading-principal-minor test for strict positive definiteness of a
// diagonal Hessian, with tolerance relative to the trace.
bool diag_positive_definite(const Vec3& d) {
    const double tol = 1e-12 * (d.x + d.y + d.z);
    return d.x > tol && d.y > tol && d.z > tol;
}

}  // namespace

SingleIntegralVerdict single_integral_verdict(const GyrostatParams& params,
                                              const Equilibrium& eq) {
    const auto [g1, g2] = gradients(params, eq.point);
    const double scale = std::max(1.0, norm(eq.point.m) + norm(params.mu()));
    const double gtol = 1e-10 * scale;

    const InertiaSpectrum& in = params.inertia();
    // Hess F1 = I^{-1}, Hess F2 = identity; both constant.
    if (norm(g1) <= gtol / in.i3() &&
        diag_positive_definite({1.0 / in.i1(), 1.0 / in.i2(), 1.0 / in.i3()}))
        return SingleIntegralVerdict::StableWrtF1;
    if (norm(g2) <= gtol && diag_positive_definite({1.0, 1.0, 1.0}))
        return SingleIntegralVerdict::StableWrtF2;
    return SingleIntegralVerdict::Neither;
}

}  // namespace gyrostab
