#pragma once

/**
 * Uniform rotations (equilibria) of the torque-free gyrostat.
 *
 * Families, in momentum coordinates:
 *   M1          = -mu
 *   M2(lambda)  = (lambda Ik / (1 - lambda Ik)) mu_k componentwise,
 *                 lambda != 1/I1, 1/I2, 1/I3
 *   M3(beta)    = (beta, I2 mu2/(I1-I2), I3 mu3/(I1-I3)),  requires mu1 = 0
 *   M4(beta)    = (I1 mu1/(I2-I1), beta, I3 mu3/(I2-I3)),  requires mu2 = 0
 *   M5(beta)    = (I1 mu1/(I3-I1), I2 mu2/(I3-I2), beta),  requires mu3 = 0
 *   M12Axis(q)  = q on the aligned axis, zeros elsewhere; merges M1 and the
 *                 axis M2 branch when mu lies along a single principal axis.
 */

#include <optional>
#include <vector>

#include "gyrostab/core.hpp"

namespace gyrostab {

enum class FamilyTag { M1, M2, M3, M4, M5, M12Axis };

struct EquilibriumFamily {
    FamilyTag tag;
    int axis = -1;  // 0-based aligned axis, M12Axis only

    bool has_parameter() const { return tag != FamilyTag::M1; }
    bool valid_for(const GyrostatParams& params) const;
};

struct Equilibrium {
    EquilibriumFamily family;
    double parameter = 0.0;  // ignored for M1
    BodyState point;
};

const char* family_name(FamilyTag tag);

/// M1 and M2 always; M3/M4/M5 when the corresponding mu component vanishes;
/// the merged on-axis family when mu is aligned with a single axis.
std::vector<EquilibriumFamily> enumerate_families(const GyrostatParams& params);

/// Materialize a family member.  Throws std::invalid_argument for a family
/// not valid for the given params or for lambda at a pole 1/Ik.
Equilibrium family_point(const GyrostatParams& params, const EquilibriumFamily& family,
                         double parameter);

bool is_equilibrium(const GyrostatParams& params, const BodyState& state, double tol = 1e-10);

/// Smallest singular value of the 2x3 Jacobian of (F1, F2); vanishes exactly
/// on the equilibrium set (rank-deficiency criterion).
double integral_jacobian_rank_defect(const GyrostatParams& params, const BodyState& state);

enum class SingleIntegralVerdict { StableWrtF1, StableWrtF2, Neither };

/// Strict-local-extremum test of F1 and F2 at the equilibrium point:
/// vanishing gradient plus positive-definite Hessian.
SingleIntegralVerdict single_integral_verdict(const GyrostatParams& params,
                                              const Equilibrium& eq);

}  // namespace gyrostab
