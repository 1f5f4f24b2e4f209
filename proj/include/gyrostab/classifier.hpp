#pragma once

/**
 * Closed-form stability classification of uniform rotations for an
 * axis-aligned gyrostatic moment, and synthesis of the Lyapunov verdict
 * from the closed-form, isolation and spectral routes.
 *
 * For the merged on-axis family (q on the mu axis) the stable parameter
 * set is, with the printed endpoint inclusions:
 *   axis 1, mu1 > 0:  (-inf, -I1 mu1/(I1-I2)) u [-I1 mu1/(I1-I3), inf)
 *   axis 1, mu1 < 0:  (-inf, -I1 mu1/(I1-I3)) u [-I1 mu1/(I1-I2), inf)
 *   axis 2, mu2 > 0:  [-I2 mu2/(I2-I3), I2 mu2/(I1-I2)]
 *   axis 2, mu2 < 0:  [ I2 mu2/(I1-I2), -I2 mu2/(I2-I3)]
 *   axis 3, mu3 > 0:  (-inf, I3 mu3/(I1-I3)] u (I3 mu3/(I2-I3), inf)
 *   axis 3, mu3 < 0:  (-inf, I3 mu3/(I2-I3)) u [I3 mu3/(I1-I3), inf)
 * Off-axis families: M3 and M5 members are stable, M4 members are not.
 *
 * Two singular points are spectrally stable yet not stable with respect
 * to {F1, F2}; their Lyapunov instability is certified by the invariant-
 * set escape experiment (simulator module).
 */

#include "gyrostab/isolation.hpp"
#include "gyrostab/linearization.hpp"

namespace gyrostab {

enum class ClosedForm {
    StableWrtF1F2,
    NotStableWrtF1F2,
    BoundaryWithinTolerance,
    Unsupported
};

enum class Lyapunov { Stable, Unstable, Undecided };

const char* closed_form_name(ClosedForm v);
const char* lyapunov_name(Lyapunov v);

struct StabilityReport {
    Equilibrium equilibrium;
    ClosedForm closed_form = ClosedForm::Unsupported;
    IsolationVerdict isolation;
    SpectralVerdict spectral;
    bool singular_case = false;
    Lyapunov lyapunov = Lyapunov::Undecided;
};

ClosedForm classify_closed_form(const GyrostatParams& params, const Equilibrium& eq);

/// The spectrally-stable-but-not-isolated uniform rotations: one on axis 1,
/// one on axis 3, none on axis 2.
std::vector<Equilibrium> singular_points(const GyrostatParams& params);

bool is_singular_point(const GyrostatParams& params, const BodyState& state);

/// Run every applicable route and combine into the Lyapunov verdict.
StabilityReport synthesize(const GyrostatParams& params, const Equilibrium& eq);

/// Programmatic check of the StabilityReport cross-field invariants.
bool report_invariants_hold(const StabilityReport& report);

}  // namespace gyrostab
