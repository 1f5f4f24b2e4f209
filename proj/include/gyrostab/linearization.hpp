#pragma once

/**
 * Linearization of the gyrostat field and spectral stability verdicts.
 *
 * The Jacobian of M -> (M + mu) x I^{-1} M is the linear map
 *     h -> h x I^{-1} M + (M + mu) x I^{-1} h.
 * A positive-real-part eigenvalue certifies Lyapunov instability; the
 * absence of one is always reported as inconclusive, since the singular
 * uniform rotations are spectrally stable yet Lyapunov unstable.
 */

#include <array>
#include <complex>

#include "gyrostab/equilibria.hpp"

namespace gyrostab {

enum class Spectral { SpectrallyUnstable, SpectrallyStableInconclusive };

struct SpectralVerdict {
    std::array<std::complex<double>, 3> eigenvalues{};
    Spectral verdict = Spectral::SpectrallyStableInconclusive;
    double max_real = 0.0;
};

Mat3 jacobian_rhs(const GyrostatParams& params, const BodyState& state);

/// Eigenvalues of a real 3x3 matrix via closed-form roots of the
/// characteristic cubic, Newton-polished; sorted by (re, im).
std::array<std::complex<double>, 3> eigenvalues3(const Mat3& m);

SpectralVerdict spectral_verdict(const GyrostatParams& params, const Equilibrium& eq,
                                 double tol = 1e-8);

}  // namespace gyrostab
