#pragma once

/**
 * Isolation of a uniform rotation inside the joint level set of {F1, F2}.
 *
 * An equilibrium that is isolated among the solutions of
 *   F1(M) = F1(Me),  F2(M) = F2(Me)
 * is stable with respect to {F1, F2}, hence Lyapunov stable; a
 * non-isolated one admits no Lyapunov function built from {F1, F2}.
 *
 * For a gyrostatic moment along a single principal axis the two level
 * equations reduce, by Cramer elimination in the squared off-axis momenta,
 * to a pair of quadratics in x = (on-axis momentum) - (equilibrium value):
 *   Mp^2 = u(x),  Mr^2 = v(x),
 * and isolation is decided by the signs of u, v near x = 0.  For a generic
 * gyrostatic moment a deterministic level-set sampling oracle is provided.
 */

#include <optional>
#include <vector>

#include "gyrostab/equilibria.hpp"

namespace gyrostab {

struct Quadratic {
    double a = 0.0, b = 0.0, c = 0.0;  // a x^2 + b x + c
    double eval(double x) const { return (a * x + b) * x + c; }
};

struct ReducedSystem {
    GyrostatParams params;
    Equilibrium base;
    int axis;  // on-axis index (the mu axis), 0-based
    int p, r;  // off-axis indices, p < r
    Quadratic u, v;  // Mp^2 = u(x), Mr^2 = v(x)

    /// Assemble the full state for a given x and off-axis branch signs;
    /// negative u/v are clamped to zero.
    BodyState reconstruct(double x, double sign_p, double sign_r) const;
};

enum class Isolation { Isolated, NotIsolated, Inconclusive };

enum class CaseTag { I1, I2, I3Positive, I3Negative, II, III, Numeric };

const char* isolation_name(Isolation v);
const char* case_tag_name(CaseTag t);

struct IsolationVerdict {
    Isolation verdict = Isolation::Inconclusive;
    CaseTag case_tag = CaseTag::Numeric;
    std::optional<double> witness_x;
    std::optional<BodyState> witness;  // on both level sets, distinct from base
};

/// Cramer reduction of the joint level equations around an equilibrium.
/// Throws std::invalid_argument unless mu lies along exactly one axis.
ReducedSystem reduce_level_system(const GyrostatParams& params, const Equilibrium& eq);

/// Decide isolation from the signs of u, v near x = 0, producing a
/// witness state for the non-isolated outcome.
IsolationVerdict sign_analysis(const ReducedSystem& reduced);

struct LevelSampleEntry {
    double radius = 0.0;
    double min_g = 0.0;  // min of (F1-F1e)^2 + (F2-F2e)^2 on the sphere
    Vec3 argmin{};
};

struct LevelSampleReport {
    std::vector<LevelSampleEntry> per_radius;
    Isolation verdict = Isolation::Inconclusive;
};

/// Numerical isolation oracle for arbitrary mu: multi-start projected
/// descent of the squared level residual over spheres around the
/// equilibrium.  Fully deterministic (Fibonacci-sphere starts).
LevelSampleReport sample_level_set(const GyrostatParams& params, const Equilibrium& eq,
                                   const std::vector<double>& radii, int budget = 120);

}  // namespace gyrostab
