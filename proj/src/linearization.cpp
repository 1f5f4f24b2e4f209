#include "gyrostab/linearization.hpp"

#include <algorithm>
#include <cmath>

namespace gyrostab {

Mat3 jacobian_rhs(const GyrostatParams& params, const BodyState& state) {
    const Vec3 w = params.inertia().apply_inverse(state.m);  // I^{-1} M
    const Vec3 n = state.m + params.mu();
    Mat3 j;
    for (int k = 0; k < 3; ++k) {
        Vec3 e;
        e[k] = 1.0;
        const Vec3 col = cross(e, w) + cross(n, params.inertia().apply_inverse(e));
        for (int i = 0; i < 3; ++i) j(i, k) = col[i];
    }
    return j;
}

namespace {

using cplx = std::complex<double>;

cplx horner(const cplx& z, double c2, double c1, double c0) {
    return ((z + c2) * z + c1) * z + c0;
}

cplx horner_deriv(const cplx& z, double c2, double c1) {
    return (3.0 * z + 2.0 * c2) * z + c1;
}

void polish(cplx& z, double c2, double c1, double c0) {
    for (int it = 0; it < 4; ++it) {
        const cplx d = horner_deriv(z, c2, c1);
        if (std::abs(d) == 0.0) break;
        z -= horner(z, c2, c1, c0) / d;
    }
}

}  // namespace

std::array<cplx, 3> eigenvalues3(const Mat3& m) {
    // Characteristic polynomial lambda^3 + c2 lambda^2 + c1 lambda + c0.
    const double c2 = -trace(m);
    const double c1 = minor_sum(m);
    const double c0 = -det(m);

    // Depressed cubic y^3 + p y + q with lambda = y - c2/3.
    const double shift = c2 / 3.0;
    const double p = c1 - c2 * c2 / 3.0;
    const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;

    std::array<cplx, 3> roots;
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    if (disc >= 0.0) {
        // Three real roots (trigonometric form).
        if (p == 0.0 && q == 0.0) {
            roots = {cplx{-shift}, cplx{-shift}, cplx{-shift}};
        } else {
            const double r = 2.0 * std::sqrt(std::max(0.0, -p / 3.0));
            double arg = (r == 0.0) ? 0.0 : 3.0 * q / (p * r);
            arg = std::clamp(arg, -1.0, 1.0);
            const double phi = std::acos(arg) / 3.0;
            for (int k = 0; k < 3; ++k)
                roots[k] = cplx{r * std::cos(phi - 2.0 * M_PI * k / 3.0) - shift};
        }
    } else {
        // One real root (Cardano) plus a conjugate pair from deflation.
        const double half_q = q / 2.0;
        const double s = std::sqrt(half_q * half_q + p * p * p / 27.0);
        const double u = std::cbrt(-half_q + (half_q >= 0.0 ? -s : s));
        // Pick the branch that avoids cancellation, then recover the other.
        const double y = (u == 0.0) ? 0.0 : u - p / (3.0 * u);
        const double real_root = y - shift;
        // Deflate: lambda^2 + (c2 + r) lambda + (c1 + r(c2 + r)) with r the
        // real root.
        const double b = c2 + real_root;
        const double c = c1 + real_root * b;
        const double quad_disc = b * b - 4.0 * c;
        if (quad_disc >= 0.0) {
            const double sq = std::sqrt(quad_disc);
            roots = {cplx{real_root}, cplx{(-b + sq) / 2.0}, cplx{(-b - sq) / 2.0}};
        } else {
            const double sq = std::sqrt(-quad_disc);
            roots = {cplx{real_root}, cplx{-b / 2.0, sq / 2.0}, cplx{-b / 2.0, -sq / 2.0}};
        }
    }

    for (auto& z : roots) polish(z, c2, c1, c0);

    // Force an exact conjugate pair on the real matrix and deterministic order.
    for (int i = 0; i < 3; ++i)
        for (int j2 = i + 1; j2 < 3; ++j2)
            if (std::fabs(roots[i].imag() + roots[j2].imag()) <
                    1e-12 * (1.0 + std::fabs(roots[i].imag())) &&
                roots[i].imag() != 0.0)
                roots[j2] = std::conj(roots[i]);
    std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b2) {
        if (a.real() != b2.real()) return a.real() < b2.real();
        return a.imag() < b2.imag();
    });
    return roots;
}

SpectralVerdict spectral_verdict(const GyrostatParams& params, const Equilibrium& eq,
                                 double tol) {
    const Mat3 j = jacobian_rhs(params, eq.point);
    SpectralVerdict out;
    out.eigenvalues = eigenvalues3(j);
    out.max_real = out.eigenvalues[0].real();
    for (const auto& z : out.eigenvalues) out.max_real = std::max(out.max_real, z.real());
    const double scale = std::max(1.0, max_abs(j));
    out.verdict = out.max_real > tol * scale ? Spectral::SpectrallyUnstable
                                             : Spectral::SpectrallyStableInconclusive;
    return out;
}

}  // namespace gyrostab
