#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <exdyn/errors.hpp>
#include <exdyn/sphere/polynomial.hpp>

namespace exdyn::sphere {

// Durand-Kerner (Weierstrass) simultaneous iteration for all roots of a
// polynomial.  Deterministic: fixed initial configuration on a circle and a
// fixed-seed engine for the perturbation applied when a sweep stalls.
inline std::vector<cplx> durand_kerner(const Polynomial& p, double root_tol,
                                       int max_sweeps = 500,
                                       std::uint64_t seed = 0x6b43a9b5eull) {
    const int d = p.degree();
    if (d < 1) throw root_convergence_error("durand_kerner: degree < 1");

    // Monic normalization conditions the correction terms.
    std::vector<cplx> monic(p.coefficients());
    for (auto& c : monic) c /= p.leading();
    Polynomial pm{std::vector<cplx>(monic)};

    double radius = 0.0;
    for (int k = 0; k < d; ++k) radius = std::max(radius, std::abs(monic[static_cast<std::size_t>(k)]));
    radius = 1.0 + radius;

    std::vector<cplx> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        double angle = 2.0 * M_PI * k / d + 0.25;
        z[static_cast<std::size_t>(k)] = radius * cplx(std::cos(angle), std::sin(angle));
    }

    std::mt19937_64 gen(seed);
    auto unit = [&gen]() { return (gen() >> 11) * (1.0 / 9007199254740992.0); };

    const int restarts = 4;
    for (int round = 0; round < restarts; ++round) {
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            double max_step = 0.0;
            for (int k = 0; k < d; ++k) {
                cplx denom(1.0, 0.0);
                for (int j = 0; j < d; ++j)
                    if (j != k) denom *= z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
                if (denom == cplx(0.0, 0.0)) {
                    // coincident iterates: nudge and carry on
                    z[static_cast<std::size_t>(k)] += cplx(1e-6 * (unit() - 0.5), 1e-6 * (unit() - 0.5));
                    max_step = 1.0;
                    continue;
                }
                cplx delta = pm.eval(z[static_cast<std::size_t>(k)]) / denom;
                z[static_cast<std::size_t>(k)] -= delta;
                max_step = std::max(max_step, std::abs(delta));
            }
            if (max_step < 1e-14 * (1.0 + radius)) break;
        }

        // Newton polish against the original polynomial.
        Polynomial dp = p.derivative();
        for (auto& r : z)
            for (int it = 0; it < 5; ++it) {
                cplx der = dp.eval(r);
                if (std::abs(der) < 1e-300) break;
                r -= p.eval(r) / der;
            }

        double worst = 0.0;
        for (const auto& r : z) worst = std::max(worst, std::abs(p.eval(r)));
        if (worst < root_tol) {
            std::sort(z.begin(), z.end(), [](cplx a, cplx b) {
                return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
            });
            return z;
        }

        // Stalled (e.g. clustered roots): perturb and retry.
        for (auto& r : z)
            r += cplx(1e-3 * (unit() - 0.5), 1e-3 * (unit() - 0.5));
    }
    throw root_convergence_error("durand_kerner: residual above " + std::to_string(root_tol) +
                                 " after " + std::to_string(restarts) + " rounds");
}

} // namespace exdyn::sphere
