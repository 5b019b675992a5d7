#pragma once

#include <cmath>
#include <complex>

namespace exdyn::sphere {

using cplx = std::complex<double>;

// A point of the Riemann sphere: either a finite complex number or the
// point at infinity.
struct SpherePoint {
    bool infinite = false;
    cplx z{0.0, 0.0};

    static SpherePoint finite(cplx v) { return {false, v}; }
    static SpherePoint infinity() { return {true, {0.0, 0.0}}; }

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
        return a.infinite == b.infinite && (a.infinite || a.z == b.z);
    }
};

// Chordal metric: d(z,w) = 2|z-w| / sqrt((1+|z|^2)(1+|w|^2)),
// d(z,inf) = 2 / sqrt(1+|z|^2), d(inf,inf) = 0.
inline double chordal(cplx z, cplx w) {
    return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

inline double chordal_to_infinity(cplx z) { return 2.0 / std::sqrt(1.0 + std::norm(z)); }

inline double chordal(const SpherePoint& a, const SpherePoint& b) {
    if (a.infinite && b.infinite) return 0.0;
    if (a.infinite) return chordal_to_infinity(b.z);
    if (b.infinite) return chordal_to_infinity(a.z);
    return chordal(a.z, b.z);
}

// Distance from the point 1/w (given in the reciprocal chart, useful while
// iterating near infinity) to a sphere point, without forming 1/w:
// d(1/w, c) = 2|1 - c w| / sqrt((1+|w|^2)(1+|c|^2)), d(1/w, inf) = 2|w|/sqrt(1+|w|^2).
inline double chordal_from_reciprocal(cplx w, const SpherePoint& c) {
    if (c.infinite) return 2.0 * std::abs(w) / std::sqrt(1.0 + std::norm(w));
    return 2.0 * std::abs(1.0 - c.z * w) /
           std::sqrt((1.0 + std::norm(w)) * (1.0 + std::norm(c.z)));
}

} // namespace exdyn::sphere
