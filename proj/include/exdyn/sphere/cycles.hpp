#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <exdyn/errors.hpp>
#include <exdyn/sphere/polynomial.hpp>
#include <exdyn/sphere/roots.hpp>
#include <exdyn/sphere/sphere.hpp>

namespace exdyn::sphere {

enum class CycleClass { Superattracting, Attracting, Indifferent, Repelling };

inline const char* to_string(CycleClass c) {
    switch (c) {
        case CycleClass::Superattracting: return "superattracting";
        case CycleClass::Attracting: return "attracting";
        case CycleClass::Indifferent: return "indifferent";
        case CycleClass::Repelling: return "repelling";
    }
    return "?";
}

inline CycleClass classify_cycle(cplx multiplier, double tol = 1e-9) {
    double m = std::abs(multiplier);
    if (m < tol) return CycleClass::Superattracting;
    if (m < 1.0 - tol) return CycleClass::Attracting;
    if (m > 1.0 + tol) return CycleClass::Repelling;
    return CycleClass::Indifferent;
}

struct Cycle {
    std::vector<SpherePoint> points; // ordered, h(points[i]) = points[i+1 mod m]
    int period = 1;                  // exact (minimal) period
    cplx multiplier{0.0, 0.0};
    CycleClass klass = CycleClass::Superattracting;
    double residual = 0.0; // max |h^n(c) - c| over the cycle

    bool contains_infinity() const {
        for (const auto& p : points)
            if (p.infinite) return true;
        return false;
    }
};

// All cycles whose period divides n (their union is the n-periodic set),
// each recorded with its exact period.  Cycle 0 is always the point at
// infinity, superattracting for polynomials of degree >= 2; finite cycles
// follow sorted by (period, smallest point).
struct CycleSet {
    int period = 1; // the n the set was built for
    std::vector<Cycle> cycles;

    int infinity_id() const { return 0; }

    std::vector<SpherePoint> all_points() const {
        std::vector<SpherePoint> r;
        for (const auto& c : cycles) r.insert(r.end(), c.points.begin(), c.points.end());
        return r;
    }

    // Smallest chordal distance between distinct cycle points; bounds the
    // usable capture radius.
    double min_separation() const {
        auto pts = all_points();
        double best = 4.0; // sphere diameter
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                best = std::min(best, chordal(pts[i], pts[j]));
        return best;
    }
};

// Finds the n-periodic cycles of h by solving h^n(z) = z with the
// simultaneous root iteration, deduplicating, and walking orbits under h.
inline CycleSet find_cycles(const ComplexMapSpec& map, int n, double root_tol = 1e-10,
                            double dedup_tol = 1e-7, int degree_cap = 4096) {
    if (n < 1) throw parse_error("cycle period must be >= 1");

    double deg_n = std::pow(static_cast<double>(map.degree()), n);
    if (deg_n > static_cast<double>(degree_cap))
        throw degree_cap_error("deg(h^" + std::to_string(n) + ") = " +
                               std::to_string(static_cast<long>(deg_n)) + " exceeds cap " +
                               std::to_string(degree_cap));

    Polynomial iterate = map.poly;
    for (int k = 1; k < n; ++k) iterate = map.poly.compose(iterate);
    Polynomial equation = iterate - Polynomial({cplx(0.0, 0.0), cplx(1.0, 0.0)});

    std::vector<cplx> roots = durand_kerner(equation, root_tol);

    // Cluster numerically coincident roots (multiple fixed points of h^n).
    std::vector<cplx> unique;
    for (cplx r : roots) {
        bool seen = false;
        for (cplx u : unique)
            if (std::abs(r - u) < dedup_tol) {
                seen = true;
                break;
            }
        if (!seen) unique.push_back(r);
    }

    auto match = [&](cplx v) -> int {
        for (std::size_t k = 0; k < unique.size(); ++k)
            if (std::abs(v - unique[k]) < dedup_tol) return static_cast<int>(k);
        return -1;
    };

    Polynomial dh = map.poly.derivative();

    std::vector<Cycle> finite_cycles;
    std::vector<bool> used(unique.size(), false);
    for (std::size_t k = 0; k < unique.size(); ++k) {
        if (used[k]) continue;
        std::vector<cplx> orbit;
        int cur = static_cast<int>(k);
        while (cur >= 0 && !used[static_cast<std::size_t>(cur)]) {
            used[static_cast<std::size_t>(cur)] = true;
            orbit.push_back(unique[static_cast<std::size_t>(cur)]);
            cur = match(map.poly.eval(unique[static_cast<std::size_t>(cur)]));
        }
        // orbit closes onto its own start; the walk length is the exact period
        auto smallest = std::min_element(orbit.begin(), orbit.end(), [](cplx a, cplx b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        std::rotate(orbit.begin(), smallest, orbit.end());

        Cycle c;
        c.period = static_cast<int>(orbit.size());
        cplx lambda(1.0, 0.0);
        double residual = 0.0;
        for (cplx z : orbit) {
            c.points.push_back(SpherePoint::finite(z));
            lambda *= dh.eval(z);
            residual = std::max(residual, std::abs(equation.eval(z)));
        }
        c.multiplier = lambda;
        c.klass = classify_cycle(lambda);
        c.residual = residual;
        finite_cycles.push_back(std::move(c));
    }

    std::sort(finite_cycles.begin(), finite_cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.period != b.period) return a.period < b.period;
        cplx pa = a.points.front().z, pb = b.points.front().z;
        return pa.real() != pb.real() ? pa.real() < pb.real() : pa.imag() < pb.imag();
    });

    CycleSet set;
    set.period = n;
    Cycle inf;
    inf.points = {SpherePoint::infinity()};
    inf.period = 1;
    inf.multiplier = cplx(0.0, 0.0); // degree >= 2: infinity is superattracting
    inf.klass = CycleClass::Superattracting;
    inf.residual = 0.0;
    set.cycles.push_back(std::move(inf));
    for (auto& c : finite_cycles) set.cycles.push_back(std::move(c));
    return set;
}

} // namespace exdyn::sphere
