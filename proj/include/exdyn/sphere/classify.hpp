#pragma once

#include <cmath>
#include <tuple>
#include <vector>

#include <exdyn/sphere/cycles.hpp>
#include <exdyn/sphere/polynomial.hpp>
#include <exdyn/sphere/sphere.hpp>

namespace exdyn::sphere {

struct ClassifyParams {
    int max_iterations = 2000;
    double capture_radius = 1e-3; // chordal; auto-shrunk below half the cycle separation
    int confirm_factor = 3;       // confirmation steps = period * confirm_factor
    double escape_modulus = 0.0;  // 0 -> max(2, 2 * max |c_k / c_d|)
    double root_tolerance = 1e-10;
    double dedup_tolerance = 1e-7;
    int cycle_degree_cap = 4096;
    bool supersample = false; // 2x2 subsamples per pixel, majority label
    int threads = 0;          // 0 -> hardware concurrency

    double effective_escape(const ComplexMapSpec& map) const {
        if (escape_modulus > 0.0) return escape_modulus;
        double m = 0.0;
        for (int k = 0; k < map.degree(); ++k)
            m = std::max(m, std::abs(map.poly.coefficient(k) / map.poly.leading()));
        return std::max(2.0, 2.0 * m);
    }

    // Strictly smaller than half the minimal chordal separation of the
    // cycle points, so capture disks cannot overlap.
    double effective_capture(const CycleSet& cycles) const {
        return std::min(capture_radius, cycles.min_separation() / 4.0);
    }
};

// A pixel/point label: an end (cycle id + phase) or unclassified.
struct Label {
    int cycle_id = -1;
    int phase = 0;

    bool classified() const { return cycle_id >= 0; }

    friend bool operator==(const Label& a, const Label& b) {
        return a.cycle_id == b.cycle_id && a.phase == b.phase;
    }
    friend bool operator<(const Label& a, const Label& b) {
        return std::tie(a.cycle_id, a.phase) < std::tie(b.cycle_id, b.phase);
    }
};

struct ClassifyOutcome {
    Label label;    // unclassified if the iteration budget ran out
    int steps = -1; // step at which the confirmed capture/escape began
};

// Iterates h from z0, watching for capture by a cycle or escape to infinity.
// Capture: some iterate comes chordally within the capture radius of cycle
// point j at step k and the next period*confirm_factor iterates track the
// cycle order; the end's phase is (j - k) mod period, so the trajectory
// tracks cycle[(m + phase) mod period] -- the same convention as the finite
// engine, making the induced map act as phase+1.  Escape: |z| stays above
// the escape modulus for confirm_factor consecutive steps.  Iteration
// switches to the reciprocal chart w = 1/z beyond the escape modulus, where
// the map becomes w -> w^d / (c_d + c_{d-1} w + ... + c_0 w^d).
inline ClassifyOutcome classify_point(cplx z0, const ComplexMapSpec& map, const CycleSet& cycles,
                                      const ClassifyParams& params) {
    const double big = params.effective_escape(map);
    const double delta = params.effective_capture(cycles);
    const double delta_sq = delta * delta;
    const int d = map.degree();

    // reciprocal-chart coefficients: q(w) = c_d + c_{d-1} w + ... + c_0 w^d
    std::vector<cplx> q(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) q[static_cast<std::size_t>(k)] = map.poly.coefficient(d - k);

    // cached 1 + |c|^2 per cycle point for the chordal comparisons
    struct Target {
        bool infinite;
        cplx c;
        double w2; // 1 + |c|^2
    };
    std::vector<std::vector<Target>> targets(cycles.cycles.size());
    for (std::size_t i = 0; i < cycles.cycles.size(); ++i)
        for (const auto& p : cycles.cycles[i].points)
            targets[i].push_back({p.infinite, p.z, 1.0 + std::norm(p.z)});

    bool in_w = false;
    cplx z = z0;
    cplx w(0.0, 0.0);

    // chordal distance squared from the current point to a target
    auto dist_sq = [&](const Target& t) -> double {
        if (!in_w) {
            double zn = 1.0 + std::norm(z);
            if (t.infinite) return 4.0 / zn;
            return 4.0 * std::norm(z - t.c) / (zn * t.w2);
        }
        double wn = 1.0 + std::norm(w);
        if (t.infinite) return 4.0 * std::norm(w) / wn;
        return 4.0 * std::norm(1.0 - t.c * w) / (wn * t.w2);
    };

    int cand_cycle = -1, cand_index = 0, cand_step = 0;
    int escape_run = 0, escape_start = -1;

    for (int step = 0; step <= params.max_iterations; ++step) {
        if (cand_cycle >= 0) {
            const auto& cyc = targets[static_cast<std::size_t>(cand_cycle)];
            int period = static_cast<int>(cyc.size());
            int expect = (cand_index + (step - cand_step)) % period;
            if (dist_sq(cyc[static_cast<std::size_t>(expect)]) < delta_sq) {
                if (step - cand_step == period * params.confirm_factor) {
                    int phase = ((cand_index - cand_step) % period + period) % period;
                    return {{cand_cycle, phase}, cand_step};
                }
            } else {
                cand_cycle = -1;
            }
        }
        if (cand_cycle < 0) {
            for (std::size_t i = 0; i < targets.size() && cand_cycle < 0; ++i)
                for (std::size_t j = 0; j < targets[i].size(); ++j)
                    if (dist_sq(targets[i][j]) < delta_sq) {
                        cand_cycle = static_cast<int>(i);
                        cand_index = static_cast<int>(j);
                        cand_step = step;
                        break;
                    }
        }

        bool outside = in_w ? (std::abs(w) * big < 1.0) : (std::norm(z) > big * big);
        if (outside) {
            if (escape_run == 0) escape_start = step;
            if (++escape_run >= params.confirm_factor)
                return {{cycles.infinity_id(), 0}, escape_start};
        } else {
            escape_run = 0;
        }

        // advance one application of h, switching charts as needed
        if (!in_w) {
            z = map.poly.eval(z);
            if (std::norm(z) > big * big) {
                w = 1.0 / z;
                in_w = true;
            }
        } else {
            cplx qe = q.back();
            for (auto it = q.rbegin() + 1; it != q.rend(); ++it) qe = qe * w + *it;
            cplx wd(1.0, 0.0);
            for (int k = 0; k < d; ++k) wd *= w;
            w = wd / qe;
            if (std::abs(w) * big >= 1.0) {
                z = 1.0 / w;
                in_w = false;
            }
        }
    }
    return {{}, -1};
}

} // namespace exdyn::sphere
