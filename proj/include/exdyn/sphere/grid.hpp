#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include <exdyn/errors.hpp>
#include <exdyn/sphere/classify.hpp>
#include <exdyn/sphere/cycles.hpp>
#include <exdyn/sphere/polynomial.hpp>

namespace exdyn::sphere {

// A raster over a rectangle of the plane.  Row 0 is the top of the image,
// i.e. the largest imaginary part; pixels are sampled at their centers.
struct GridSpec {
    int width = 0;
    int height = 0;
    double re_min = 0.0, re_max = 0.0;
    double im_min = 0.0, im_max = 0.0;

    double pixel_width() const { return (re_max - re_min) / width; }
    double pixel_height() const { return (im_max - im_min) / height; }

    cplx pixel_center(int col, int row) const {
        return {re_min + (col + 0.5) * pixel_width(), im_max - (row + 0.5) * pixel_height()};
    }

    std::optional<std::pair<int, int>> pixel_of(cplx z) const {
        int col = static_cast<int>(std::floor((z.real() - re_min) / pixel_width()));
        int row = static_cast<int>(std::floor((im_max - z.imag()) / pixel_height()));
        if (col < 0 || col >= width || row < 0 || row >= height) return std::nullopt;
        return std::make_pair(col, row);
    }

    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.width == b.width && a.height == b.height && a.re_min == b.re_min &&
               a.re_max == b.re_max && a.im_min == b.im_min && a.im_max == b.im_max;
    }
};

struct BasinStats {
    std::vector<long> label_pixels; // aligned with the grid legend
    long unclassified_pixels = 0;
    long total_pixels = 0;
    std::vector<long> iteration_histogram; // bucket b: capture step with bit width b
    double undecided_fraction = 0.0;       // unclassified / total
};

// Per-pixel trajectory-end labels for one map, period and window.
struct BasinGrid {
    GridSpec spec;
    int period = 1;
    std::string map_text;
    CycleSet cycles;
    std::vector<Label> legend;        // every (cycle, phase), cycles in order
    std::vector<std::int32_t> labels; // row-major; -1 unclassified, else legend index
    BasinStats stats;

    std::int32_t label_index_at(int col, int row) const {
        return labels[static_cast<std::size_t>(row) * spec.width + col];
    }

    Label label_at(int col, int row) const {
        std::int32_t ix = label_index_at(col, row);
        return ix < 0 ? Label{} : legend[static_cast<std::size_t>(ix)];
    }

    int legend_index(const Label& l) const {
        for (std::size_t k = 0; k < legend.size(); ++k)
            if (legend[k] == l) return static_cast<int>(k);
        return -1;
    }
};

namespace detail {

inline std::vector<Label> build_legend(const CycleSet& cycles) {
    std::vector<Label> legend;
    for (std::size_t c = 0; c < cycles.cycles.size(); ++c)
        for (int p = 0; p < cycles.cycles[c].period; ++p)
            legend.push_back({static_cast<int>(c), p});
    return legend;
}

inline int histogram_bucket(int steps) {
    int b = 0;
    while (steps > 0 && b < 15) {
        steps >>= 1;
        ++b;
    }
    return b;
}

} // namespace detail

// Classifies every pixel center (or a 2x2 supersample) against the cycles of
// the requested period.  Rows are distributed over worker threads in stride;
// the result is independent of scheduling.
inline BasinGrid compute_basins(const ComplexMapSpec& map, const GridSpec& spec, int period,
                                const ClassifyParams& params) {
    BasinGrid grid;
    grid.spec = spec;
    grid.period = period;
    grid.map_text = map.source;
    grid.cycles = find_cycles(map, period, params.root_tolerance, params.dedup_tolerance,
                              params.cycle_degree_cap);
    grid.legend = detail::build_legend(grid.cycles);
    grid.labels.assign(static_cast<std::size_t>(spec.width) * spec.height, -1);

    std::vector<std::int32_t> steps(grid.labels.size(), -1);

    auto classify_pixel = [&](int col, int row) -> ClassifyOutcome {
        if (!params.supersample)
            return classify_point(spec.pixel_center(col, row), map, grid.cycles, params);
        // 2x2 subsamples; majority label, ties to the smallest classified label
        const double dx = spec.pixel_width() / 4.0, dy = spec.pixel_height() / 4.0;
        cplx c = spec.pixel_center(col, row);
        ClassifyOutcome sub[4];
        int k = 0;
        for (double sx : {-dx, dx})
            for (double sy : {-dy, dy}) sub[k++] = classify_point(c + cplx(sx, sy), map, grid.cycles, params);
        std::map<Label, int> votes;
        for (const auto& o : sub)
            if (o.label.classified()) ++votes[o.label];
        Label best;
        int best_votes = 0;
        for (const auto& [l, v] : votes)
            if (v > best_votes) {
                best = l;
                best_votes = v;
            }
        if (best_votes * 2 < 4) return {{}, -1}; // no majority -> unclassified
        for (const auto& o : sub)
            if (o.label == best) return o;
        return {{}, -1};
    };

    auto worker = [&](int start_row, int stride) {
        for (int row = start_row; row < spec.height; row += stride)
            for (int col = 0; col < spec.width; ++col) {
                ClassifyOutcome o = classify_pixel(col, row);
                std::size_t ix = static_cast<std::size_t>(row) * spec.width + col;
                if (o.label.classified()) {
                    grid.labels[ix] = grid.legend_index(o.label);
                    steps[ix] = o.steps;
                }
            }
    };

    int nthreads = params.threads > 0 ? params.threads
                                      : std::max(1u, std::thread::hardware_concurrency());
    if (nthreads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t, nthreads);
        for (auto& th : pool) th.join();
    }

    BasinStats& st = grid.stats;
    st.label_pixels.assign(grid.legend.size(), 0);
    st.iteration_histogram.assign(16, 0);
    st.total_pixels = static_cast<long>(grid.labels.size());
    for (std::size_t ix = 0; ix < grid.labels.size(); ++ix) {
        if (grid.labels[ix] < 0) {
            ++st.unclassified_pixels;
        } else {
            ++st.label_pixels[static_cast<std::size_t>(grid.labels[ix])];
            ++st.iteration_histogram[static_cast<std::size_t>(detail::histogram_bucket(steps[ix]))];
        }
    }
    st.undecided_fraction =
        st.total_pixels == 0 ? 0.0 : static_cast<double>(st.unclassified_pixels) / st.total_pixels;
    return grid;
}

struct RefinementStats {
    long total_pixels = 0;
    long violations = 0; // classified under A, unclassified under B
    double violation_fraction = 0.0;
    std::vector<Label> a_legend, b_legend;
    // rows: a legend entries then unclassified; cols: b legend then unclassified
    std::vector<std::vector<long>> table;
};

// Compares two grids over the same window, counting pixels that lose their
// classification when passing from A to B and tabulating how A's labels
// redistribute over B's.
inline RefinementStats refinement_check(const BasinGrid& a, const BasinGrid& b) {
    if (!(a.spec == b.spec))
        throw grid_mismatch_error("refinement_check: grids differ in dimensions or window");
    RefinementStats r;
    r.total_pixels = static_cast<long>(a.labels.size());
    r.a_legend = a.legend;
    r.b_legend = b.legend;
    r.table.assign(a.legend.size() + 1, std::vector<long>(b.legend.size() + 1, 0));
    for (std::size_t ix = 0; ix < a.labels.size(); ++ix) {
        std::size_t row = a.labels[ix] < 0 ? a.legend.size() : static_cast<std::size_t>(a.labels[ix]);
        std::size_t col = b.labels[ix] < 0 ? b.legend.size() : static_cast<std::size_t>(b.labels[ix]);
        ++r.table[row][col];
        if (a.labels[ix] >= 0 && b.labels[ix] < 0) ++r.violations;
    }
    r.violation_fraction =
        r.total_pixels == 0 ? 0.0 : static_cast<double>(r.violations) / r.total_pixels;
    return r;
}

// Flood fill (4-connectivity) of the end's pixel set from the pixels holding
// its cycle points.  Every cycle point of the end must land inside the
// window; points with a different phase seed nothing (their pixel carries a
// sibling label).
inline std::vector<std::uint8_t> immediate_basin_grid(const BasinGrid& grid, const Label& end) {
    const Cycle& cyc = grid.cycles.cycles.at(static_cast<std::size_t>(end.cycle_id));
    int target = grid.legend_index(end);
    std::vector<std::uint8_t> mask(grid.labels.size(), 0);
    std::deque<std::pair<int, int>> queue;
    for (const auto& p : cyc.points) {
        if (p.infinite)
            throw cycle_pixel_outside_window_error(
                "immediate_basin_grid: cycle point at infinity is outside the window");
        auto px = grid.spec.pixel_of(p.z);
        if (!px)
            throw cycle_pixel_outside_window_error("immediate_basin_grid: cycle point (" +
                                                   std::to_string(p.z.real()) + ", " +
                                                   std::to_string(p.z.imag()) +
                                                   ") is outside the window");
        auto [col, row] = *px;
        std::size_t ix = static_cast<std::size_t>(row) * grid.spec.width + col;
        if (grid.labels[ix] == target && !mask[ix]) {
            mask[ix] = 1;
            queue.emplace_back(col, row);
        }
    }
    while (!queue.empty()) {
        auto [col, row] = queue.front();
        queue.pop_front();
        const int dc[4] = {1, -1, 0, 0};
        const int dr[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            int nc = col + dc[k], nr = row + dr[k];
            if (nc < 0 || nc >= grid.spec.width || nr < 0 || nr >= grid.spec.height) continue;
            std::size_t ix = static_cast<std::size_t>(nr) * grid.spec.width + nc;
            if (!mask[ix] && grid.labels[ix] == target) {
                mask[ix] = 1;
                queue.emplace_back(nc, nr);
            }
        }
    }
    return mask;
}

// --- JSON forms ----------------------------------------------------------

inline nlohmann::json to_json(const SpherePoint& p) {
    if (p.infinite) return "inf";
    return nlohmann::json::array({p.z.real(), p.z.imag()});
}

inline nlohmann::json to_json(const Cycle& c) {
    nlohmann::json j;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : c.points) pts.push_back(to_json(p));
    j["points"] = pts;
    j["period"] = c.period;
    j["multiplier"] = nlohmann::json::array({c.multiplier.real(), c.multiplier.imag()});
    j["class"] = to_string(c.klass);
    j["residual"] = c.residual;
    return j;
}

inline nlohmann::json to_json(const CycleSet& s) {
    nlohmann::json j;
    j["period"] = s.period;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : s.cycles) cs.push_back(to_json(c));
    j["cycles"] = cs;
    return j;
}

inline nlohmann::json stats_json(const BasinGrid& grid) {
    nlohmann::json j;
    j["map"] = grid.map_text;
    j["period"] = grid.period;
    nlohmann::json g;
    g["width"] = grid.spec.width;
    g["height"] = grid.spec.height;
    g["window"] = nlohmann::json::array(
        {grid.spec.re_min, grid.spec.re_max, grid.spec.im_min, grid.spec.im_max});
    j["grid"] = g;
    j["cycles"] = to_json(grid.cycles)["cycles"];
    nlohmann::json labels = nlohmann::json::array();
    for (std::size_t k = 0; k < grid.legend.size(); ++k) {
        nlohmann::json l;
        l["cycle"] = grid.legend[k].cycle_id;
        l["phase"] = grid.legend[k].phase;
        l["pixels"] = grid.stats.label_pixels[k];
        labels.push_back(l);
    }
    j["labels"] = labels;
    j["unclassified_pixels"] = grid.stats.unclassified_pixels;
    j["total_pixels"] = grid.stats.total_pixels;
    j["undecided_fraction"] = grid.stats.undecided_fraction;
    j["iteration_histogram"] = grid.stats.iteration_histogram;
    return j;
}

// Grid file: the stats document plus the raw label array.
inline nlohmann::json to_json(const BasinGrid& grid) {
    nlohmann::json j = stats_json(grid);
    j["labels_raw"] = grid.labels;
    return j;
}

inline SpherePoint sphere_point_from_json(const nlohmann::json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return SpherePoint::infinity();
    if (j.is_array() && j.size() == 2)
        return SpherePoint::finite(cplx(j[0].get<double>(), j[1].get<double>()));
    throw parse_error("bad sphere point in grid file");
}

inline BasinGrid basin_grid_from_json(const nlohmann::json& j) {
    try {
        BasinGrid g;
        g.map_text = j.at("map").get<std::string>();
        g.period = j.at("period").get<int>();
        const auto& gg = j.at("grid");
        g.spec.width = gg.at("width").get<int>();
        g.spec.height = gg.at("height").get<int>();
        const auto& w = gg.at("window");
        g.spec.re_min = w.at(0).get<double>();
        g.spec.re_max = w.at(1).get<double>();
        g.spec.im_min = w.at(2).get<double>();
        g.spec.im_max = w.at(3).get<double>();
        g.cycles.period = g.period;
        for (const auto& cj : j.at("cycles")) {
            Cycle c;
            for (const auto& pj : cj.at("points")) c.points.push_back(sphere_point_from_json(pj));
            c.period = cj.at("period").get<int>();
            c.multiplier = cplx(cj.at("multiplier").at(0).get<double>(),
                                cj.at("multiplier").at(1).get<double>());
            c.residual = cj.at("residual").get<double>();
            std::string klass = cj.at("class").get<std::string>();
            c.klass = klass == "superattracting" ? CycleClass::Superattracting
                      : klass == "attracting"    ? CycleClass::Attracting
                      : klass == "repelling"     ? CycleClass::Repelling
                                                 : CycleClass::Indifferent;
            g.cycles.cycles.push_back(std::move(c));
        }
        g.stats.label_pixels.clear();
        for (const auto& lj : j.at("labels")) {
            g.legend.push_back({lj.at("cycle").get<int>(), lj.at("phase").get<int>()});
            g.stats.label_pixels.push_back(lj.at("pixels").get<long>());
        }
        g.labels = j.at("labels_raw").get<std::vector<std::int32_t>>();
        if (g.labels.size() != static_cast<std::size_t>(g.spec.width) * g.spec.height)
            throw parse_error("grid file label array does not match dimensions");
        g.stats.unclassified_pixels = j.at("unclassified_pixels").get<long>();
        g.stats.total_pixels = j.at("total_pixels").get<long>();
        g.stats.undecided_fraction = j.at("undecided_fraction").get<double>();
        g.stats.iteration_histogram = j.at("iteration_histogram").get<std::vector<long>>();
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad grid file: ") + e.what());
    }
}

} // namespace exdyn::sphere
