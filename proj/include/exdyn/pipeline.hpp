#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include <exdyn/errors.hpp>
#include <exdyn/finite/json_io.hpp>
#include <exdyn/finite/report.hpp>
#include <exdyn/finite/sweep.hpp>
#include <exdyn/render/image.hpp>
#include <exdyn/render/palette.hpp>
#include <exdyn/sphere/grid.hpp>

// End-to-end runs shared by the command-line tool and the acceptance suite,
// so that "what the tool writes" is a single code path.
namespace exdyn::pipeline {

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline void spill(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path.string() + " for writing");
    f << text;
    if (!f) throw io_error("failed writing " + path.string());
}

inline nlohmann::json parse_json_file(const std::filesystem::path& path) {
    nlohmann::json j = nlohmann::json::parse(slurp(path), nullptr, false);
    if (j.is_discarded()) throw parse_error(path.string() + " is not valid JSON");
    return j;
}

// `finite analyze`: full region report for one flow.  Returns the report
// JSON; `ok` is false when some check failed with its hypotheses satisfied
// (the CLI exits nonzero in that case).
struct AnalyzeResult {
    nlohmann::json report;
    bool ok = true;
};

inline AnalyzeResult run_finite_analyze(const nlohmann::json& input) {
    finite::FiniteInput in = finite::parse_finite_input(input);
    finite::ValidationIssue issue = finite::validate(in.flow, in.topo);
    if (issue.kind == finite::ValidationIssue::Kind::SizeMismatch)
        throw parse_error("map and topology sizes differ");
    if (issue.kind == finite::ValidationIssue::Kind::NotContinuous)
        throw parse_error("map is not continuous: " + std::to_string(issue.x) + " lies in min_open(" +
                          std::to_string(issue.y) + ") but map[" + std::to_string(issue.x) +
                          "] is not in min_open(map[" + std::to_string(issue.y) + "])");
    finite::RegionReport report = finite::build_region_report(in.flow, in.topo, in.s);
    return {finite::to_json(report), !finite::has_hypothesis_satisfied_failure(report.theorems)};
}

// `finite verify`: exhaustive + randomized statement sweep.
struct VerifyResult {
    nlohmann::json summary;
    bool ok = true;
};

inline VerifyResult run_finite_verify(int max_size, int trials, std::uint64_t seed) {
    finite::SweepSummary s = finite::finite_verify(max_size, trials, seed);
    return {finite::to_json(s), s.failures_hypothesis_satisfied == 0};
}

// `cycles`: the n-periodic cycle inventory of a map.
inline nlohmann::json run_cycles(const std::string& map_text, int period,
                                 const sphere::ClassifyParams& params) {
    sphere::ComplexMapSpec map = sphere::ComplexMapSpec::parse(map_text);
    sphere::CycleSet cycles = sphere::find_cycles(map, period, params.root_tolerance,
                                                  params.dedup_tolerance, params.cycle_degree_cap);
    nlohmann::json j = sphere::to_json(cycles);
    j["map"] = map_text;
    j["degree"] = map.degree();
    return j;
}

// `basins`: compute the grid and write the image plus optional side files.
struct BasinsRequest {
    std::string map_text;
    int period = 1;
    sphere::GridSpec spec;
    sphere::ClassifyParams params;
    std::filesystem::path out_ppm;                  // empty -> skip
    std::filesystem::path out_stats;                // empty -> skip
    std::filesystem::path out_grid;                 // empty -> skip
    std::optional<nlohmann::json> palette_override; // label -> [r,g,b]
};

inline sphere::BasinGrid run_basins(const BasinsRequest& req) {
    sphere::ComplexMapSpec map = sphere::ComplexMapSpec::parse(req.map_text);
    sphere::BasinGrid grid = sphere::compute_basins(map, req.spec, req.period, req.params);
    if (!req.out_ppm.empty()) {
        render::Palette palette = req.palette_override
                                      ? render::Palette::from_json(*req.palette_override, grid)
                                      : render::Palette::for_grid(grid);
        render::write_ppm(render::render(grid, palette), req.out_ppm);
    }
    if (!req.out_stats.empty()) spill(req.out_stats, sphere::stats_json(grid).dump(2) + "\n");
    if (!req.out_grid.empty()) spill(req.out_grid, sphere::to_json(grid).dump() + "\n");
    return grid;
}

// `refine`: label-refinement comparison of two stored grids.
inline nlohmann::json run_refine(const std::filesystem::path& a_path,
                                 const std::filesystem::path& b_path) {
    sphere::BasinGrid a = sphere::basin_grid_from_json(parse_json_file(a_path));
    sphere::BasinGrid b = sphere::basin_grid_from_json(parse_json_file(b_path));
    sphere::RefinementStats r = sphere::refinement_check(a, b);
    nlohmann::json j;
    j["total_pixels"] = r.total_pixels;
    j["violations"] = r.violations;
    j["violation_fraction"] = r.violation_fraction;
    auto legend_json = [](const std::vector<sphere::Label>& legend) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& l : legend)
            out.push_back(nlohmann::json{{"cycle", l.cycle_id}, {"phase", l.phase}});
        out.push_back("unclassified");
        return out;
    };
    j["a_legend"] = legend_json(r.a_legend);
    j["b_legend"] = legend_json(r.b_legend);
    j["table"] = r.table;
    return j;
}

} // namespace exdyn::pipeline
