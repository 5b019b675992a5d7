// exdyn: exterior-space analysis of discrete semi-flows.
//
//   exdyn finite analyze --input g.json --out report.json
//   exdyn finite verify  --max-size 5 --trials 1000 --seed 42 --out summary.json
//   exdyn cycles --map "z^2-1" --period 2 --out cycles.json
//   exdyn basins --map "z^2-1" --period 2 --grid 800x800 --window=-2,2,-2,2
//                --out basins.ppm --stats stats.json [--grid-out p2.grid]
//   exdyn refine --a p1.grid --b p2.grid --out refine.json
//
// Exit codes: 0 on success (including checks that fail only where their
// hypotheses fail), 1 when a check fails with hypotheses satisfied, 2 for
// unusable input.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <exdyn/errors.hpp>
#include <exdyn/pipeline.hpp>

namespace {

exdyn::sphere::GridSpec parse_grid_spec(const std::string& grid, const std::string& window) {
    exdyn::sphere::GridSpec spec;
    {
        std::size_t x = grid.find('x');
        if (x == std::string::npos) x = grid.find('X');
        if (x == std::string::npos)
            throw exdyn::parse_error("--grid must look like 800x800");
        try {
            spec.width = std::stoi(grid.substr(0, x));
            spec.height = std::stoi(grid.substr(x + 1));
        } catch (...) {
            throw exdyn::parse_error("--grid must look like 800x800");
        }
        if (spec.width <= 0 || spec.height <= 0)
            throw exdyn::parse_error("--grid dimensions must be positive");
    }
    {
        std::vector<double> vals;
        std::size_t start = 0;
        while (start <= window.size()) {
            std::size_t comma = window.find(',', start);
            std::string item =
                window.substr(start, comma == std::string::npos ? comma : comma - start);
            try {
                std::size_t used = 0;
                vals.push_back(std::stod(item, &used));
                if (used != item.size()) throw exdyn::parse_error("");
            } catch (...) {
                throw exdyn::parse_error("--window must be re_min,re_max,im_min,im_max");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (vals.size() != 4)
            throw exdyn::parse_error("--window must be re_min,re_max,im_min,im_max");
        spec.re_min = vals[0];
        spec.re_max = vals[1];
        spec.im_min = vals[2];
        spec.im_max = vals[3];
        if (spec.re_min >= spec.re_max || spec.im_min >= spec.im_max)
            throw exdyn::parse_error("--window must have re_min < re_max and im_min < im_max");
    }
    return spec;
}

void add_classify_flags(CLI::App* cmd, exdyn::sphere::ClassifyParams& params) {
    cmd->add_option("--max-iterations", params.max_iterations, "iteration budget per point");
    cmd->add_option("--capture-radius", params.capture_radius, "chordal capture radius");
    cmd->add_option("--confirm-factor", params.confirm_factor,
                    "confirmation steps per cycle period");
    cmd->add_option("--escape-modulus", params.escape_modulus,
                    "escape radius (0 = derive from the coefficients)");
    cmd->add_option("--root-tol", params.root_tolerance, "residual bound for cycle roots");
    cmd->add_option("--dedup-tol", params.dedup_tolerance, "root clustering tolerance");
    cmd->add_option("--degree-cap", params.cycle_degree_cap, "cap on deg(h^n)");
    cmd->add_option("--threads", params.threads, "worker threads (0 = hardware)");
    cmd->add_flag("--supersample", params.supersample, "2x2 supersampling per pixel");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exterior-space analysis of discrete semi-flows"};
    app.require_subcommand(1);

    // --- finite ---
    CLI::App* finite = app.add_subcommand("finite", "finite-space engine");
    finite->require_subcommand(1);

    std::string analyze_input, analyze_out;
    CLI::App* analyze = finite->add_subcommand("analyze", "region report for one flow");
    analyze->add_option("--input", analyze_input, "input JSON")->required();
    analyze->add_option("--out", analyze_out, "report JSON destination")->required();

    int verify_max_size = 5, verify_trials = 1000;
    std::uint64_t verify_seed = 42;
    std::string verify_out;
    CLI::App* verify = finite->add_subcommand("verify", "exhaustive + randomized check sweep");
    verify->add_option("--max-size", verify_max_size, "largest discrete space to enumerate");
    verify->add_option("--trials", verify_trials, "random non-T1 instances");
    verify->add_option("--seed", verify_seed, "random seed");
    verify->add_option("--out", verify_out, "summary JSON destination")->required();

    // --- cycles ---
    std::string cycles_map, cycles_out;
    int cycles_period = 1;
    exdyn::sphere::ClassifyParams cycles_params;
    CLI::App* cycles = app.add_subcommand("cycles", "n-periodic cycles of a polynomial map");
    cycles->add_option("--map", cycles_map, "polynomial, e.g. \"z^2-1\" or \"-1,0,1\"")->required();
    cycles->add_option("--period", cycles_period, "period n")->required();
    cycles->add_option("--out", cycles_out, "cycles JSON destination")->required();
    add_classify_flags(cycles, cycles_params);

    // --- basins ---
    std::string basins_map, basins_grid = "800x800", basins_window = "-2,2,-2,2";
    std::string basins_out, basins_stats, basins_grid_out, basins_palette;
    int basins_period = 1;
    exdyn::sphere::ClassifyParams basins_params;
    CLI::App* basins = app.add_subcommand("basins", "per-pixel trajectory-end raster");
    basins->add_option("--map", basins_map, "polynomial map")->required();
    basins->add_option("--period", basins_period, "period n");
    basins->add_option("--grid", basins_grid, "WIDTHxHEIGHT");
    basins->add_option("--window", basins_window, "re_min,re_max,im_min,im_max");
    basins->add_option("--out", basins_out, "PPM destination");
    basins->add_option("--stats", basins_stats, "stats JSON destination");
    basins->add_option("--grid-out", basins_grid_out, "grid file destination (for refine)");
    basins->add_option("--palette", basins_palette, "palette override JSON");
    add_classify_flags(basins, basins_params);

    // --- refine ---
    std::string refine_a, refine_b, refine_out;
    CLI::App* refine = app.add_subcommand("refine", "compare two stored grids");
    refine->add_option("--a", refine_a, "coarse grid file")->required();
    refine->add_option("--b", refine_b, "fine grid file")->required();
    refine->add_option("--out", refine_out, "refinement JSON destination")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            auto result = exdyn::pipeline::run_finite_analyze(
                exdyn::pipeline::parse_json_file(analyze_input));
            exdyn::pipeline::spill(analyze_out, result.report.dump(2) + "\n");
            if (!result.ok) {
                std::cerr << "exdyn: a check failed with its hypotheses satisfied\n";
                return 1;
            }
        } else if (verify->parsed()) {
            auto result =
                exdyn::pipeline::run_finite_verify(verify_max_size, verify_trials, verify_seed);
            exdyn::pipeline::spill(verify_out, result.summary.dump(2) + "\n");
            if (!result.ok) {
                std::cerr << "exdyn: sweep found failures with hypotheses satisfied\n";
                return 1;
            }
        } else if (cycles->parsed()) {
            nlohmann::json j = exdyn::pipeline::run_cycles(cycles_map, cycles_period, cycles_params);
            exdyn::pipeline::spill(cycles_out, j.dump(2) + "\n");
        } else if (basins->parsed()) {
            exdyn::pipeline::BasinsRequest req;
            req.map_text = basins_map;
            req.period = basins_period;
            req.spec = parse_grid_spec(basins_grid, basins_window);
            req.params = basins_params;
            req.out_ppm = basins_out;
            req.out_stats = basins_stats;
            req.out_grid = basins_grid_out;
            if (!basins_palette.empty())
                req.palette_override = exdyn::pipeline::parse_json_file(basins_palette);
            exdyn::pipeline::run_basins(req);
        } else if (refine->parsed()) {
            nlohmann::json j = exdyn::pipeline::run_refine(refine_a, refine_b);
            exdyn::pipeline::spill(refine_out, j.dump(2) + "\n");
        }
    } catch (const exdyn::parse_error& e) {
        std::cerr << "exdyn: " << e.what() << "\n";
        return 2;
    } catch (const exdyn::io_error& e) {
        std::cerr << "exdyn: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "exdyn: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
