// Acceptance suite: end-to-end checks of the library's headline guarantees.
// Each criterion prints exactly one PASS/FAIL line; the exit status is the
// number of failed criteria.  All tolerances and budgets are pinned here.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <exdyn/finite/ends.hpp>
#include <exdyn/finite/report.hpp>
#include <exdyn/finite/sweep.hpp>
#include <exdyn/pipeline.hpp>
#include <exdyn/sphere/classify.hpp>
#include <exdyn/sphere/cycles.hpp>
#include <exdyn/sphere/grid.hpp>

namespace fs = std::filesystem;
using namespace exdyn;
using namespace exdyn::finite;
using namespace exdyn::sphere;

namespace {

int g_failures = 0;

void report(int number, bool pass, const std::string& text) {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << number << "  " << text << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int digits = 2) {
    std::ostringstream ss;
    ss.precision(digits);
    ss << std::fixed << v;
    return ss.str();
}

// ---- criteria 1 and 2: exhaustive sweep over discrete spaces -------------

void criteria_1_and_2() {
    const int max_size = 5;
    const double budget_seconds = 10.0;
    auto t0 = std::chrono::steady_clock::now();

    long maps = 0, limit_mismatches = 0, bar_mismatches = 0;
    for (int n = 1; n <= max_size; ++n) {
        FiniteTopology topo = FiniteTopology::discrete(n);
        std::vector<int> map(static_cast<std::size_t>(n), 0);
        for (;;) {
            FiniteSemiFlow flow(map);
            Externology ext = Externology::right_absorbing(flow, topo);
            if (limit_space(ext, topo) != flow.periodic_points()) ++limit_mismatches;
            if (bar_limit_space(ext, topo) != topo.closure(omega_limit_all(flow, topo)))
                ++bar_mismatches;
            ++maps;
            int i = 0;
            while (i < n && ++map[static_cast<std::size_t>(i)] == n) map[static_cast<std::size_t>(i++)] = 0;
            if (i == n) break;
        }
    }
    double elapsed = seconds_since(t0);

    bool c1 = maps == 3413 && limit_mismatches == 0 && elapsed < budget_seconds;
    report(1, c1,
           "periodic points equal the limit space on every discrete flow up to 5 points (" +
               std::to_string(maps) + " maps, " + std::to_string(limit_mismatches) +
               " mismatches, " + fmt(elapsed) + "s, single thread)");
    bool c2 = maps == 3413 && bar_mismatches == 0 && elapsed < budget_seconds;
    report(2, c2,
           "bar-limit equals the closure of the global omega-limit on the same sweep (" +
               std::to_string(bar_mismatches) + " mismatches)");
}

// ---- criterion 3: the hypothesis-violation witness ------------------------

void criterion_3() {
    FiniteTopology topo = sierpinski_topology();
    FiniteSemiFlow flow = sierpinski_flow();
    RegionReport rep = build_region_report(flow, topo);

    bool witness_ok = rep.limit == point_set{0, 1} && rep.periodic == point_set{1};
    const TheoremCheck& check = rep.theorems.at("periodic_points_equal_limit");
    bool flagged = !check.holds && !check.hypothesis_satisfied;
    bool clean_report = !has_hypothesis_satisfied_failure(rep.theorems);

    SweepSummary sweep = finite_verify(4, 500, 42);
    bool sweep_ok =
        sweep.failures_hypothesis_satisfied == 0 && sweep.failures_hypothesis_violated >= 1;

    report(3, witness_ok && flagged && clean_report && sweep_ok,
           "two-point counterexample separates L from P only under violated hypotheses "
           "(sweep: " +
               std::to_string(sweep.failures_hypothesis_satisfied) + " genuine / " +
               std::to_string(sweep.failures_hypothesis_violated) + " informational failures)");
}

// ---- criterion 4: cycle inventory of z^2 - 1 ------------------------------

void criterion_4() {
    const double tol = 1e-9;
    const double budget_seconds = 1.0;
    const double sqrt5 = std::sqrt(5.0);
    const cplx phi_minus((1.0 - sqrt5) / 2.0, 0.0);
    const cplx phi_plus((1.0 + sqrt5) / 2.0, 0.0);

    auto t0 = std::chrono::steady_clock::now();
    ComplexMapSpec map = ComplexMapSpec::parse("z^2-1");
    CycleSet fixed = find_cycles(map, 1);
    CycleSet pairs = find_cycles(map, 2);
    double elapsed = seconds_since(t0);

    bool ok = elapsed < budget_seconds;
    ok = ok && fixed.cycles.size() == 3;
    ok = ok && std::abs(fixed.cycles[1].points[0].z - phi_minus) < tol;
    ok = ok && std::abs(fixed.cycles[2].points[0].z - phi_plus) < tol;
    ok = ok && std::abs(std::abs(fixed.cycles[1].multiplier) - (sqrt5 - 1.0)) < tol;
    ok = ok && std::abs(std::abs(fixed.cycles[2].multiplier) - (sqrt5 + 1.0)) < tol;
    ok = ok && fixed.cycles[1].klass == CycleClass::Repelling;
    ok = ok && fixed.cycles[2].klass == CycleClass::Repelling;

    auto pts = pairs.all_points();
    ok = ok && pts.size() == 5 && pts[0].infinite;
    ok = ok && std::abs(pts[1].z - phi_minus) < tol;
    ok = ok && std::abs(pts[2].z - phi_plus) < tol;
    ok = ok && std::abs(pts[3].z - cplx(-1, 0)) < tol;
    ok = ok && std::abs(pts[4].z - cplx(0, 0)) < tol;
    ok = ok && pairs.cycles.size() == 4 && pairs.cycles[3].period == 2;
    ok = ok && std::abs(pairs.cycles[3].multiplier) < tol;
    ok = ok && pairs.cycles[3].klass == CycleClass::Superattracting;

    report(4, ok,
           "cycle inventory of z^2-1 matches the golden-ratio constants to 1e-9 (" +
               fmt(elapsed, 3) + "s)");
}

// ---- criterion 5: the 800x800 basin grids ---------------------------------

void criterion_5() {
    const double budget_seconds = 30.0;
    GridSpec spec{800, 800, -2.0, 2.0, -2.0, 2.0};
    ClassifyParams params;
    params.threads = 8;
    ComplexMapSpec map = ComplexMapSpec::parse("z^2-1");

    auto t0 = std::chrono::steady_clock::now();
    BasinGrid p1 = compute_basins(map, spec, 1, params);
    BasinGrid p2 = compute_basins(map, spec, 2, params);
    double elapsed = seconds_since(t0);

    const long total = p1.stats.total_pixels;
    bool escape_nonempty = p1.stats.label_pixels[0] > 0 && p2.stats.label_pixels[0] > 0;

    // fixed-point basins must be negligible: strictly under 0.01% of pixels
    long fixed_pixels = 0;
    for (std::size_t k = 0; k < p1.legend.size(); ++k) {
        const Cycle& c = p1.cycles.cycles[static_cast<std::size_t>(p1.legend[k].cycle_id)];
        if (!c.contains_infinity() && c.period == 1) fixed_pixels += p1.stats.label_pixels[k];
    }
    bool fixed_sparse = fixed_pixels < total / 10000;

    // of the pixels period 1 leaves unclassified, at least 95% pick up a
    // phase of the two-cycle at period 2
    int two_cycle_id = -1;
    for (std::size_t c = 0; c < p2.cycles.cycles.size(); ++c)
        if (p2.cycles.cycles[c].period == 2) two_cycle_id = static_cast<int>(c);
    long undecided = 0, recovered = 0;
    for (std::size_t ix = 0; ix < p1.labels.size(); ++ix) {
        if (p1.labels[ix] >= 0) continue;
        ++undecided;
        std::int32_t l2 = p2.labels[ix];
        if (l2 >= 0 && p2.legend[static_cast<std::size_t>(l2)].cycle_id == two_cycle_id)
            ++recovered;
    }
    bool phases_cover = undecided > 0 && recovered * 100 >= undecided * 95;

    RefinementStats refine = refinement_check(p1, p2);
    bool refine_ok = refine.violation_fraction < 0.001;

    bool ok = escape_nonempty && fixed_sparse && phases_cover && refine_ok &&
              elapsed < budget_seconds;
    report(5, ok,
           "800x800 grids: escape " + std::to_string(p1.stats.label_pixels[0]) +
               "px, fixed-point basins " + std::to_string(fixed_pixels) + "px, phase coverage " +
               std::to_string(recovered) + "/" + std::to_string(undecided) + ", refinement " +
               std::to_string(refine.violations) + " violations, " + fmt(elapsed) + "s");
}

// ---- criterion 6: randomized finite flows ---------------------------------

bool check_random_instance(std::mt19937_64& gen, std::string& why) {
    int n = 3 + rnd::below(gen, 6); // sizes 3..8
    bool discrete = rnd::chance(gen, 0.5);
    FiniteTopology topo =
        discrete ? FiniteTopology::discrete(n) : rnd::random_preorder(gen, n, 1.5 / n);
    FiniteSemiFlow flow = rnd::random_monotone_map(gen, topo);
    Externology ext = Externology::neighborhood_of(topo, flow.periodic_points());

    // trajectory ends are equivariant: the induced map advances the phase
    for (int x = 0; x < n; ++x) {
        auto end = omega_end(ext, flow, topo, x);
        auto next = omega_end(ext, flow, topo, flow.step(x));
        if (end.has_value() != next.has_value() || (end && !(*next == end->advanced()))) {
            why = "end equivariance broke at x=" + std::to_string(x);
            return false;
        }
    }

    // stable-component ends are constant along trajectories
    for (int x = 0; x < n; ++x)
        if (cech_end(ext, flow, topo, x) != cech_end(ext, flow, topo, flow.step(x))) {
            why = "stable-component end not orbit-constant at x=" + std::to_string(x);
            return false;
        }

    // basins partition the d-region
    point_set d = d_region(ext, flow, topo);
    point_set covered;
    for (const auto& [end, pts] : basins(ext, flow, topo)) {
        if (pts.empty() || intersects(covered, pts)) {
            why = "basins overlap or are empty";
            return false;
        }
        covered = set_union(covered, pts);
    }
    if (covered != d) {
        why = "basins do not cover the d-region";
        return false;
    }

    // attraction identities for a random S
    point_set s;
    for (int i = 0; i < n; ++i)
        if (rnd::chance(gen, 0.4)) s.insert(i);
    AttractionRegions rg = regions(flow, topo, s);
    AttractionRegions rg0 = regions(flow, topo, point_set{});
    if (rg.full != set_intersection(rg.pseudo, rg.weak)) {
        why = "A(S) != PA(S) intersect WA(S)";
        return false;
    }
    if (rg.pseudo != set_union(rg0.pseudo, rg.full) || intersects(rg0.pseudo, rg.full)) {
        why = "PA(S) does not split into PA(empty) and A(S)";
        return false;
    }
    return true;
}

void criterion_6() {
    const int trials = 1000;
    std::mt19937_64 gen(20260815ull);
    int failures = 0;
    std::string first_why;
    for (int t = 0; t < trials; ++t) {
        std::string why;
        if (!check_random_instance(gen, why)) {
            if (failures == 0) first_why = "trial " + std::to_string(t) + ": " + why;
            ++failures;
        }
    }
    report(6, failures == 0,
           "1000 random flows with neighborhood externologies: ends, basins and attraction "
           "identities (" +
               std::to_string(failures) + " failures" +
               (failures ? ", first: " + first_why : std::string()) + ")");
}

// ---- criterion 7: byte-stable artifacts vs the committed goldens ----------

void criterion_7() {
    fs::path tmp = fs::temp_directory_path() / "exdyn_acceptance";
    fs::create_directories(tmp);

    auto run = [&](const std::string& tag) {
        pipeline::BasinsRequest req;
        req.map_text = "z^2-1";
        req.period = 2;
        req.spec = GridSpec{200, 200, -2.0, 2.0, -2.0, 2.0};
        req.params.threads = 2;
        req.out_ppm = tmp / ("basins_" + tag + ".ppm");
        req.out_stats = tmp / ("stats_" + tag + ".json");
        pipeline::run_basins(req);
        return std::make_pair(pipeline::slurp(req.out_ppm), pipeline::slurp(req.out_stats));
    };

    auto [ppm_a, stats_a] = run("a");
    auto [ppm_b, stats_b] = run("b");
    bool repeatable = ppm_a == ppm_b && stats_a == stats_b;

    fs::path golden_dir(EXDYN_GOLDEN_DIR);
    bool golden_found = fs::exists(golden_dir / "basilica_p2_200.ppm") &&
                        fs::exists(golden_dir / "basilica_p2_200.json");
    bool golden_match = false;
    if (golden_found)
        golden_match = ppm_a == pipeline::slurp(golden_dir / "basilica_p2_200.ppm") &&
                       stats_a == pipeline::slurp(golden_dir / "basilica_p2_200.json");

    fs::remove_all(tmp);
    report(7, repeatable && golden_found && golden_match,
           std::string("repeated 200x200 runs are byte-identical") +
               (repeatable ? "" : " [differ!]") + " and match the committed goldens" +
               (golden_found ? (golden_match ? "" : " [mismatch!]") : " [goldens missing]"));
}

} // namespace

int main() {
    criteria_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    std::cout << (7 - g_failures) << "/7 criteria passed" << std::endl;
    return g_failures;
}
