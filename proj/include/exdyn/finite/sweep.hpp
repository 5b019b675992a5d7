#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include <exdyn/finite/semiflow.hpp>
#include <exdyn/finite/theorems.hpp>
#include <exdyn/finite/topology.hpp>

namespace exdyn::finite {

// Deterministic helpers for randomized instances.  Raw engine output is
// mapped to ranges explicitly (std::uniform_int_distribution is
// implementation-defined, which would break byte-stable summaries).
namespace rnd {

inline std::uint64_t next(std::mt19937_64& gen) { return gen(); }

inline int below(std::mt19937_64& gen, int n) {
    return static_cast<int>(next(gen) % static_cast<std::uint64_t>(n));
}

inline bool chance(std::mt19937_64& gen, double p) {
    return (next(gen) >> 11) * (1.0 / 9007199254740992.0) < p;
}

// Random preorder: transitive-reflexive closure of a sparse random relation.
// min_open(i) is the up-set of i, which is union-coherent by transitivity.
inline FiniteTopology random_preorder(std::mt19937_64& gen, int n, double edge_p) {
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) le[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && chance(gen, edge_p)) le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (le[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                for (int j = 0; j < n; ++j)
                    if (le[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                        le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    std::vector<point_set> mo(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) mo[static_cast<std::size_t>(i)].insert(j);
    return FiniteTopology::from_min_open(std::move(mo));
}

// Random continuous self-map: rejection-sample monotone maps, falling back
// to a constant map (always continuous) if unlucky.
inline FiniteSemiFlow random_monotone_map(std::mt19937_64& gen, const FiniteTopology& topo) {
    const int n = topo.size();
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<int> m(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = below(gen, n);
        FiniteSemiFlow flow(std::move(m));
        if (validate(flow, topo).ok()) return flow;
    }
    return FiniteSemiFlow(std::vector<int>(static_cast<std::size_t>(n), below(gen, n)));
}

} // namespace rnd

struct SweepCheckTally {
    long evaluated = 0;
    long held = 0;
    long failed_hypothesis_violated = 0;
    long failed_hypothesis_satisfied = 0;
};

struct SweepSummary {
    int max_size = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    long exhaustive_instances = 0; // sum over n <= max_size of n^n discrete flows
    long fixed_instances = 0;      // hand-picked non-T1 instances (Sierpinski flow)
    long random_instances = 0;
    long checks_evaluated = 0;
    long failures_hypothesis_violated = 0;
    long failures_hypothesis_satisfied = 0;
    std::map<std::string, SweepCheckTally> per_check;
};

namespace detail {

inline void tally(SweepSummary& s, const TheoremResults& results) {
    for (const auto& [name, check] : results) {
        SweepCheckTally& t = s.per_check[name];
        ++t.evaluated;
        ++s.checks_evaluated;
        if (check.holds) {
            ++t.held;
        } else if (check.hypothesis_satisfied) {
            ++t.failed_hypothesis_satisfied;
            ++s.failures_hypothesis_satisfied;
        } else {
            ++t.failed_hypothesis_violated;
            ++s.failures_hypothesis_violated;
        }
    }
}

} // namespace detail

// The two-point space with opens {}, {0}, {0,1} and the map 0->1, 1->1.
// Non-T1; the limit space of its right-absorbing externology is the whole
// space while only 1 is periodic, so it witnesses hypothesis-violation
// failures in every sweep.
inline FiniteTopology sierpinski_topology() {
    return FiniteTopology::from_min_open({{0}, {0, 1}});
}

inline FiniteSemiFlow sierpinski_flow() { return FiniteSemiFlow({1, 1}); }

// Exhaustive check of the statement suite over every self-map on 1..max_size
// points with the discrete topology, plus the fixed Sierpinski instance,
// plus `trials` random non-T1 preorder spaces with random continuous maps.
// Conclusions failing under satisfied hypotheses are genuine falsifications
// and must not occur.
inline SweepSummary finite_verify(int max_size, int trials, std::uint64_t seed) {
    SweepSummary s;
    s.max_size = max_size;
    s.trials = trials;
    s.seed = seed;

    for (int n = 1; n <= max_size; ++n) {
        FiniteTopology topo = FiniteTopology::discrete(n);
        std::vector<int> map(static_cast<std::size_t>(n), 0);
        for (;;) {
            detail::tally(s, theorem_suite(FiniteSemiFlow(map), topo));
            ++s.exhaustive_instances;
            int i = 0;
            while (i < n && ++map[static_cast<std::size_t>(i)] == n) map[static_cast<std::size_t>(i++)] = 0;
            if (i == n) break;
        }
    }

    detail::tally(s, theorem_suite(sierpinski_flow(), sierpinski_topology()));
    ++s.fixed_instances;

    std::mt19937_64 gen(seed);
    for (int t = 0; t < trials; ++t) {
        int n = 2 + rnd::below(gen, 5); // sizes 2..6
        FiniteTopology topo = rnd::random_preorder(gen, n, 1.5 / n);
        FiniteSemiFlow flow = rnd::random_monotone_map(gen, topo);
        detail::tally(s, theorem_suite(flow, topo));
        ++s.random_instances;
    }
    return s;
}

inline nlohmann::json to_json(const SweepSummary& s) {
    nlohmann::json j;
    j["max_size"] = s.max_size;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["exhaustive_instances"] = s.exhaustive_instances;
    j["fixed_instances"] = s.fixed_instances;
    j["random_instances"] = s.random_instances;
    j["checks_evaluated"] = s.checks_evaluated;
    j["failures_hypothesis_violated"] = s.failures_hypothesis_violated;
    j["failures_hypothesis_satisfied"] = s.failures_hypothesis_satisfied;
    nlohmann::json pc = nlohmann::json::object();
    for (const auto& [name, t] : s.per_check) {
        nlohmann::json c;
        c["evaluated"] = t.evaluated;
        c["held"] = t.held;
        c["failed_hypothesis_violated"] = t.failed_hypothesis_violated;
        c["failed_hypothesis_satisfied"] = t.failed_hypothesis_satisfied;
        pc[name] = c;
    }
    j["per_check"] = pc;
    return j;
}

} // namespace exdyn::finite
