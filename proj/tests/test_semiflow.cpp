#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include <exdyn/finite/semiflow.hpp>
#include <exdyn/finite/sweep.hpp>
#include <exdyn/finite/topology.hpp>

#include "support/oracles.hpp"

using exdyn::finite::FiniteSemiFlow;
using exdyn::finite::FiniteTopology;
using exdyn::finite::point_set;
using exdyn::finite::ValidationIssue;

TEST_CASE("maps must stay in range") {
    REQUIRE_THROWS_AS(FiniteSemiFlow({0, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(FiniteSemiFlow({-1}), std::invalid_argument);
}

TEST_CASE("a three-cycle with one tail") {
    FiniteSemiFlow flow({1, 2, 0, 0}); // 0 -> 1 -> 2 -> 0, 3 -> 0
    REQUIRE(flow.size() == 4);
    REQUIRE(flow.step(3) == 0);
    REQUIRE(flow.iterate(3, 0) == 3);
    REQUIRE(flow.iterate(0, 3) == 0);
    REQUIRE(flow.iterate(3, 4) == 0);

    REQUIRE(flow.terminal_cycle(3) == std::vector<int>{0, 1, 2});
    REQUIRE(flow.terminal_cycle(1) == std::vector<int>{0, 1, 2});
    REQUIRE(flow.terminal_cycle_set(3) == point_set{0, 1, 2});
    REQUIRE(flow.preperiod(3) == 1);
    REQUIRE(flow.preperiod(0) == 0);

    REQUIRE(flow.periodic_points() == point_set{0, 1, 2});
    REQUIRE(flow.fixed_points() == point_set{});
    REQUIRE(flow.m_periodic(1) == point_set{});
    REQUIRE(flow.m_periodic(3) == point_set{0, 1, 2});
    REQUIRE(flow.m_periodic(6) == point_set{0, 1, 2});
    REQUIRE(flow.m_cycles(3) == point_set{0, 1, 2});
    REQUIRE(flow.m_cycles(6) == point_set{});
}

TEST_CASE("fixed points are the one-periodic points") {
    FiniteSemiFlow flow({0, 1, 1});
    REQUIRE(flow.fixed_points() == point_set{0, 1});
    REQUIRE(flow.m_cycles(1) == point_set{0, 1});
    REQUIRE(flow.periodic_points() == point_set{0, 1});
    REQUIRE(flow.preperiod(2) == 1);
}

TEST_CASE("terminal cycles, preperiods and periodic points match brute force") {
    std::mt19937_64 gen(123);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + exdyn::finite::rnd::below(gen, 7);
        std::vector<int> map(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = exdyn::finite::rnd::below(gen, n);
        FiniteSemiFlow flow(map);

        point_set periodic_brute;
        for (int x = 0; x < n; ++x)
            for (int k = 1; k <= n; ++k)
                if (flow.iterate(x, k) == x) {
                    periodic_brute.insert(x);
                    break;
                }
        REQUIRE(flow.periodic_points() == periodic_brute);

        for (int x = 0; x < n; ++x) {
            auto tracked = oracle::tracked_end(flow, x);
            REQUIRE(flow.terminal_cycle(x) == tracked.cycle);

            const auto cyc = flow.terminal_cycle(x);
            const int per = static_cast<int>(cyc.size());
            // the cycle starts at its smallest point and closes under the map
            for (int i = 0; i < per; ++i) {
                REQUIRE(cyc[static_cast<std::size_t>(i)] >= cyc.front());
                REQUIRE(flow.step(cyc[static_cast<std::size_t>(i)]) ==
                        cyc[static_cast<std::size_t>((i + 1) % per)]);
            }

            // the preperiod is the least entry time into the cycle
            int p = flow.preperiod(x);
            point_set cyc_set(cyc.begin(), cyc.end());
            REQUIRE(exdyn::finite::contains(cyc_set, flow.iterate(x, p)));
            if (p > 0) REQUIRE_FALSE(exdyn::finite::contains(cyc_set, flow.iterate(x, p - 1)));
        }

        for (int m = 1; m <= n; ++m) {
            point_set pm;
            for (int x = 0; x < n; ++x)
                if (flow.iterate(x, m) == x) pm.insert(x);
            REQUIRE(flow.m_periodic(m) == pm);
        }
    }
}

TEST_CASE("every self-map of a discrete space is continuous") {
    FiniteTopology topo = FiniteTopology::discrete(3);
    REQUIRE(validate(FiniteSemiFlow({2, 0, 1}), topo).ok());
    REQUIRE(validate(FiniteSemiFlow({0, 0, 0}), topo).ok());
}

TEST_CASE("size mismatch is reported") {
    ValidationIssue issue = validate(FiniteSemiFlow({0, 1, 2}), FiniteTopology::discrete(2));
    REQUIRE(issue.kind == ValidationIssue::Kind::SizeMismatch);
    REQUIRE_FALSE(issue.ok());
}

TEST_CASE("the flip is the only discontinuous self-map of the two-point connected space") {
    FiniteTopology topo = FiniteTopology::from_min_open({{0}, {0, 1}});
    REQUIRE(validate(FiniteSemiFlow({0, 0}), topo).ok());
    REQUIRE(validate(FiniteSemiFlow({1, 1}), topo).ok());
    REQUIRE(validate(FiniteSemiFlow({0, 1}), topo).ok());

    ValidationIssue issue = validate(FiniteSemiFlow({1, 0}), topo);
    REQUIRE(issue.kind == ValidationIssue::Kind::NotContinuous);
    // witness: 0 lies in min_open(1) but map(0)=1 is not in min_open(map(1))={0}
    REQUIRE(issue.x == 0);
    REQUIRE(issue.y == 1);
}

TEST_CASE("monotone maps are exactly the continuous ones") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + exdyn::finite::rnd::below(gen, 4);
        FiniteTopology topo = exdyn::finite::rnd::random_preorder(gen, n, 1.5 / n);
        std::vector<int> map(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = exdyn::finite::rnd::below(gen, n);
        FiniteSemiFlow flow(map);

        // brute-force: continuity of a finite map is preservation of the
        // specialization order x <= y (x in closure {y}).
        bool monotone = true;
        for (int x = 0; x < n && monotone; ++x)
            for (int y = 0; y < n && monotone; ++y) {
                bool le = exdyn::finite::contains(topo.closure(point_set{y}), x);
                if (!le) continue;
                bool le_image = exdyn::finite::contains(
                    topo.closure(point_set{flow.step(y)}), flow.step(x));
                if (!le_image) monotone = false;
            }
        REQUIRE(validate(flow, topo).ok() == monotone);
    }
}
