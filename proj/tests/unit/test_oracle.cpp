#include "doctest.h"

#include <algorithm>

#include "cards/errors.hpp"
#include "cards/oracle.hpp"

using namespace cards;
using namespace cards::oracle;

namespace {

Configuration cfg(const char* text) { return Configuration::parse(text); }

}  // namespace

TEST_CASE("enumerate_paths lists the two worked paths") {
    const TransitionGraph g = build_graph(make_params(6, 3));
    const PathEnumeration e =
        enumerate_paths(g, cfg("4,1,1"), cfg("2,2,2"), true);
    REQUIRE(e.paths.size() == 2);
    CHECK(e.paths[0] == std::vector<int>{1, 1, 2});
    CHECK(e.paths[1] == std::vector<int>{1, 2, 1});

    // Replay every listed path independently.
    for (const auto& path : e.paths) {
        Configuration cur = e.source;
        for (int pos : path) cur = apply_move(cur, pos);
        CHECK(cur == e.target);
    }
}

TEST_CASE("enumerate_paths edge cases") {
    const TransitionGraph g = build_graph(make_params(6, 3));
    const PathEnumeration self =
        enumerate_paths(g, cfg("4,1,1"), cfg("4,1,1"), true);
    REQUIRE(self.paths.size() == 1);
    CHECK(self.paths[0].empty());
    CHECK_FALSE(self.unreachable());

    const PathEnumeration none =
        enumerate_paths(g, cfg("2,2,2"), cfg("4,1,1"), true);
    CHECK(none.paths.empty());
    CHECK(none.unreachable());

    PathCaps tiny;
    tiny.max_paths = 1;
    CHECK_THROWS_AS(
        enumerate_paths(g, cfg("4,1,1"), cfg("2,2,2"), true, tiny),
        CapExceeded);
}

TEST_CASE("enumerate_paths walk mode sees circuits") {
    const TransitionGraph g = build_graph(make_params(3, 2));
    // (2,1) -> (1,2) -> (2,1): the dual circuit yields ever longer walks.
    PathCaps caps;
    caps.max_length = 7;
    const PathEnumeration walks =
        enumerate_paths(g, cfg("2,1"), cfg("2,1"), false, caps);
    // Lengths 0, 2, 4, 6 within the cap.
    CHECK(walks.paths.size() == 4);
    const PathEnumeration strict =
        enumerate_paths(g, cfg("2,1"), cfg("2,1"), true, caps);
    CHECK(strict.paths.size() == 1);
}

TEST_CASE("verify_termination") {
    CHECK(verify_termination(make_params(6, 3)).passed());
    CHECK(verify_termination(make_params(0, 2)).passed());
    CHECK(verify_termination(make_params(6, 4)).passed());
    CHECK(verify_termination(make_params(10, 5)).passed());
}

TEST_CASE("verify_dual_characterization") {
    const VerificationOutcome v64 =
        verify_dual_characterization(make_params(6, 4));
    CHECK(v64.passed());
    CHECK(v64.instances_checked == 84);
    CHECK(verify_dual_characterization(make_params(6, 3)).passed());
    CHECK(verify_dual_characterization(make_params(0, 2)).passed());
}

TEST_CASE("verify_scc_theorem") {
    CHECK(verify_scc_theorem(make_params(6, 4)).passed());
    CHECK(verify_scc_theorem(make_params(6, 3)).passed());
    CHECK(verify_scc_theorem(make_params(0, 2)).passed());
}

TEST_CASE("negative control: a corrupted dual rule is caught") {
    Hooks hooks;
    hooks.is_dual = [](const GameParams& params, const Configuration& a) {
        // Deliberately misses the canonical dual.
        return is_dual(a, params) && !(a == canonical_dual(params));
    };
    const VerificationOutcome outcome =
        verify_scc_theorem(make_params(6, 4), hooks);
    CHECK_FALSE(outcome.passed());
    CHECK_FALSE(outcome.failures.empty());
    CHECK_FALSE(verify_dual_characterization(make_params(6, 4), hooks)
                    .passed());
}

TEST_CASE("negative control: a corrupted time formula is caught") {
    Hooks hooks;
    hooks.play_time = [](const GameParams& params, const Configuration& a) {
        return time_to_target(params, a) + 1;
    };
    const VerificationOutcome q0 =
        verify_convergence_formulas(make_params(4, 2), hooks);
    CHECK_FALSE(q0.passed());
    const VerificationOutcome q1 =
        verify_convergence_formulas(make_params(5, 2), hooks);
    CHECK_FALSE(q1.passed());
}

TEST_CASE("verify_dual_reachability") {
    CHECK(verify_dual_reachability(make_params(6, 4)).passed());
    CHECK(verify_dual_reachability(make_params(7, 3)).passed());
    CHECK(verify_dual_reachability(make_params(6, 3)).passed());  // vacuous
}

TEST_CASE("verify_shot_uniqueness at the worked origins") {
    const VerificationOutcome a =
        verify_shot_uniqueness(make_params(6, 3), cfg("4,1,1"));
    CHECK(a.passed());
    CHECK(a.instances_checked == 5);

    const VerificationOutcome fixed =
        verify_shot_uniqueness(make_params(6, 3), cfg("2,2,2"));
    CHECK(fixed.passed());
    CHECK(fixed.instances_checked == 1);

    CHECK(verify_shot_uniqueness(make_params(6, 4), cfg("6,0,0,0")).passed());

    // A dual origin has no non-dual targets at all.
    const VerificationOutcome dual =
        verify_shot_uniqueness(make_params(6, 4), cfg("2,2,1,1"));
    CHECK(dual.passed());
    CHECK(dual.instances_checked == 0);
}

TEST_CASE("verify_shot_uniqueness label-set mode agrees with enumeration") {
    const GameParams params = make_params(6, 4);
    PathCaps forced;
    forced.max_paths = 0;  // force the label-set closure
    for (const Configuration& origin : enumerate_configurations(params)) {
        const VerificationOutcome closure =
            verify_shot_uniqueness(params, origin, forced);
        CHECK(closure.passed());
    }
    PathCaps strict;
    strict.max_paths = 0;
    const VerificationOutcome inconclusive =
        verify_shot_uniqueness(params, cfg("6,0,0,0"), strict, true);
    CHECK(inconclusive.inconclusive);
    CHECK_FALSE(inconclusive.passed());
}

TEST_CASE("verify_order_characterization") {
    const VerificationOutcome a =
        verify_order_characterization(make_params(6, 3), cfg("4,1,1"));
    CHECK(a.passed());
    CHECK(a.instances_checked == 20);  // 5 elements, ordered pairs

    CHECK(verify_order_characterization(make_params(6, 4), cfg("3,2,1,0"))
              .passed());
    const VerificationOutcome single =
        verify_order_characterization(make_params(6, 3), cfg("2,2,2"));
    CHECK(single.passed());
    CHECK(single.instances_checked == 0);
}

TEST_CASE("verify_lattice") {
    CHECK(verify_lattice(make_params(6, 3), cfg("4,1,1")).passed());
    CHECK(verify_lattice(make_params(6, 4), cfg("6,0,0,0")).passed());
    CHECK(verify_lattice(make_params(6, 3), cfg("2,2,2")).passed());
}

TEST_CASE("verify_convergence_formulas") {
    const VerificationOutcome q0 =
        verify_convergence_formulas(make_params(6, 3));
    CHECK(q0.passed());
    CHECK(q0.instances_checked > 28);  // many plays across 28 origins

    CHECK(verify_convergence_formulas(make_params(6, 4)).passed());
    CHECK(verify_convergence_formulas(make_params(0, 2)).passed());
    CHECK(verify_convergence_formulas(make_params(7, 3)).passed());
}

TEST_CASE("the recurrence bound is not universal") {
    // At (3,4), bound((2,0,1,0)) = 1 + 3*1 + 1 = 5, yet the legal play
    // 3,1,2,1,4 visits six distinct configurations, ending at (1,1,1,0).
    // The walk enumeration must find that refutation.
    oracle::ConvergenceCaps caps;
    caps.check_paths = false;
    const auto refuted =
        verify_convergence_formulas(make_params(3, 4), {}, caps);
    CHECK_FALSE(refuted.passed());
    bool witnessed = false;
    for (const auto& failure : refuted.failures) {
        if (failure.find("origin=2,0,1,0") != std::string::npos) {
            witnessed = true;
        }
    }
    CHECK(witnessed);

    // Replay the frozen counterexample for good measure.
    Configuration walk = cfg("2,0,1,0");
    std::vector<Configuration> seen{walk};
    for (int pos : {3, 1, 2, 1, 4}) {
        walk = apply_move(walk, pos);
        seen.push_back(walk);
    }
    CHECK(walk == cfg("1,1,1,0"));
    CHECK(recurrence_bound(make_params(3, 4), cfg("2,0,1,0")) == 5);
    for (std::size_t i = 0; i < seen.size(); ++i) {
        for (std::size_t j = i + 1; j < seen.size(); ++j) {
            CHECK(seen[i] != seen[j]);
        }
    }

    // The bound does hold, exhaustively, at (6,4) and (7,3).
    CHECK(verify_convergence_formulas(make_params(6, 4), {}, caps).passed());
    CHECK(verify_convergence_formulas(make_params(7, 3), {}, caps).passed());
}

TEST_CASE("verify_dominance") {
    CHECK(verify_dominance(make_params(6, 4)).passed());
    CHECK(verify_dominance(make_params(7, 3)).passed());
    CHECK(verify_dominance(make_params(6, 3)).passed());  // vacuous
}

TEST_CASE("sweep determinism") {
    SweepOptions options;
    options.max_n = 4;
    options.max_p = 3;
    const auto first = run_sweep(options);
    const auto second = run_sweep(options);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].check == second[i].check);
        CHECK(first[i].instances_checked == second[i].instances_checked);
        CHECK(first[i].failures == second[i].failures);
        CHECK(first[i].inconclusive == second[i].inconclusive);
        CHECK(first[i].passed());
    }
}
