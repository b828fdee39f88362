#include "doctest.h"

#include <numeric>
#include <random>

#include "cards/convergence.hpp"
#include "cards/errors.hpp"
#include "cards/graph.hpp"

using namespace cards;

namespace {

Configuration cfg(const char* text) { return Configuration::parse(text); }

// Independent replay: walk one maximal play, always firing the smallest
// enabled position, and count the steps.
std::int64_t replay_any_play(Configuration a) {
    std::int64_t steps = 0;
    while (true) {
        const auto enabled = enabled_positions(a);
        if (enabled.empty()) return steps;
        a = apply_move(a, enabled.front());
        ++steps;
    }
}

Configuration random_configuration(const GameParams& params,
                                   std::mt19937_64& rng) {
    std::vector<std::int64_t> cards(static_cast<std::size_t>(params.p), 0);
    std::uniform_int_distribution<int> bucket(0, params.p - 1);
    for (std::int64_t c = 0; c < params.n; ++c) cards[bucket(rng)] += 1;
    return Configuration(std::move(cards));
}

}  // namespace

TEST_CASE("inactive player is the first prefix-delta minimizer") {
    CHECK(inactive_player(cfg("0,0,6"), cfg("2,2,2")) == 2);
    CHECK(inactive_player(cfg("2,2,2"), cfg("2,2,2")) == 1);
    CHECK(inactive_player(cfg("3,2,1,0"), cfg("2,2,1,1")) == 4);
}

TEST_CASE("q=0 convergence time equals every replayed play length") {
    const GameParams params = make_params(6, 3);
    CHECK(convergence_time_q0(params, cfg("0,0,6")) == 6);
    CHECK(convergence_time_q0(params, cfg("2,2,2")) == 0);
    // d((6,0,0),(2,2,2)) = (4,2,0), so the formula gives 0 + 6.
    CHECK(convergence_time_q0(params, cfg("6,0,0")) == 6);
    CHECK(replay_any_play(cfg("6,0,0")) == 6);
    CHECK(replay_any_play(cfg("0,0,6")) == 6);

    // Formula equals replay for every origin at (6,3).
    for (const Configuration& origin : enumerate_configurations(params)) {
        CHECK(convergence_time_q0(params, origin) == replay_any_play(origin));
    }

    CHECK_THROWS_AS(convergence_time_q0(make_params(6, 4), cfg("3,2,1,0")),
                    ValidationError);
}

TEST_CASE("shot vector to the canonical target") {
    CHECK(shot_vector_to_target(make_params(6, 3), cfg("0,0,6")) ==
          ShotVector{2, 0, 4});
    CHECK(shot_vector_to_target(make_params(6, 4), cfg("2,2,1,1")) ==
          ShotVector{0, 0, 0, 0});
    CHECK(shot_vector_to_target(make_params(6, 4), cfg("3,2,1,0")) ==
          ShotVector{1, 1, 1, 0});

    // The inactive player's component vanishes; steps = sum of shots.
    for (int p = 2; p <= 4; ++p) {
        for (std::int64_t n = 0; n <= 6; ++n) {
            const GameParams params = make_params(n, p);
            const Configuration target = canonical_dual(params);
            for (const Configuration& origin :
                 enumerate_configurations(params)) {
                const ShotVector s = shot_vector_to_target(params, origin);
                CHECK(s[inactive_player(origin, target) - 1] == 0);
                CHECK(std::accumulate(s.begin(), s.end(), std::int64_t{0}) ==
                      time_to_target(params, origin));
            }
        }
    }
}

TEST_CASE("time to the canonical target") {
    CHECK(time_to_target(make_params(6, 4), cfg("3,2,1,0")) == 3);
    CHECK(time_to_target(make_params(6, 4), cfg("2,2,1,1")) == 0);
    CHECK(time_to_target(make_params(6, 3), cfg("0,0,6")) == 6);
}

TEST_CASE("recurrence bound adds the dominance chain length") {
    const GameParams params = make_params(6, 4);
    CHECK(recurrence_bound(params, cfg("3,2,1,0")) == 8);  // 3 + 2*2 + 1
    CHECK(recurrence_bound(params, cfg("2,2,1,1")) == 5);  // 0 + 2*2 + 1
    const GameParams p72 = make_params(7, 2);
    CHECK(recurrence_bound(p72, canonical_dual(p72)) ==
          time_to_target(p72, canonical_dual(p72)) + 1 + 1);
    CHECK_THROWS_AS(recurrence_bound(make_params(6, 3), cfg("2,2,2")),
                    ValidationError);
}

TEST_CASE("dominance compares prefix sums of duals") {
    const GameParams params = make_params(6, 4);
    const Configuration top = canonical_dual(params);
    for (const Configuration& d : dual_configurations(params)) {
        const Ordering o = dominance_compare(params, top, d);
        CHECK((o == Ordering::greater || o == Ordering::equal));
    }
    CHECK(dominance_compare(params, cfg("2,1,2,1"), cfg("2,1,2,1")) ==
          Ordering::equal);
    CHECK(dominance_compare(params, cfg("2,1,2,1"), cfg("1,2,2,1")) ==
          Ordering::greater);
    CHECK(dominance_compare(params, cfg("1,2,2,1"), cfg("2,1,2,1")) ==
          Ordering::less);
    CHECK_THROWS_AS(dominance_compare(params, cfg("3,1,1,1"), cfg("2,2,1,1")),
                    ValidationError);
}

TEST_CASE("dominance longest chain is q(p-q)") {
    CHECK(dominance_longest_chain(make_params(6, 4)) == 4);
    CHECK(dominance_longest_chain(make_params(7, 2)) == 1);
    CHECK(dominance_longest_chain(make_params(7, 3)) == 2);
    CHECK_THROWS_AS(dominance_longest_chain(make_params(6, 3)),
                    ValidationError);
}

TEST_CASE("dominance covers are single transitions") {
    const DominanceOrder order = build_dominance_order(make_params(6, 4));
    CHECK(order.elements.size() == 6);
    for (const auto& [hi, lo] : order.covers()) {
        const Configuration& a = order.elements[hi];
        const Configuration& b = order.elements[lo];
        bool one_move = false;
        for (int pos : enabled_positions(a)) {
            if (apply_move(a, pos) == b) one_move = true;
        }
        CHECK(one_move);
    }
}

TEST_CASE("q=0 formula matches replayed plays far beyond desk scale") {
    std::mt19937_64 rng(20240601);
    for (auto [n, p] : {std::pair<std::int64_t, int>{60, 6},
                        {100, 4},
                        {1000, 8}}) {
        const GameParams params = make_params(n, p);
        REQUIRE(params.q == 0);
        for (int trial = 0; trial < 4; ++trial) {
            const Configuration origin = random_configuration(params, rng);
            const std::int64_t claimed = convergence_time_q0(params, origin);
            // Deterministic greedy play.
            CHECK(replay_any_play(origin) == claimed);
            // Randomly scheduled play.
            Configuration cur = origin;
            std::int64_t steps = 0;
            while (true) {
                const auto enabled = enabled_positions(cur);
                if (enabled.empty()) break;
                std::uniform_int_distribution<std::size_t> pick(
                    0, enabled.size() - 1);
                cur = apply_move(cur, enabled[pick(rng)]);
                REQUIRE(++steps <= claimed);
            }
            CHECK(steps == claimed);
            CHECK(cur == canonical_dual(params));
        }
    }
}

TEST_CASE("q>0 shot vector is realizable by budgeted replay at scale") {
    // Fire any enabled position whose budget under the formula shot vector
    // is not yet spent; the play must land on the target in exactly the
    // formula time with exactly the formula counts.
    std::mt19937_64 rng(20240602);
    auto run = [&](const GameParams& params, const Configuration& origin) {
        const Configuration target = canonical_dual(params);
        const ShotVector budget = shot_vector_to_target(params, origin);
        const std::int64_t claimed = time_to_target(params, origin);
        ShotVector fired(budget.size(), 0);
        Configuration cur = origin;
        std::int64_t steps = 0;
        while (steps < claimed) {
            bool moved = false;
            for (int pos : enabled_positions(cur)) {
                if (fired[pos - 1] < budget[pos - 1]) {
                    cur = apply_move(cur, pos);
                    fired[pos - 1] += 1;
                    ++steps;
                    moved = true;
                    break;
                }
            }
            REQUIRE(moved);  // the exchange property: never stuck
        }
        CHECK(cur == target);
        CHECK(fired == budget);
        CHECK(shot_identity_check(origin, target, budget));
    };

    // Exhaustive at a desk-scale instance.
    const GameParams p64 = make_params(6, 4);
    for (const Configuration& origin : enumerate_configurations(p64)) {
        run(p64, origin);
    }
    // Sampled at sizes where the state space is astronomically large.
    for (auto [n, p] : {std::pair<std::int64_t, int>{47, 6},
                        {101, 9},
                        {100000, 7}}) {
        const GameParams params = make_params(n, p);
        REQUIRE(params.q > 0);
        for (int trial = 0; trial < 4; ++trial) {
            run(params, random_configuration(params, rng));
        }
    }
}

TEST_CASE("convergence report fields and serialization") {
    const ConvergenceReport report =
        convergence_report(make_params(6, 4), cfg("3,2,1,0"));
    CHECK(report.target == cfg("2,2,1,1"));
    CHECK(report.inactive_player == 4);
    CHECK(report.steps == 3);
    REQUIRE(report.recurrence_bound.has_value());
    CHECK(*report.recurrence_bound == 8);
    CHECK(report.records() ==
          "origin=3,2,1,0\n"
          "target=2,2,1,1\n"
          "inactive_player=4\n"
          "shot_to_target=1,1,1,0\n"
          "steps=3\n"
          "recurrence_bound=8\n");

    const ConvergenceReport q0 =
        convergence_report(make_params(6, 3), cfg("0,0,6"));
    CHECK(q0.steps == 6);
    CHECK(q0.inactive_player == 2);
    CHECK_FALSE(q0.recurrence_bound.has_value());
    CHECK(q0.records() ==
          "origin=0,0,6\n"
          "target=2,2,2\n"
          "inactive_player=2\n"
          "shot_to_target=2,0,4\n"
          "steps=6\n");
}
