#include "doctest.h"

#include <numeric>

#include "cards/errors.hpp"
#include "cards/graph.hpp"
#include "cards/rules.hpp"

using namespace cards;

namespace {

Configuration cfg(const char* text) { return Configuration::parse(text); }

std::uint64_t binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::uint64_t result = 1;
    for (int i = 1; i <= r; ++i) {
        result = result * static_cast<std::uint64_t>(n - r + i) /
                 static_cast<std::uint64_t>(i);
    }
    return result;
}

}  // namespace

TEST_CASE("make_params splits n into quotient and remainder") {
    const GameParams a = make_params(6, 3);
    CHECK(a.k == 2);
    CHECK(a.q == 0);
    const GameParams b = make_params(6, 4);
    CHECK(b.k == 1);
    CHECK(b.q == 2);
    const GameParams c = make_params(0, 2);
    CHECK(c.k == 0);
    CHECK(c.q == 0);
    CHECK(c.n == 0);

    CHECK_THROWS_AS(make_params(6, 1), ValidationError);
    CHECK_THROWS_AS(make_params(6, 0), ValidationError);
    CHECK_THROWS_AS(make_params(-1, 3), ValidationError);
}

TEST_CASE("configuration text form round-trips") {
    CHECK(cfg("4,1,1").str() == "4,1,1");
    CHECK(cfg("0,0").cards() == std::vector<std::int64_t>{0, 0});
    CHECK(cfg("10,0,3").at(1) == 10);
    CHECK(cfg("10,0,3").at(3) == 3);

    CHECK_THROWS_AS(Configuration::parse(""), ValidationError);
    CHECK_THROWS_AS(Configuration::parse("1,,2"), ValidationError);
    CHECK_THROWS_AS(Configuration::parse("1,-2"), ValidationError);
    CHECK_THROWS_AS(Configuration::parse("1,a"), ValidationError);
    CHECK_THROWS_AS(Configuration::parse("1,2 "), ValidationError);

    // Any enumerated configuration survives a parse/format cycle.
    for (const Configuration& c :
         enumerate_configurations(make_params(5, 3))) {
        CHECK(Configuration::parse(c.str()) == c);
    }
}

TEST_CASE("validate checks length and total") {
    const GameParams params = make_params(6, 3);
    CHECK_NOTHROW(validate(cfg("4,1,1"), params));
    CHECK_THROWS_AS(validate(cfg("4,1,1,0"), params), ValidationError);
    CHECK_THROWS_AS(validate(cfg("4,1,2"), params), ValidationError);
}

TEST_CASE("enabled positions need a strictly poorer right neighbor") {
    CHECK(enabled_positions(cfg("2,2,2")).empty());
    CHECK(enabled_positions(cfg("4,1,1")) == std::vector<int>{1});
    CHECK(enabled_positions(cfg("3,1,2")) == std::vector<int>{1});
    // Wrap-around: the last player compares against the first.
    CHECK(enabled_positions(cfg("1,1,4")) == std::vector<int>{3});
    CHECK(enabled_positions(cfg("3,2,1")) == std::vector<int>{1, 2});
}

TEST_CASE("apply_move passes one card to the right") {
    CHECK(apply_move(cfg("4,1,1"), 1) == cfg("3,2,1"));
    CHECK(apply_move(cfg("3,1,2"), 1) == cfg("2,2,2"));
    CHECK(apply_move(cfg("1,1,4"), 3) == cfg("2,1,3"));
    CHECK_THROWS_AS(apply_move(cfg("2,2,2"), 1), MoveNotEnabled);
    CHECK_THROWS_AS(apply_move(cfg("3,1,2"), 3), MoveNotEnabled);
    CHECK_THROWS_AS(apply_move(cfg("3,1,2"), 0), MoveNotEnabled);
    CHECK_THROWS_AS(apply_move(cfg("3,1,2"), 4), MoveNotEnabled);
}

TEST_CASE("moves conserve cards and touch exactly two positions") {
    for (int p = 2; p <= 4; ++p) {
        for (std::int64_t n = 0; n <= 6; ++n) {
            const GameParams params = make_params(n, p);
            for (const Configuration& a : enumerate_configurations(params)) {
                for (int pos : enabled_positions(a)) {
                    const Configuration b = apply_move(a, pos);
                    CHECK(b.total() == a.total());
                    int changed = 0;
                    for (int i = 1; i <= p; ++i) {
                        if (a.at(i) != b.at(i)) ++changed;
                    }
                    CHECK(changed == 2);
                    CHECK(b.at(pos) == a.at(pos) - 1);
                    CHECK(b.at(succ(pos, p)) == a.at(succ(pos, p)) + 1);
                }
            }
        }
    }
}

TEST_CASE("fixed points are the no-move configurations") {
    CHECK(is_fixed_point(cfg("2,2,2")));
    CHECK(!is_fixed_point(cfg("3,2,1")));
    CHECK(!is_fixed_point(cfg("2,2,1,1")));  // position 2 enabled
    CHECK(is_fixed_point(cfg("0,0")));

    // q = 0: the unique fixed point is the flat configuration.
    for (int p = 2; p <= 4; ++p) {
        for (std::int64_t k = 0; k <= 2; ++k) {
            const GameParams params = make_params(k * p, p);
            const Configuration flat = canonical_dual(params);
            for (const Configuration& a : enumerate_configurations(params)) {
                CHECK(is_fixed_point(a) == (a == flat));
            }
        }
    }
}

TEST_CASE("dual configurations hold k or k+1 everywhere") {
    const GameParams p64 = make_params(6, 4);
    CHECK(is_dual(cfg("2,2,1,1"), p64));
    CHECK(is_dual(cfg("1,2,1,2"), p64));
    CHECK(!is_dual(cfg("3,1,1,1"), p64));
    CHECK(!is_dual(cfg("2,2,2"), make_params(6, 3)));  // q = 0

    // Exactly C(p,q) duals, by exhaustive enumeration.
    for (int p = 2; p <= 5; ++p) {
        for (std::int64_t n = 0; n <= 8; ++n) {
            const GameParams params = make_params(n, p);
            std::uint64_t count = 0;
            for (const Configuration& a : enumerate_configurations(params)) {
                if (is_dual(a, params)) ++count;
            }
            const std::uint64_t expected =
                params.q == 0 ? 0 : binom(params.p, params.q);
            CHECK(count == expected);
            CHECK(dual_configurations(params).size() == expected);
        }
    }
}

TEST_CASE("canonical dual stacks the surplus on the first players") {
    CHECK(canonical_dual(make_params(6, 4)) == cfg("2,2,1,1"));
    CHECK(canonical_dual(make_params(6, 3)) == cfg("2,2,2"));
    CHECK(canonical_dual(make_params(7, 3)) == cfg("3,2,2"));
    CHECK(is_dual(canonical_dual(make_params(7, 3)), make_params(7, 3)));
}

TEST_CASE("prefix delta accumulates componentwise differences") {
    CHECK(prefix_delta(cfg("0,0,6"), cfg("2,2,2")) ==
          PrefixDelta{-2, -4, 0});
    CHECK(prefix_delta(cfg("4,1,1"), cfg("4,1,1")) == PrefixDelta{0, 0, 0});
    CHECK(prefix_delta(cfg("3,2,1,0"), cfg("2,2,1,1")) ==
          PrefixDelta{1, 1, 1, 0});
    CHECK_THROWS_AS(prefix_delta(cfg("1,2"), cfg("1,1,1")), ValidationError);
    CHECK_THROWS_AS(prefix_delta(cfg("1,2"), cfg("2,2")), ValidationError);
}

TEST_CASE("prefix delta is antisymmetric and ends at zero") {
    const GameParams params = make_params(5, 4);
    const auto nodes = enumerate_configurations(params);
    for (std::size_t i = 0; i < nodes.size(); i += 7) {
        for (std::size_t j = 0; j < nodes.size(); j += 5) {
            const PrefixDelta d = prefix_delta(nodes[i], nodes[j]);
            const PrefixDelta r = prefix_delta(nodes[j], nodes[i]);
            CHECK(d.back() == 0);
            for (std::size_t t = 0; t < d.size(); ++t) {
                CHECK(d[t] == -r[t]);
            }
        }
    }
}
