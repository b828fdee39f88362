#include "cards/convergence.hpp"

#include <algorithm>
#include <numeric>

#include "cards/errors.hpp"

namespace cards {

int inactive_player(const Configuration& origin, const Configuration& target) {
    const PrefixDelta d = prefix_delta(origin, target);
    int arg = 1;
    for (int i = 2; i <= static_cast<int>(d.size()); ++i) {
        if (d[static_cast<std::size_t>(i - 1)] <
            d[static_cast<std::size_t>(arg - 1)]) {
            arg = i;
        }
    }
    return arg;
}

namespace {

std::int64_t formula_time(const PrefixDelta& d, int p) {
    const std::int64_t lo = *std::min_element(d.begin(), d.end());
    const std::int64_t total =
        std::accumulate(d.begin(), d.end(), std::int64_t{0});
    return static_cast<std::int64_t>(p) * (-lo) + total;
}

}  // namespace

std::int64_t convergence_time_q0(const GameParams& params,
                                 const Configuration& origin) {
    if (params.q != 0) {
        throw ValidationError(
            "convergence time is exact only when p divides n; q = " +
            std::to_string(params.q));
    }
    return time_to_target(params, origin);
}

ShotVector shot_vector_to_target(const GameParams& params,
                                 const Configuration& origin) {
    validate(origin, params);
    const PrefixDelta d = prefix_delta(origin, canonical_dual(params));
    const std::int64_t lo = *std::min_element(d.begin(), d.end());
    ShotVector s(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) s[i] = d[i] - lo;
    return s;
}

std::int64_t time_to_target(const GameParams& params,
                            const Configuration& origin) {
    validate(origin, params);
    return formula_time(prefix_delta(origin, canonical_dual(params)),
                        params.p);
}

std::int64_t recurrence_bound(const GameParams& params,
                              const Configuration& origin) {
    if (params.q == 0) {
        throw ValidationError(
            "recurrence bound applies only when q > 0; the q = 0 game "
            "terminates");
    }
    const std::int64_t chain =
        static_cast<std::int64_t>(params.q) * (params.p - params.q);
    return time_to_target(params, origin) + chain + 1;
}

Ordering dominance_compare(const GameParams& params, const Configuration& a,
                           const Configuration& b) {
    validate(a, params);
    validate(b, params);
    if (!is_dual(a, params) || !is_dual(b, params)) {
        throw ValidationError("dominance order is defined on dual "
                              "configurations only");
    }
    std::vector<std::int64_t> pa(a.cards().size()), pb(b.cards().size());
    std::partial_sum(a.cards().begin(), a.cards().end(), pa.begin());
    std::partial_sum(b.cards().begin(), b.cards().end(), pb.begin());
    return compare_componentwise(pa, pb);
}

std::vector<std::pair<int, int>> DominanceOrder::covers() const {
    const int n = static_cast<int>(elements.size());
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!strictly_greater[static_cast<std::size_t>(i)]
                                 [static_cast<std::size_t>(j)]) {
                continue;
            }
            bool direct = true;
            for (int w = 0; w < n && direct; ++w) {
                if (strictly_greater[static_cast<std::size_t>(i)]
                                    [static_cast<std::size_t>(w)] &&
                    strictly_greater[static_cast<std::size_t>(w)]
                                    [static_cast<std::size_t>(j)]) {
                    direct = false;
                }
            }
            if (direct) out.emplace_back(i, j);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int DominanceOrder::longest_chain() const {
    const int n = static_cast<int>(elements.size());
    // Longest path over the strict relation, memoized per element.
    std::vector<int> best(static_cast<std::size_t>(n), -1);
    auto depth = [&](auto&& self, int i) -> int {
        int& memo = best[static_cast<std::size_t>(i)];
        if (memo >= 0) return memo;
        memo = 0;
        for (int j = 0; j < n; ++j) {
            if (strictly_greater[static_cast<std::size_t>(i)]
                                [static_cast<std::size_t>(j)]) {
                memo = std::max(memo, 1 + self(self, j));
            }
        }
        return memo;
    };
    int longest = 0;
    for (int i = 0; i < n; ++i) longest = std::max(longest, depth(depth, i));
    return longest;
}

DominanceOrder build_dominance_order(const GameParams& params) {
    if (params.q == 0) {
        throw ValidationError(
            "the dominance order is empty when q = 0 (no dual "
            "configurations)");
    }
    DominanceOrder order;
    order.params = params;
    order.elements = dual_configurations(params);
    const int n = static_cast<int>(order.elements.size());
    order.strictly_greater.assign(static_cast<std::size_t>(n),
                                  std::vector<bool>(static_cast<std::size_t>(n),
                                                    false));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            order.strictly_greater[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(j)] =
                dominance_compare(params,
                                  order.elements[static_cast<std::size_t>(i)],
                                  order.elements[static_cast<std::size_t>(j)]) ==
                Ordering::greater;
        }
    }
    return order;
}

int dominance_longest_chain(const GameParams& params) {
    return build_dominance_order(params).longest_chain();
}

namespace {

std::string join_int64(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

std::string ConvergenceReport::records() const {
    std::string out;
    out += "origin=" + origin.str() + "\n";
    out += "target=" + target.str() + "\n";
    out += "inactive_player=" + std::to_string(inactive_player) + "\n";
    out += "shot_to_target=" + join_int64(shot_to_target) + "\n";
    out += "steps=" + std::to_string(steps) + "\n";
    if (recurrence_bound) {
        out += "recurrence_bound=" + std::to_string(*recurrence_bound) + "\n";
    }
    return out;
}

ConvergenceReport convergence_report(const GameParams& params,
                                     const Configuration& origin) {
    validate(origin, params);
    ConvergenceReport report;
    report.origin = origin;
    report.target = canonical_dual(params);
    report.inactive_player = inactive_player(origin, report.target);
    report.shot_to_target = shot_vector_to_target(params, origin);
    report.steps = time_to_target(params, origin);
    if (params.q > 0) {
        report.recurrence_bound = recurrence_bound(params, origin);
    }
    return report;
}

}  // namespace cards
