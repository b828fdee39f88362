#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cards/order.hpp"

namespace cards {

// First position minimizing the prefix delta d(origin, target). That
// player passes no card on any circuit-free path from origin to target.
int inactive_player(const Configuration& origin, const Configuration& target);

// Exact length of every maximal play when q = 0:
//   t = p * (-min_i d_i(O,P)) + sum_i d_i(O,P),   P = (k,...,k).
// Throws ValidationError when q != 0.
std::int64_t convergence_time_q0(const GameParams& params,
                                 const Configuration& origin);

// Shot vector common to all circuit-free paths origin -> canonical_dual,
// i.e. the paths in which some player never passes a card (every other
// path fires extra whole rounds on top of this vector):
//   s(O,P) = -(min_i d_i(O,P)) * (1,...,1) + d(O,P).
// Defined for every q; when q = 0 the target is the fixed point.
ShotVector shot_vector_to_target(const GameParams& params,
                                 const Configuration& origin);

// Length of those paths, p * (-min_i d_i) + sum_i d_i.
std::int64_t time_to_target(const GameParams& params,
                            const Configuration& origin);

// Steps after which every play from origin has revisited an earlier
// configuration: time_to_target + q*(p-q) + 1. Throws when q = 0.
std::int64_t recurrence_bound(const GameParams& params,
                              const Configuration& origin);

// Prefix-sum dominance between dual configurations. Throws
// ValidationError on non-dual input.
Ordering dominance_compare(const GameParams& params, const Configuration& a,
                           const Configuration& b);

// Dual configurations under strict prefix-sum dominance.
struct DominanceOrder {
    GameParams params;
    std::vector<Configuration> elements;              // lexicographic
    std::vector<std::vector<bool>> strictly_greater;  // [i][j]: e_i > e_j

    // Transitive reduction, as (greater, covered) index pairs sorted
    // lexicographically.
    std::vector<std::pair<int, int>> covers() const;

    // Longest chain, counted in covering steps, by exhaustive longest-path
    // search over the dominance DAG.
    int longest_chain() const;
};

DominanceOrder build_dominance_order(const GameParams& params);

// Longest chain among dual configurations. Throws when q = 0.
int dominance_longest_chain(const GameParams& params);

struct ConvergenceReport {
    Configuration origin;
    Configuration target;
    int inactive_player = 0;
    ShotVector shot_to_target;
    std::int64_t steps = 0;
    std::optional<std::int64_t> recurrence_bound;  // only when q > 0

    // Flat key=value lines, one field per line.
    std::string records() const;
};

ConvergenceReport convergence_report(const GameParams& params,
                                     const Configuration& origin);

}  // namespace cards
