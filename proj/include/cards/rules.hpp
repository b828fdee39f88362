#pragma once

#include <cstdint>
#include <vector>

#include "cards/config.hpp"
#include "cards/params.hpp"

namespace cards {

// Prefix differences d_j = sum_{i<=j} (a_i - b_i); the last component is 0
// whenever a and b carry the same total.
using PrefixDelta = std::vector<std::int64_t>;

// A player may pass one card to its right neighbor exactly when the
// neighbor holds strictly fewer cards.
bool is_enabled(const Configuration& a, int pos);

// Positions with an enabled move, ascending.
std::vector<int> enabled_positions(const Configuration& a);

// One card from pos to its right neighbor. Throws MoveNotEnabled when the
// move is not enabled.
Configuration apply_move(const Configuration& a, int pos);

// No enabled move anywhere.
bool is_fixed_point(const Configuration& a);

// For q > 0: every player holds k or k+1 cards (equivalently, exactly q
// players hold k+1). Always false when q = 0.
bool is_dual(const Configuration& a, const GameParams& params);

// The reference configuration P: q entries of k+1 followed by p-q entries
// of k. For q = 0 this is the fixed point (k,...,k).
Configuration canonical_dual(const GameParams& params);

// Throws ValidationError when a and b differ in length or total.
PrefixDelta prefix_delta(const Configuration& a, const Configuration& b);

// All dual configurations, lexicographically ascending; empty when q = 0.
std::vector<Configuration> dual_configurations(const GameParams& params);

}  // namespace cards
