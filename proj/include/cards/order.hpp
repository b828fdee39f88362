#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cards/graph.hpp"
#include "cards/rules.hpp"

namespace cards {

// Cards passed by each player along a transition sequence. Between
// non-dual endpoints every sequence carries the same shot vector, so the
// vector is a function of the endpoint pair.
using ShotVector = std::vector<std::int64_t>;

enum class Ordering { less, equal, greater, incomparable };

// Componentwise partial order on equal-length integer vectors.
Ordering compare_componentwise(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b);

// Shot vector of any transition sequence origin -> target, computed by
// labeling the reachable non-dual subgraph. target must be non-dual
// (DualTarget otherwise) and reachable from origin (UnreachableTarget).
ShotVector shot_vector(const ReducedGraph& rg, const Configuration& origin,
                       const Configuration& target);

// Does s satisfy s = s_p * (1,...,1) + d(origin, target)?
bool shot_identity_check(const Configuration& origin,
                         const Configuration& target, const ShotVector& s);

// The reachability order on GC(origin): all non-dual configurations
// reachable from origin, the bottom element when a dual is reachable,
// shot-vector labels, the covering relation and the full closure.
// Element ids 0..elements.size()-1 follow lexicographic order; the bottom
// (when present) has id elements.size().
struct PosetView {
    GameParams params;
    Configuration origin;
    std::vector<Configuration> elements;
    bool has_bottom = false;
    std::vector<ShotVector> shots;         // labels; the bottom is unlabeled
    std::vector<std::vector<int>> covers;  // covers[u]: ids covered by u

    int element_count() const {
        return static_cast<int>(elements.size()) + (has_bottom ? 1 : 0);
    }
    int bottom_id() const { return static_cast<int>(elements.size()); }
    int id_of(const Configuration& a) const;  // -1 when absent

    // v is reachable from u (v <= u in the order); reflexive.
    bool reaches(int u, int v) const;

    // Packed closure rows, one bit per element id.
    std::vector<std::vector<std::uint64_t>> reach_rows;
};

// Throws ValidationError for a dual or invalid origin.
PosetView build_poset(const ReducedGraph& rg, const Configuration& origin);

// Order comparison via shot vectors: a is above b exactly when
// s(origin,a) is strictly below s(origin,b) componentwise.
// Throws UnreachableTarget when an input is not an element of the poset.
Ordering compare_gc(const PosetView& pv, const Configuration& a,
                    const Configuration& b);

// Greatest lower bound. Reconstructs the configuration whose shot vector
// is the componentwise max of the two labels; a dual reconstruction is the
// bottom element, reported as nullopt.
std::optional<Configuration> inf_gc(const PosetView& pv,
                                    const Configuration& a,
                                    const Configuration& b);

// Least upper bound, located by scanning the common upper bounds.
Configuration sup_gc(const PosetView& pv, const Configuration& a,
                     const Configuration& b);

}  // namespace cards
