#pragma once

#include <cstdint>
#include <vector>

#include "cards/config.hpp"
#include "cards/params.hpp"

namespace cards {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

struct Arc {
    int pos = 0;  // firing position, 1-based
    int to = -1;  // target vertex index

    friend bool operator==(const Arc&, const Arc&) = default;
};

// The full transition graph over all weak compositions of n into p parts.
// Nodes are lexicographically ascending; out-arcs are ordered by position.
// Immutable once built.
struct TransitionGraph {
    GameParams params;
    std::vector<Configuration> nodes;
    std::vector<std::vector<Arc>> out;

    int index_of(const Configuration& a) const;  // -1 when absent
    std::size_t arc_count() const;
};

// C(n+p-1, p-1), saturating at the uint64 maximum.
std::uint64_t composition_count(std::int64_t n, int p);

// All weak compositions of n into p parts, lexicographically ascending.
// Throws BudgetExceeded when the count is above node_budget.
std::vector<Configuration> enumerate_configurations(
    const GameParams& params, std::uint64_t node_budget = kDefaultNodeBudget);

TransitionGraph build_graph(const GameParams& params,
                            std::uint64_t node_budget = kDefaultNodeBudget);

// Strongly connected components as sorted index lists, ordered by their
// smallest member (= lexicographically smallest configuration).
std::vector<std::vector<int>> strongly_connected_components(
    const TransitionGraph& g);

// The quotient graph: dual configurations collapse into one bottom vertex
// with no outgoing arcs. Vertices 0..nodes.size()-1 are the non-dual
// configurations in lexicographic order; when q > 0, vertex nodes.size()
// is the bottom. Arcs of a vertex into several duals collapse into a
// single bottom arc carrying the smallest such firing position.
struct ReducedGraph {
    GameParams params;
    std::vector<Configuration> nodes;
    bool has_bottom = false;
    std::vector<std::vector<Arc>> out;  // indexed by non-dual vertices

    int bottom_vertex() const { return static_cast<int>(nodes.size()); }
    int vertex_count() const {
        return static_cast<int>(nodes.size()) + (has_bottom ? 1 : 0);
    }
    int index_of(const Configuration& a) const;  // -1 when absent
    std::size_t arc_count() const;
};

ReducedGraph reduce(const TransitionGraph& g);

// Forward closure of an origin in the reduced graph.
struct ReachableSet {
    Configuration origin;
    std::vector<Configuration> members;  // non-dual, lexicographic
    bool contains_bottom = false;
};

// For a dual origin the set is just the bottom element.
ReachableSet reachable_set(const ReducedGraph& rg, const Configuration& origin);

// Directed path a -> ... -> b, length 0 allowed.
bool path_exists(const TransitionGraph& g, const Configuration& a,
                 const Configuration& b);

}  // namespace cards
