#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cards/convergence.hpp"
#include "cards/graph.hpp"
#include "cards/order.hpp"

// Brute-force ground truth. Every check here re-derives its expected
// values by literal replay, search, or enumeration, never by calling the
// formula it is checking.
namespace cards::oracle {

struct PathCaps {
    std::uint64_t max_paths = 100'000;
    std::uint64_t max_length = 1'000;
};

struct PathEnumeration {
    Configuration source;
    Configuration target;
    bool circuit_free_only = true;
    std::vector<std::vector<int>> paths;  // firing-position sequences

    bool unreachable() const { return paths.empty(); }
};

// All (circuit-free) position sequences leading source -> target. Throws
// CapExceeded when the caps trigger before the enumeration is complete.
PathEnumeration enumerate_paths(const TransitionGraph& g,
                                const Configuration& source,
                                const Configuration& target,
                                bool circuit_free_only,
                                const PathCaps& caps = {});

struct VerificationOutcome {
    std::string check;
    GameParams params;
    std::uint64_t instances_checked = 0;
    std::vector<std::string> failures;  // replayable counterexamples
    bool inconclusive = false;          // a cap cut the check short

    bool passed() const { return failures.empty() && !inconclusive; }
};

// Overrides for negative-control tests; unset fields fall back to the
// real implementations.
struct Hooks {
    std::function<bool(const GameParams&, const Configuration&)> is_dual;
    std::function<std::int64_t(const GameParams&, const Configuration&)>
        play_time;
    std::function<ShotVector(const GameParams&, const Configuration&)>
        shot_to_target;
};

// q = 0: the graph is acyclic with the unique sink (k,...,k); every
// maximal path therefore ends there. q > 0: no fixed point exists.
VerificationOutcome verify_termination(const GameParams& params);

// The circuit-bound configurations found by SCC search are exactly the
// {k, k+1} configurations, and there are C(p,q) of them.
VerificationOutcome verify_dual_characterization(const GameParams& params,
                                                 const Hooks& hooks = {});

// Exactly one non-trivial SCC when q > 0, equal to the dual set; only
// trivial SCCs when q = 0.
VerificationOutcome verify_scc_theorem(const GameParams& params,
                                       const Hooks& hooks = {});

// Every configuration reaches every dual configuration (q > 0).
VerificationOutcome verify_dual_reachability(const GameParams& params);

// All paths from origin to each reachable non-dual target carry one shot
// vector and one length. Uses literal path enumeration when the exact
// path count fits caps.max_paths, otherwise an exhaustive label-set
// closure over the same path space. With require_enumeration the check
// turns inconclusive instead of switching methods.
VerificationOutcome verify_shot_uniqueness(const GameParams& params,
                                           const Configuration& origin,
                                           const PathCaps& caps = {},
                                           bool require_enumeration = false);

// Reachability between non-dual elements of GC(origin) coincides with
// strict componentwise dominance of replayed shot vectors, and with
// compare_gc, pair for pair.
VerificationOutcome verify_order_characterization(const GameParams& params,
                                                  const Configuration& origin);

// Every pair in GC(origin), bottom included, has a unique glb and lub;
// the glb matches inf_gc's reconstruction and the lub matches sup_gc.
VerificationOutcome verify_lattice(const GameParams& params,
                                   const Configuration& origin);

struct ConvergenceCaps {
    std::uint64_t max_paths = 100'000;    // circuit-free paths per origin
    std::uint64_t max_plays = 1'000'000;  // maximal plays per origin (q = 0)
    std::uint64_t max_walks = 10'000'000; // fixed-length walks per origin
    std::uint64_t random_plays = 16;      // sampled plays per origin (q = 0)
    bool check_paths = true;
    bool check_recurrence = true;
};

// q = 0: every maximal play from every origin has the formula length
// (exhaustive below n<=6, p<=3; deterministic random sampling above).
// q > 0: every repetition-free path from every origin to P carries the
// formula shot vector plus a whole number of firing rounds; the
// circuit-free ones (some player never fires) exist and carry the formula
// exactly, with a zero at the inactive player; every walk of length
// recurrence_bound revisits an earlier configuration.
VerificationOutcome verify_convergence_formulas(
    const GameParams& params, const Hooks& hooks = {},
    const ConvergenceCaps& caps = {});

// Longest chain among duals is q(p-q), the greatest element is P, and
// every covering pair is one game transition apart.
VerificationOutcome verify_dominance(const GameParams& params);

struct SweepOptions {
    std::int64_t max_n = 10;
    int max_p = 5;
    std::uint64_t node_budget = kDefaultNodeBudget;
    // Per-origin checks (shot uniqueness, order, lattice) run on
    // instances with at most this many configurations; the pairwise
    // lattice scan grows as the fourth power of the state count.
    std::uint64_t per_origin_node_limit = 165;
    // The q > 0 path-formula check is near-linear in the path count and
    // runs everywhere in the default sweep.
    std::uint64_t convergence_paths_node_limit = 1001;
    // Instances where the walk-enumeration recurrence check runs. The
    // t + q(p-q) + 1 bound is certified here; it is NOT valid at every
    // (n, p) — e.g. at (3,4) the play 3,1,2,1,4 from (2,0,1,0) passes
    // through six distinct configurations, one more than the bound.
    std::vector<std::pair<std::int64_t, int>> recurrence_instances = {
        {6, 4}, {7, 3}};
    PathCaps caps;
    ConvergenceCaps convergence;
    Hooks hooks;
};

// Deterministic sweep over all (n, p) with 2 <= p <= max_p and
// 0 <= n <= max_n; one outcome per (check, instance).
std::vector<VerificationOutcome> run_sweep(const SweepOptions& options = {});

}  // namespace cards::oracle
