#include "cards/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <utility>

#include "cards/errors.hpp"
#include "cards/rules.hpp"

namespace cards::oracle {
namespace {

inline bool bit(const std::vector<std::uint64_t>& row, int i) {
    return (row[static_cast<std::size_t>(i) >> 6] >>
            (static_cast<unsigned>(i) & 63u)) &
           1u;
}

inline void set_bit(std::vector<std::uint64_t>& row, int i) {
    row[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1}
                                             << (static_cast<unsigned>(i) & 63u);
}

std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t result = 1;
    for (int i = 1; i <= r; ++i) {
        result = result * static_cast<std::uint64_t>(n - r + i) /
                 static_cast<std::uint64_t>(i);
    }
    return result;
}

std::string join_positions(const std::vector<int>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(seq[i]);
    }
    return out.empty() ? "-" : out;
}

std::string join_shot(const ShotVector& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

bool hook_dual(const Hooks& hooks, const GameParams& params,
               const Configuration& a) {
    return hooks.is_dual ? hooks.is_dual(params, a) : is_dual(a, params);
}

std::int64_t hook_time(const Hooks& hooks, const GameParams& params,
                       const Configuration& a) {
    return hooks.play_time ? hooks.play_time(params, a)
                           : time_to_target(params, a);
}

ShotVector hook_shot(const Hooks& hooks, const GameParams& params,
                     const Configuration& a) {
    return hooks.shot_to_target ? hooks.shot_to_target(params, a)
                                : shot_vector_to_target(params, a);
}

// The reachable non-dual part of the graph, as a local DAG. Paths between
// non-dual configurations never touch a dual one: a move inside the
// {k, k+1} set keeps every count in {k, k+1}, so dual configurations only
// lead to dual configurations. That structural fact is re-checked by
// verify_dual_characterization via the arc scan below.
struct LocalDag {
    std::vector<int> node_ids;          // graph indices, ascending
    std::vector<int> local_of;          // graph index -> local id or -1
    std::vector<std::vector<Arc>> out;  // arcs with local targets
    std::vector<int> topo;              // local ids, sources first
    bool acyclic = true;
};

LocalDag build_nondual_dag(const TransitionGraph& g, int origin,
                           const std::vector<bool>& dual) {
    LocalDag dag;
    dag.local_of.assign(g.nodes.size(), -1);
    std::vector<bool> seen(g.nodes.size(), false);
    std::queue<int> queue;
    seen[static_cast<std::size_t>(origin)] = true;
    queue.push(origin);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        for (const Arc& arc : g.out[static_cast<std::size_t>(u)]) {
            if (dual[static_cast<std::size_t>(arc.to)]) continue;
            if (!seen[static_cast<std::size_t>(arc.to)]) {
                seen[static_cast<std::size_t>(arc.to)] = true;
                queue.push(arc.to);
            }
        }
    }
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        if (seen[v]) {
            dag.local_of[v] = static_cast<int>(dag.node_ids.size());
            dag.node_ids.push_back(static_cast<int>(v));
        }
    }
    dag.out.resize(dag.node_ids.size());
    std::vector<int> indeg(dag.node_ids.size(), 0);
    for (std::size_t i = 0; i < dag.node_ids.size(); ++i) {
        for (const Arc& arc :
             g.out[static_cast<std::size_t>(dag.node_ids[i])]) {
            const int to = dag.local_of[static_cast<std::size_t>(arc.to)];
            if (to < 0) continue;
            dag.out[i].push_back(Arc{arc.pos, to});
            ++indeg[static_cast<std::size_t>(to)];
        }
    }
    std::vector<int> degrees = indeg;
    std::vector<int> ready;
    for (std::size_t v = 0; v < dag.node_ids.size(); ++v) {
        if (degrees[v] == 0) ready.push_back(static_cast<int>(v));
    }
    std::size_t head = 0;
    while (head < ready.size()) {
        const int u = ready[head++];
        dag.topo.push_back(u);
        for (const Arc& arc : dag.out[static_cast<std::size_t>(u)]) {
            if (--degrees[static_cast<std::size_t>(arc.to)] == 0) {
                ready.push_back(arc.to);
            }
        }
    }
    dag.acyclic = dag.topo.size() == dag.node_ids.size();
    return dag;
}

// Reflexive closure rows over the local DAG.
std::vector<std::vector<std::uint64_t>> closure_rows(const LocalDag& dag) {
    const std::size_t count = dag.node_ids.size();
    const std::size_t words = (count + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(
        count, std::vector<std::uint64_t>(words, 0));
    for (auto it = dag.topo.rbegin(); it != dag.topo.rend(); ++it) {
        auto& row = rows[static_cast<std::size_t>(*it)];
        set_bit(row, *it);
        for (const Arc& arc : dag.out[static_cast<std::size_t>(*it)]) {
            const auto& child = rows[static_cast<std::size_t>(arc.to)];
            for (std::size_t w = 0; w < words; ++w) row[w] |= child[w];
        }
    }
    return rows;
}

// Shot vectors recovered by literal replay: pick any path via BFS parents,
// walk it with apply_move, and count the fired positions.
struct ReplayedShots {
    std::vector<ShotVector> shot;    // per local id; empty when unreachable
    std::vector<std::int64_t> length;
};

ReplayedShots replay_shots(const TransitionGraph& g, const LocalDag& dag,
                           int origin_local) {
    const std::size_t count = dag.node_ids.size();
    std::vector<int> parent(count, -1), via_pos(count, 0);
    std::vector<bool> seen(count, false);
    std::queue<int> queue;
    seen[static_cast<std::size_t>(origin_local)] = true;
    queue.push(origin_local);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        for (const Arc& arc : dag.out[static_cast<std::size_t>(u)]) {
            if (seen[static_cast<std::size_t>(arc.to)]) continue;
            seen[static_cast<std::size_t>(arc.to)] = true;
            parent[static_cast<std::size_t>(arc.to)] = u;
            via_pos[static_cast<std::size_t>(arc.to)] = arc.pos;
            queue.push(arc.to);
        }
    }
    ReplayedShots result;
    result.shot.resize(count);
    result.length.assign(count, 0);
    const int p = g.params.p;
    for (std::size_t v = 0; v < count; ++v) {
        if (!seen[v]) continue;
        std::vector<int> positions;
        for (int u = static_cast<int>(v); u != origin_local;
             u = parent[static_cast<std::size_t>(u)]) {
            positions.push_back(via_pos[static_cast<std::size_t>(u)]);
        }
        std::reverse(positions.begin(), positions.end());
        Configuration cur =
            g.nodes[static_cast<std::size_t>(dag.node_ids[
                static_cast<std::size_t>(origin_local)])];
        ShotVector s(static_cast<std::size_t>(p), 0);
        for (int pos : positions) {
            cur = apply_move(cur, pos);
            s[static_cast<std::size_t>(pos - 1)] += 1;
        }
        assert(cur == g.nodes[static_cast<std::size_t>(dag.node_ids[v])]);
        result.shot[v] = std::move(s);
        result.length[v] = static_cast<std::int64_t>(positions.size());
    }
    return result;
}

}  // namespace

PathEnumeration enumerate_paths(const TransitionGraph& g,
                                const Configuration& source,
                                const Configuration& target,
                                bool circuit_free_only, const PathCaps& caps) {
    validate(source, g.params);
    validate(target, g.params);
    const int src = g.index_of(source);
    const int dst = g.index_of(target);

    PathEnumeration result;
    result.source = source;
    result.target = target;
    result.circuit_free_only = circuit_free_only;

    std::vector<bool> on_path(g.nodes.size(), false);
    std::vector<int> seq;
    auto dfs = [&](auto&& self, int u) -> void {
        if (u == dst) {
            if (result.paths.size() >= caps.max_paths) {
                throw CapExceeded(
                    "path enumeration from '" + source.str() + "' to '" +
                    target.str() + "' exceeds cap of " +
                    std::to_string(caps.max_paths) + " paths");
            }
            result.paths.push_back(seq);
            if (circuit_free_only) return;  // no circuit-free path continues
        }
        if (seq.size() >= caps.max_length) return;
        if (circuit_free_only) on_path[static_cast<std::size_t>(u)] = true;
        for (const Arc& arc : g.out[static_cast<std::size_t>(u)]) {
            if (circuit_free_only && on_path[static_cast<std::size_t>(arc.to)])
                continue;
            seq.push_back(arc.pos);
            self(self, arc.to);
            seq.pop_back();
        }
        if (circuit_free_only) on_path[static_cast<std::size_t>(u)] = false;
    };
    dfs(dfs, src);
    return result;
}

VerificationOutcome verify_termination(const GameParams& params) {
    VerificationOutcome outcome;
    outcome.check = "termination";
    outcome.params = params;
    const TransitionGraph g = build_graph(params);
    outcome.instances_checked = g.nodes.size();
    if (params.q == 0) {
        for (const auto& component : strongly_connected_components(g)) {
            if (component.size() > 1) {
                outcome.failures.push_back(
                    "circuit through '" +
                    g.nodes[static_cast<std::size_t>(component.front())].str() +
                    "' in a q=0 instance");
            }
        }
        const Configuration fixed = canonical_dual(params);
        for (std::size_t v = 0; v < g.nodes.size(); ++v) {
            const bool sink = g.out[v].empty();
            const bool expected = g.nodes[v] == fixed;
            if (sink != expected) {
                outcome.failures.push_back(
                    "node '" + g.nodes[v].str() +
                    (sink ? "' is an unexpected sink" : "' should be a sink"));
            }
        }
    } else {
        for (std::size_t v = 0; v < g.nodes.size(); ++v) {
            if (g.out[v].empty()) {
                outcome.failures.push_back("fixed point '" + g.nodes[v].str() +
                                           "' in a q>0 instance");
            }
        }
    }
    return outcome;
}

VerificationOutcome verify_dual_characterization(const GameParams& params,
                                                 const Hooks& hooks) {
    VerificationOutcome outcome;
    outcome.check = "dual_characterization";
    outcome.params = params;
    const TransitionGraph g = build_graph(params);
    outcome.instances_checked = g.nodes.size();

    // Ground truth: a configuration lying on a circuit, found by SCC search.
    std::vector<bool> circuit_bound(g.nodes.size(), false);
    for (const auto& component : strongly_connected_components(g)) {
        if (component.size() > 1) {
            for (int v : component) {
                circuit_bound[static_cast<std::size_t>(v)] = true;
            }
        }
    }
    std::uint64_t circuit_count = 0;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        if (circuit_bound[v]) ++circuit_count;
        const bool claimed = hook_dual(hooks, params, g.nodes[v]);
        if (claimed != circuit_bound[v]) {
            outcome.failures.push_back(
                "node '" + g.nodes[v].str() + "' is " +
                (circuit_bound[v] ? "circuit-bound" : "circuit-free") +
                " but the dual predicate says " + (claimed ? "dual" : "non-dual"));
        }
        // Dual configurations must be absorbing under the move rule.
        if (claimed) {
            for (const Arc& arc : g.out[v]) {
                if (!hook_dual(hooks, params,
                               g.nodes[static_cast<std::size_t>(arc.to)])) {
                    outcome.failures.push_back(
                        "dual '" + g.nodes[v].str() + "' leads to non-dual '" +
                        g.nodes[static_cast<std::size_t>(arc.to)].str() + "'");
                }
            }
        }
    }
    const std::uint64_t expected =
        params.q == 0 ? 0 : binomial(params.p, params.q);
    if (circuit_count != expected) {
        outcome.failures.push_back(
            "found " + std::to_string(circuit_count) +
            " circuit-bound configurations, expected C(p,q) = " +
            std::to_string(expected));
    }
    return outcome;
}

VerificationOutcome verify_scc_theorem(const GameParams& params,
                                       const Hooks& hooks) {
    VerificationOutcome outcome;
    outcome.check = "scc_theorem";
    outcome.params = params;
    const TransitionGraph g = build_graph(params);
    const auto components = strongly_connected_components(g);
    outcome.instances_checked = components.size();

    std::vector<int> duals;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        if (hook_dual(hooks, params, g.nodes[v])) {
            duals.push_back(static_cast<int>(v));
        }
    }
    std::vector<const std::vector<int>*> non_trivial;
    for (const auto& component : components) {
        if (component.size() > 1) non_trivial.push_back(&component);
    }
    if (params.q == 0) {
        if (!non_trivial.empty()) {
            outcome.failures.push_back(
                std::to_string(non_trivial.size()) +
                " non-trivial SCCs in a q=0 instance");
        }
    } else {
        if (non_trivial.size() != 1) {
            outcome.failures.push_back(
                "expected exactly one non-trivial SCC, found " +
                std::to_string(non_trivial.size()));
        } else if (*non_trivial.front() != duals) {
            outcome.failures.push_back(
                "the non-trivial SCC (" +
                std::to_string(non_trivial.front()->size()) +
                " nodes) differs from the dual set (" +
                std::to_string(duals.size()) + " nodes)");
        }
    }
    return outcome;
}

VerificationOutcome verify_dual_reachability(const GameParams& params) {
    VerificationOutcome outcome;
    outcome.check = "dual_reachability";
    outcome.params = params;
    if (params.q == 0) return outcome;  // vacuous
    const TransitionGraph g = build_graph(params);

    std::vector<std::vector<int>> in(g.nodes.size());
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        for (const Arc& arc : g.out[u]) {
            in[static_cast<std::size_t>(arc.to)].push_back(
                static_cast<int>(u));
        }
    }
    for (std::size_t d = 0; d < g.nodes.size(); ++d) {
        if (!is_dual(g.nodes[d], params)) continue;
        std::vector<bool> reaches(g.nodes.size(), false);
        std::queue<int> queue;
        reaches[d] = true;
        queue.push(static_cast<int>(d));
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            for (int u : in[static_cast<std::size_t>(v)]) {
                if (!reaches[static_cast<std::size_t>(u)]) {
                    reaches[static_cast<std::size_t>(u)] = true;
                    queue.push(u);
                }
            }
        }
        for (std::size_t v = 0; v < g.nodes.size(); ++v) {
            ++outcome.instances_checked;
            if (!reaches[v]) {
                outcome.failures.push_back("no path from '" + g.nodes[v].str() +
                                           "' to dual '" + g.nodes[d].str() +
                                           "'");
            }
        }
    }
    return outcome;
}

VerificationOutcome verify_reduction(const GameParams& params) {
    VerificationOutcome outcome;
    outcome.check = "reduction";
    outcome.params = params;
    const TransitionGraph g = build_graph(params);
    const ReducedGraph rg = reduce(g);
    outcome.instances_checked = static_cast<std::uint64_t>(rg.vertex_count());

    // The bottom never fires; the rest of the reduced graph is a DAG.
    std::vector<int> indeg(static_cast<std::size_t>(rg.vertex_count()), 0);
    for (const auto& arcs : rg.out) {
        for (const Arc& arc : arcs) {
            ++indeg[static_cast<std::size_t>(arc.to)];
        }
    }
    std::vector<int> ready;
    for (int v = 0; v < rg.vertex_count(); ++v) {
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    }
    std::size_t head = 0, visited = 0;
    while (head < ready.size()) {
        const int u = ready[head++];
        ++visited;
        if (rg.has_bottom && u == rg.bottom_vertex()) continue;
        for (const Arc& arc : rg.out[static_cast<std::size_t>(u)]) {
            if (--indeg[static_cast<std::size_t>(arc.to)] == 0) {
                ready.push_back(arc.to);
            }
        }
    }
    if (visited != static_cast<std::size_t>(rg.vertex_count())) {
        outcome.failures.push_back("reduced graph contains a circuit");
    }
    if (params.q == 0) {
        if (rg.has_bottom || rg.nodes.size() != g.nodes.size() ||
            rg.arc_count() != g.arc_count()) {
            outcome.failures.push_back(
                "reduced graph differs from the full graph in a q=0 instance");
        }
    } else {
        // A bottom arc exists exactly for nodes with a dual successor.
        for (std::size_t u = 0; u < g.nodes.size(); ++u) {
            if (is_dual(g.nodes[u], params)) continue;
            bool dual_successor = false;
            for (const Arc& arc : g.out[u]) {
                if (is_dual(g.nodes[static_cast<std::size_t>(arc.to)], params))
                    dual_successor = true;
            }
            const int ru = rg.index_of(g.nodes[u]);
            bool bottom_arc = false;
            for (const Arc& arc : rg.out[static_cast<std::size_t>(ru)]) {
                if (arc.to == rg.bottom_vertex()) bottom_arc = true;
            }
            if (dual_successor != bottom_arc) {
                outcome.failures.push_back("bottom arc mismatch at '" +
                                           g.nodes[u].str() + "'");
            }
        }
    }
    return outcome;
}

VerificationOutcome verify_shot_uniqueness(const GameParams& params,
                                           const Configuration& origin,
                                           const PathCaps& caps,
                                           bool require_enumeration) {
    VerificationOutcome outcome;
    outcome.check = "shot_uniqueness";
    outcome.params = params;
    validate(origin, params);
    if (is_dual(origin, params)) return outcome;  // no non-dual target

    const TransitionGraph g = build_graph(params);
    std::vector<bool> dual(g.nodes.size(), false);
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        dual[v] = is_dual(g.nodes[v], params);
    }
    const int origin_idx = g.index_of(origin);
    const LocalDag dag = build_nondual_dag(g, origin_idx, dual);
    if (!dag.acyclic) {
        outcome.failures.push_back(
            "circuit among non-dual configurations reachable from '" +
            origin.str() + "'");
        return outcome;
    }
    const int origin_local = dag.local_of[static_cast<std::size_t>(origin_idx)];
    outcome.instances_checked = dag.node_ids.size();
    const int p = params.p;

    // Exact path counts decide whether literal enumeration fits the cap.
    constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> count(dag.node_ids.size(), 0);
    count[static_cast<std::size_t>(origin_local)] = 1;
    for (int u : dag.topo) {
        for (const Arc& arc : dag.out[static_cast<std::size_t>(u)]) {
            auto& c = count[static_cast<std::size_t>(arc.to)];
            const std::uint64_t add = count[static_cast<std::size_t>(u)];
            c = (c > kSat - add) ? kSat : c + add;
        }
    }
    std::uint64_t total = 0;
    for (std::uint64_t c : count) total = (total > kSat - c) ? kSat : total + c;

    if (total <= caps.max_paths) {
        // Enumerate every path from the origin; each arrival at a node is
        // one complete path to it.
        std::vector<ShotVector> first_shot(dag.node_ids.size());
        std::vector<std::vector<int>> first_seq(dag.node_ids.size());
        std::vector<bool> visited(dag.node_ids.size(), false);
        std::vector<int> seq;
        ShotVector running(static_cast<std::size_t>(p), 0);
        auto dfs = [&](auto&& self, int u) -> void {
            if (!visited[static_cast<std::size_t>(u)]) {
                visited[static_cast<std::size_t>(u)] = true;
                first_shot[static_cast<std::size_t>(u)] = running;
                first_seq[static_cast<std::size_t>(u)] = seq;
            } else if (first_shot[static_cast<std::size_t>(u)] != running) {
                const auto& node = g.nodes[static_cast<std::size_t>(
                    dag.node_ids[static_cast<std::size_t>(u)])];
                outcome.failures.push_back(
                    "origin=" + origin.str() + " target=" + node.str() +
                    " path=" +
                    join_positions(first_seq[static_cast<std::size_t>(u)]) +
                    " shot=" +
                    join_shot(first_shot[static_cast<std::size_t>(u)]) +
                    " vs path=" + join_positions(seq) + " shot=" +
                    join_shot(running));
                return;
            }
            for (const Arc& arc : dag.out[static_cast<std::size_t>(u)]) {
                seq.push_back(arc.pos);
                running[static_cast<std::size_t>(arc.pos - 1)] += 1;
                self(self, arc.to);
                running[static_cast<std::size_t>(arc.pos - 1)] -= 1;
                seq.pop_back();
            }
        };
        dfs(dfs, origin_local);
        return outcome;
    }
    if (require_enumeration) {
        outcome.inconclusive = true;
        outcome.failures.push_back(
            "origin=" + origin.str() + " needs " + std::to_string(total) +
            " paths, cap is " + std::to_string(caps.max_paths));
        return outcome;
    }

    // Label-set closure: propagate the set of path shot vectors through the
    // DAG. Any path divergence shows up as a second label on some node.
    std::vector<std::vector<ShotVector>> labels(dag.node_ids.size());
    labels[static_cast<std::size_t>(origin_local)].push_back(
        ShotVector(static_cast<std::size_t>(p), 0));
    for (int u : dag.topo) {
        for (const Arc& arc : dag.out[static_cast<std::size_t>(u)]) {
            auto& target = labels[static_cast<std::size_t>(arc.to)];
            for (const ShotVector& s : labels[static_cast<std::size_t>(u)]) {
                ShotVector next = s;
                next[static_cast<std::size_t>(arc.pos - 1)] += 1;
                if (std::find(target.begin(), target.end(), next) ==
                    target.end()) {
                    if (target.size() < 4) target.push_back(next);
                }
            }
        }
    }
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (labels[v].size() > 1) {
            const auto& node = g.nodes[static_cast<std::size_t>(
                dag.node_ids[v])];
            outcome.failures.push_back(
                "origin=" + origin.str() + " target=" + node.str() +
                " carries shot vectors " + join_shot(labels[v][0]) + " and " +
                join_shot(labels[v][1]));
        }
    }
    return outcome;
}

VerificationOutcome verify_order_characterization(const GameParams& params,
                                                  const Configuration& origin) {
    VerificationOutcome outcome;
    outcome.check = "order_characterization";
    outcome.params = params;
    validate(origin, params);
    if (is_dual(origin, params)) return outcome;  // vacuous

    const TransitionGraph g = build_graph(params);
    std::vector<bool> dual(g.nodes.size(), false);
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        dual[v] = is_dual(g.nodes[v], params);
    }
    const int origin_idx = g.index_of(origin);
    const LocalDag dag = build_nondual_dag(g, origin_idx, dual);
    if (!dag.acyclic) {
        outcome.failures.push_back("non-dual circuit reachable from '" +
                                   origin.str() + "'");
        return outcome;
    }
    const int origin_local = dag.local_of[static_cast<std::size_t>(origin_idx)];
    const auto rows = closure_rows(dag);
    const ReplayedShots ground = replay_shots(g, dag, origin_local);

    const PosetView pv = build_poset(reduce(g), origin);

    const int count = static_cast<int>(dag.node_ids.size());
    for (int a = 0; a < count; ++a) {
        const Configuration& ca =
            g.nodes[static_cast<std::size_t>(dag.node_ids[
                static_cast<std::size_t>(a)])];
        for (int b = 0; b < count; ++b) {
            if (a == b) continue;
            ++outcome.instances_checked;
            const Configuration& cb =
                g.nodes[static_cast<std::size_t>(dag.node_ids[
                    static_cast<std::size_t>(b)])];
            const bool above = bit(rows[static_cast<std::size_t>(a)], b);
            const bool dominated =
                compare_componentwise(ground.shot[static_cast<std::size_t>(a)],
                                      ground.shot[static_cast<std::size_t>(b)]) ==
                Ordering::less;
            if (above != dominated) {
                outcome.failures.push_back(
                    "origin=" + origin.str() + " a=" + ca.str() + " b=" +
                    cb.str() + " reachable=" + (above ? "yes" : "no") +
                    " shot-dominated=" + (dominated ? "yes" : "no"));
                continue;
            }
            const Ordering expected =
                above ? Ordering::greater
                      : (bit(rows[static_cast<std::size_t>(b)], a)
                             ? Ordering::less
                             : Ordering::incomparable);
            if (compare_gc(pv, ca, cb) != expected) {
                outcome.failures.push_back("origin=" + origin.str() +
                                           " compare_gc disagrees on a=" +
                                           ca.str() + " b=" + cb.str());
            }
        }
    }
    return outcome;
}

VerificationOutcome verify_lattice(const GameParams& params,
                                   const Configuration& origin) {
    VerificationOutcome outcome;
    outcome.check = "lattice";
    outcome.params = params;
    validate(origin, params);
    if (is_dual(origin, params)) return outcome;  // vacuous

    const TransitionGraph g = build_graph(params);
    std::vector<bool> dual(g.nodes.size(), false);
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        dual[v] = is_dual(g.nodes[v], params);
    }
    const int origin_idx = g.index_of(origin);

    // Oracle-local GC(origin): reachable non-duals, plus the bottom when a
    // dual is reachable at all, with its own closure.
    std::vector<bool> seen(g.nodes.size(), false);
    std::queue<int> queue;
    seen[static_cast<std::size_t>(origin_idx)] = true;
    queue.push(origin_idx);
    bool dual_reachable = false;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        if (dual[static_cast<std::size_t>(u)]) {
            dual_reachable = true;
            continue;  // duals collapse into the bottom
        }
        for (const Arc& arc : g.out[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(arc.to)]) {
                seen[static_cast<std::size_t>(arc.to)] = true;
                queue.push(arc.to);
            }
        }
    }
    std::vector<int> ids;       // graph indices of the non-dual elements
    std::vector<int> local_of(g.nodes.size(), -1);
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        if (seen[v] && !dual[v]) {
            local_of[v] = static_cast<int>(ids.size());
            ids.push_back(static_cast<int>(v));
        }
    }
    const int bottom = static_cast<int>(ids.size());
    const int count = bottom + (dual_reachable ? 1 : 0);
    const std::size_t words = (static_cast<std::size_t>(count) + 63) / 64;

    std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
    std::vector<int> indeg(static_cast<std::size_t>(count), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        bool to_bottom = false;
        for (const Arc& arc : g.out[static_cast<std::size_t>(ids[i])]) {
            if (dual[static_cast<std::size_t>(arc.to)]) {
                to_bottom = true;
            } else {
                out[i].push_back(local_of[static_cast<std::size_t>(arc.to)]);
                ++indeg[static_cast<std::size_t>(
                    local_of[static_cast<std::size_t>(arc.to)])];
            }
        }
        if (to_bottom && dual_reachable) {
            out[i].push_back(bottom);
            ++indeg[static_cast<std::size_t>(bottom)];
        }
    }
    std::vector<int> topo, ready;
    {
        std::vector<int> degrees = indeg;
        for (int v = 0; v < count; ++v) {
            if (degrees[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
        }
        std::size_t head = 0;
        while (head < ready.size()) {
            const int u = ready[head++];
            topo.push_back(u);
            for (int v : out[static_cast<std::size_t>(u)]) {
                if (--degrees[static_cast<std::size_t>(v)] == 0) {
                    ready.push_back(v);
                }
            }
        }
        if (static_cast<int>(topo.size()) != count) {
            outcome.failures.push_back("GC(" + origin.str() +
                                       ") is not acyclic");
            return outcome;
        }
    }
    std::vector<std::vector<std::uint64_t>> rows(
        static_cast<std::size_t>(count),
        std::vector<std::uint64_t>(words, 0));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        auto& row = rows[static_cast<std::size_t>(*it)];
        set_bit(row, *it);
        for (int v : out[static_cast<std::size_t>(*it)]) {
            for (std::size_t w = 0; w < words; ++w) {
                row[w] |= rows[static_cast<std::size_t>(v)][w];
            }
        }
    }

    const PosetView pv = build_poset(reduce(g), origin);
    if (static_cast<int>(pv.element_count()) != count ||
        pv.has_bottom != dual_reachable) {
        outcome.failures.push_back(
            "GC(" + origin.str() + ") has " + std::to_string(count) +
            " elements, build_poset found " +
            std::to_string(pv.element_count()));
        return outcome;
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!(pv.elements[i] ==
              g.nodes[static_cast<std::size_t>(ids[i])])) {
            outcome.failures.push_back(
                "GC(" + origin.str() + ") element sets diverge at '" +
                pv.elements[i].str() + "'");
            return outcome;
        }
    }

    auto config_of = [&](int id) -> std::string {
        if (id == bottom && dual_reachable) return "BOT";
        return g.nodes[static_cast<std::size_t>(
                           ids[static_cast<std::size_t>(id)])].str();
    };
    std::vector<std::uint64_t> lower(words);
    for (int i = 0; i < count; ++i) {
        for (int j = i; j < count; ++j) {
            ++outcome.instances_checked;
            for (std::size_t w = 0; w < words; ++w) {
                lower[w] = rows[static_cast<std::size_t>(i)][w] &
                           rows[static_cast<std::size_t>(j)][w];
            }
            int glb = -1, glb_count = 0;
            for (int z = 0; z < count; ++z) {
                if (!bit(lower, z)) continue;
                bool greatest = true;
                for (std::size_t w = 0; w < words && greatest; ++w) {
                    if (lower[w] & ~rows[static_cast<std::size_t>(z)][w]) {
                        greatest = false;
                    }
                }
                if (greatest) {
                    glb = z;
                    ++glb_count;
                }
            }
            int lub = -1, lub_count = 0;
            for (int u = 0; u < count; ++u) {
                if (!bit(rows[static_cast<std::size_t>(u)], i) ||
                    !bit(rows[static_cast<std::size_t>(u)], j)) {
                    continue;
                }
                bool least = true;
                for (int v = 0; v < count && least; ++v) {
                    if (bit(rows[static_cast<std::size_t>(v)], i) &&
                        bit(rows[static_cast<std::size_t>(v)], j) &&
                        !bit(rows[static_cast<std::size_t>(v)], u)) {
                        least = false;
                    }
                }
                if (least) {
                    lub = u;
                    ++lub_count;
                }
            }
            if (glb_count != 1 || lub_count != 1) {
                outcome.failures.push_back(
                    "origin=" + origin.str() + " pair=(" + config_of(i) + "," +
                    config_of(j) + ") glb_count=" + std::to_string(glb_count) +
                    " lub_count=" + std::to_string(lub_count));
                continue;
            }
            const bool i_bottom = dual_reachable && i == bottom;
            const bool j_bottom = dual_reachable && j == bottom;
            if (i_bottom || j_bottom) {
                const int other = i_bottom ? j : i;
                if (glb != bottom || lub != other) {
                    outcome.failures.push_back(
                        "origin=" + origin.str() +
                        " bottom pair has glb=" + config_of(glb) + " lub=" +
                        config_of(lub));
                }
                continue;
            }
            const Configuration& ci =
                g.nodes[static_cast<std::size_t>(ids[
                    static_cast<std::size_t>(i)])];
            const Configuration& cj =
                g.nodes[static_cast<std::size_t>(ids[
                    static_cast<std::size_t>(j)])];
            const auto reconstructed = inf_gc(pv, ci, cj);
            const int impl_glb =
                reconstructed ? local_of[static_cast<std::size_t>(
                                    g.index_of(*reconstructed))]
                              : bottom;
            if (impl_glb != glb) {
                outcome.failures.push_back(
                    "origin=" + origin.str() + " inf_gc(" + ci.str() + "," +
                    cj.str() + ")=" +
                    (reconstructed ? reconstructed->str() : "BOT") +
                    " but the poset glb is " + config_of(glb));
            }
            const Configuration impl_sup = sup_gc(pv, ci, cj);
            const int impl_lub =
                local_of[static_cast<std::size_t>(g.index_of(impl_sup))];
            if (impl_lub != lub) {
                outcome.failures.push_back(
                    "origin=" + origin.str() + " sup_gc(" + ci.str() + "," +
                    cj.str() + ")=" + impl_sup.str() +
                    " but the poset lub is " + config_of(lub));
            }
        }
    }
    return outcome;
}

VerificationOutcome verify_convergence_formulas(const GameParams& params,
                                                const Hooks& hooks,
                                                const ConvergenceCaps& caps) {
    VerificationOutcome outcome;
    outcome.check = "convergence_formulas";
    outcome.params = params;
    const TransitionGraph g = build_graph(params);

    if (params.q == 0) {
        const bool exhaustive = params.n <= 6 && params.p <= 3;
        for (std::size_t o = 0; o < g.nodes.size(); ++o) {
            const Configuration& origin = g.nodes[o];
            const std::int64_t claimed = hook_time(hooks, params, origin);
            if (exhaustive) {
                std::uint64_t plays = 0;
                bool capped = false;
                std::vector<int> seq;
                auto dfs = [&](auto&& self, int u) -> void {
                    if (capped) return;
                    if (g.out[static_cast<std::size_t>(u)].empty()) {
                        if (++plays > caps.max_plays) {
                            capped = true;
                            return;
                        }
                        if (static_cast<std::int64_t>(seq.size()) != claimed) {
                            outcome.failures.push_back(
                                "origin=" + origin.str() + " play=" +
                                join_positions(seq) + " length=" +
                                std::to_string(seq.size()) + " formula=" +
                                std::to_string(claimed));
                        }
                        return;
                    }
                    if (static_cast<std::int64_t>(seq.size()) >= claimed + 1) {
                        // Longer than the formula allows: already a failure.
                        outcome.failures.push_back(
                            "origin=" + origin.str() + " play=" +
                            join_positions(seq) + " exceeds formula length " +
                            std::to_string(claimed));
                        return;
                    }
                    for (const Arc& arc : g.out[static_cast<std::size_t>(u)]) {
                        seq.push_back(arc.pos);
                        self(self, arc.to);
                        seq.pop_back();
                    }
                };
                dfs(dfs, static_cast<int>(o));
                if (capped) outcome.inconclusive = true;
                outcome.instances_checked += plays;
            } else {
                // One deterministic stream per origin.
                std::seed_seq seed{static_cast<std::uint64_t>(params.n),
                                   static_cast<std::uint64_t>(params.p),
                                   static_cast<std::uint64_t>(o)};
                std::mt19937_64 rng(seed);
                for (std::uint64_t trial = 0; trial < caps.random_plays;
                     ++trial) {
                    int u = static_cast<int>(o);
                    std::int64_t steps = 0;
                    while (!g.out[static_cast<std::size_t>(u)].empty()) {
                        const auto& arcs = g.out[static_cast<std::size_t>(u)];
                        std::uniform_int_distribution<std::size_t> pick(
                            0, arcs.size() - 1);
                        u = arcs[pick(rng)].to;
                        if (++steps > claimed) break;
                    }
                    ++outcome.instances_checked;
                    if (steps != claimed ||
                        !g.out[static_cast<std::size_t>(u)].empty()) {
                        outcome.failures.push_back(
                            "origin=" + origin.str() + " random play ran " +
                            std::to_string(steps) + " steps, formula says " +
                            std::to_string(claimed));
                    }
                }
            }
        }
        return outcome;
    }

    const Configuration target = canonical_dual(params);
    const int target_idx = g.index_of(target);
    for (std::size_t o = 0; o < g.nodes.size(); ++o) {
        const Configuration& origin = g.nodes[o];
        if (caps.check_paths) {
            const std::int64_t claimed_time = hook_time(hooks, params, origin);
            const ShotVector claimed_shot = hook_shot(hooks, params, origin);
            const int inactive = inactive_player(origin, target);
            if (claimed_shot[static_cast<std::size_t>(inactive - 1)] != 0) {
                outcome.failures.push_back(
                    "origin=" + origin.str() +
                    " formula shot is nonzero at the inactive player");
            }
            // Every repetition-free path to the target carries the formula
            // shot vector plus c whole firing rounds for some c >= 0, and
            // the circuit-free ones (some player silent, c = 0) carry the
            // formula exactly.
            std::uint64_t paths = 0, circuit_free = 0;
            bool capped = false;
            std::vector<bool> on_path(g.nodes.size(), false);
            std::vector<int> seq;
            ShotVector running(static_cast<std::size_t>(params.p), 0);
            auto dfs = [&](auto&& self, int u) -> void {
                if (capped) return;
                if (u == target_idx) {
                    if (++paths > caps.max_paths) {
                        capped = true;
                        return;
                    }
                    const std::int64_t rounds =
                        *std::min_element(running.begin(), running.end());
                    if (rounds == 0) ++circuit_free;
                    bool shot_ok = true;
                    for (std::size_t i = 0; i < running.size(); ++i) {
                        if (running[i] != claimed_shot[i] + rounds) {
                            shot_ok = false;
                        }
                    }
                    if (!shot_ok ||
                        static_cast<std::int64_t>(seq.size()) !=
                            claimed_time + rounds * params.p) {
                        outcome.failures.push_back(
                            "origin=" + origin.str() + " path=" +
                            join_positions(seq) + " shot=" +
                            join_shot(running) + " formula shot=" +
                            join_shot(claimed_shot) + " time=" +
                            std::to_string(claimed_time) + " rounds=" +
                            std::to_string(rounds));
                    }
                    return;  // no repetition-free path revisits the target
                }
                on_path[static_cast<std::size_t>(u)] = true;
                for (const Arc& arc : g.out[static_cast<std::size_t>(u)]) {
                    if (on_path[static_cast<std::size_t>(arc.to)]) continue;
                    seq.push_back(arc.pos);
                    running[static_cast<std::size_t>(arc.pos - 1)] += 1;
                    self(self, arc.to);
                    running[static_cast<std::size_t>(arc.pos - 1)] -= 1;
                    seq.pop_back();
                }
                on_path[static_cast<std::size_t>(u)] = false;
            };
            dfs(dfs, static_cast<int>(o));
            if (capped) {
                outcome.inconclusive = true;
            } else if (circuit_free == 0) {
                outcome.failures.push_back("origin=" + origin.str() +
                                           " has no circuit-free path to '" +
                                           target.str() + "'");
            }
            outcome.instances_checked += paths;
        }
        if (caps.check_recurrence) {
            const std::int64_t chain =
                static_cast<std::int64_t>(params.q) * (params.p - params.q);
            const std::int64_t bound =
                hook_time(hooks, params, origin) + chain + 1;
            std::vector<int> visits(g.nodes.size(), 0);
            std::uint64_t walk_steps = 0, walks = 0;
            bool capped = false;
            std::vector<int> seq;
            visits[o] = 1;
            auto dfs = [&](auto&& self, int u) -> void {
                if (capped) return;
                if (static_cast<std::int64_t>(seq.size()) == bound) {
                    ++walks;
                    if (visits[static_cast<std::size_t>(u)] < 2) {
                        outcome.failures.push_back(
                            "origin=" + origin.str() + " walk=" +
                            join_positions(seq) + " of length " +
                            std::to_string(bound) +
                            " ends in an unseen configuration '" +
                            g.nodes[static_cast<std::size_t>(u)].str() + "'");
                    }
                    return;
                }
                for (const Arc& arc : g.out[static_cast<std::size_t>(u)]) {
                    if (++walk_steps > caps.max_walks) {
                        capped = true;
                        return;
                    }
                    seq.push_back(arc.pos);
                    ++visits[static_cast<std::size_t>(arc.to)];
                    self(self, arc.to);
                    --visits[static_cast<std::size_t>(arc.to)];
                    seq.pop_back();
                }
            };
            dfs(dfs, static_cast<int>(o));
            if (capped) outcome.inconclusive = true;
            outcome.instances_checked += walks;
        }
    }
    return outcome;
}

VerificationOutcome verify_dominance(const GameParams& params) {
    VerificationOutcome outcome;
    outcome.check = "dominance";
    outcome.params = params;
    if (params.q == 0) return outcome;  // vacuous

    const std::vector<Configuration> duals = dual_configurations(params);
    const int count = static_cast<int>(duals.size());

    // Ground truth by literal prefix sums.
    auto prefix_ge = [&](const Configuration& a, const Configuration& b) {
        std::int64_t pa = 0, pb = 0;
        bool ge = true;
        for (int i = 1; i <= params.p; ++i) {
            pa += a.at(i);
            pb += b.at(i);
            if (pa < pb) ge = false;
        }
        return ge;
    };
    std::vector<std::vector<bool>> greater(
        static_cast<std::size_t>(count),
        std::vector<bool>(static_cast<std::size_t>(count), false));
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            if (i == j) continue;
            greater[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                prefix_ge(duals[static_cast<std::size_t>(i)],
                          duals[static_cast<std::size_t>(j)]) &&
                !prefix_ge(duals[static_cast<std::size_t>(j)],
                           duals[static_cast<std::size_t>(i)]);
        }
    }

    // The implementation's comparisons must match, pair for pair.
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            ++outcome.instances_checked;
            const Ordering got =
                dominance_compare(params, duals[static_cast<std::size_t>(i)],
                                  duals[static_cast<std::size_t>(j)]);
            Ordering expected;
            if (i == j) {
                expected = Ordering::equal;
            } else if (greater[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(j)]) {
                expected = Ordering::greater;
            } else if (greater[static_cast<std::size_t>(j)]
                              [static_cast<std::size_t>(i)]) {
                expected = Ordering::less;
            } else {
                expected = Ordering::incomparable;
            }
            if (got != expected) {
                outcome.failures.push_back(
                    "dominance_compare disagrees on (" +
                    duals[static_cast<std::size_t>(i)].str() + "," +
                    duals[static_cast<std::size_t>(j)].str() + ")");
            }
        }
    }

    // Greatest element.
    const Configuration top = canonical_dual(params);
    for (int j = 0; j < count; ++j) {
        if (duals[static_cast<std::size_t>(j)] == top) continue;
        const int t = static_cast<int>(
            std::lower_bound(duals.begin(), duals.end(), top) - duals.begin());
        if (!greater[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]) {
            outcome.failures.push_back(
                "'" + top.str() + "' does not dominate '" +
                duals[static_cast<std::size_t>(j)].str() + "'");
        }
    }

    // Longest chain, by memoized longest path over the strict relation.
    std::vector<int> best(static_cast<std::size_t>(count), -1);
    auto depth = [&](auto&& self, int i) -> int {
        int& memo = best[static_cast<std::size_t>(i)];
        if (memo >= 0) return memo;
        memo = 0;
        for (int j = 0; j < count; ++j) {
            if (greater[static_cast<std::size_t>(i)]
                       [static_cast<std::size_t>(j)]) {
                memo = std::max(memo, 1 + self(self, j));
            }
        }
        return memo;
    };
    int longest = 0;
    for (int i = 0; i < count; ++i) longest = std::max(longest, depth(depth, i));
    const int expected_chain = params.q * (params.p - params.q);
    if (longest != expected_chain) {
        outcome.failures.push_back("longest dominance chain is " +
                                   std::to_string(longest) + ", expected " +
                                   std::to_string(expected_chain));
    }
    if (dominance_longest_chain(params) != longest) {
        outcome.failures.push_back(
            "dominance_longest_chain disagrees with the longest-path search");
    }

    // Every covering pair is one game transition.
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            if (!greater[static_cast<std::size_t>(i)]
                        [static_cast<std::size_t>(j)]) {
                continue;
            }
            bool direct = true;
            for (int w = 0; w < count && direct; ++w) {
                if (greater[static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(w)] &&
                    greater[static_cast<std::size_t>(w)]
                           [static_cast<std::size_t>(j)]) {
                    direct = false;
                }
            }
            if (!direct) continue;
            ++outcome.instances_checked;
            bool transition = false;
            for (int pos : enabled_positions(duals[static_cast<std::size_t>(i)])) {
                if (apply_move(duals[static_cast<std::size_t>(i)], pos) ==
                    duals[static_cast<std::size_t>(j)]) {
                    transition = true;
                }
            }
            if (!transition) {
                outcome.failures.push_back(
                    "cover (" + duals[static_cast<std::size_t>(i)].str() +
                    " > " + duals[static_cast<std::size_t>(j)].str() +
                    ") is not a single transition");
            }
        }
    }
    return outcome;
}

std::vector<VerificationOutcome> run_sweep(const SweepOptions& options) {
    std::vector<VerificationOutcome> outcomes;

    // Any exception escaping a check becomes a failure record; the sweep
    // itself always completes.
    auto guarded = [](const char* check, const GameParams& params,
                      auto&& run) -> VerificationOutcome {
        try {
            return run();
        } catch (const std::exception& e) {
            VerificationOutcome crashed;
            crashed.check = check;
            crashed.params = params;
            crashed.failures.push_back(std::string("exception: ") + e.what());
            return crashed;
        }
    };

    // Merge per-origin outcomes into one record per (check, instance).
    auto merge = [](VerificationOutcome& into, VerificationOutcome&& from,
                    const Configuration& origin) {
        into.instances_checked += from.instances_checked;
        into.inconclusive = into.inconclusive || from.inconclusive;
        for (std::string& failure : from.failures) {
            into.failures.push_back("origin=" + origin.str() + " " + failure);
        }
    };

    for (int p = 2; p <= options.max_p; ++p) {
        for (std::int64_t n = 0; n <= options.max_n; ++n) {
            const GameParams params = make_params(n, p);
            const std::uint64_t nodes = composition_count(n, p);
            if (nodes > options.node_budget) {
                VerificationOutcome skipped;
                skipped.check = "node_budget";
                skipped.params = params;
                skipped.inconclusive = true;
                skipped.failures.push_back(
                    "instance needs " + std::to_string(nodes) +
                    " nodes, budget is " +
                    std::to_string(options.node_budget));
                outcomes.push_back(std::move(skipped));
                continue;
            }
            outcomes.push_back(guarded("termination", params, [&] {
                return verify_termination(params);
            }));
            outcomes.push_back(guarded("dual_characterization", params, [&] {
                return verify_dual_characterization(params, options.hooks);
            }));
            outcomes.push_back(guarded("scc_theorem", params, [&] {
                return verify_scc_theorem(params, options.hooks);
            }));
            if (params.q > 0) {
                outcomes.push_back(guarded("dual_reachability", params, [&] {
                    return verify_dual_reachability(params);
                }));
            }
            outcomes.push_back(guarded("reduction", params, [&] {
                return verify_reduction(params);
            }));

            if (nodes <= options.per_origin_node_limit) {
                const std::vector<Configuration> origins =
                    enumerate_configurations(params, options.node_budget);
                VerificationOutcome shots;
                shots.check = "shot_uniqueness";
                shots.params = params;
                VerificationOutcome order;
                order.check = "order_characterization";
                order.params = params;
                VerificationOutcome lattice;
                lattice.check = "lattice";
                lattice.params = params;
                for (const Configuration& origin : origins) {
                    merge(shots, guarded("shot_uniqueness", params, [&] {
                              return verify_shot_uniqueness(params, origin,
                                                            options.caps);
                          }),
                          origin);
                    if (is_dual(origin, params)) continue;
                    merge(order,
                          guarded("order_characterization", params, [&] {
                              return verify_order_characterization(params,
                                                                   origin);
                          }),
                          origin);
                    merge(lattice, guarded("lattice", params, [&] {
                              return verify_lattice(params, origin);
                          }),
                          origin);
                }
                outcomes.push_back(std::move(shots));
                outcomes.push_back(std::move(order));
                outcomes.push_back(std::move(lattice));
            }

            ConvergenceCaps caps = options.convergence;
            caps.check_paths = nodes <= options.convergence_paths_node_limit;
            caps.check_recurrence =
                params.q > 0 &&
                std::find(options.recurrence_instances.begin(),
                          options.recurrence_instances.end(),
                          std::make_pair(params.n, params.p)) !=
                    options.recurrence_instances.end();
            if (params.q == 0 || caps.check_paths || caps.check_recurrence) {
                outcomes.push_back(
                    guarded("convergence_formulas", params, [&] {
                        return verify_convergence_formulas(
                            params, options.hooks, caps);
                    }));
            }
            if (params.q > 0) {
                outcomes.push_back(guarded("dominance", params, [&] {
                    return verify_dominance(params);
                }));
            }
        }
    }
    return outcomes;
}

}  // namespace cards::oracle
