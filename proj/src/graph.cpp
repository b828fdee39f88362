#include "cards/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "cards/errors.hpp"
#include "cards/rules.hpp"

namespace cards {
namespace {

int find_index(const std::vector<Configuration>& nodes,
               const Configuration& a) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), a);
    if (it == nodes.end() || !(*it == a)) return -1;
    return static_cast<int>(it - nodes.begin());
}

}  // namespace

int TransitionGraph::index_of(const Configuration& a) const {
    return find_index(nodes, a);
}

std::size_t TransitionGraph::arc_count() const {
    std::size_t total = 0;
    for (const auto& arcs : out) total += arcs.size();
    return total;
}

int ReducedGraph::index_of(const Configuration& a) const {
    return find_index(nodes, a);
}

std::size_t ReducedGraph::arc_count() const {
    std::size_t total = 0;
    for (const auto& arcs : out) total += arcs.size();
    return total;
}

std::uint64_t composition_count(std::int64_t n, int p) {
    // C(n+p-1, p-1) with saturation.
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 r = 1;
    for (int i = 1; i <= p - 1; ++i) {
        r = r * (static_cast<unsigned __int128>(n) + static_cast<unsigned>(i));
        r /= static_cast<unsigned>(i);
        if (r > kMax / 2) return kMax;
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<Configuration> enumerate_configurations(
    const GameParams& params, std::uint64_t node_budget) {
    const std::uint64_t count = composition_count(params.n, params.p);
    if (count > node_budget) {
        throw BudgetExceeded("state space of n=" + std::to_string(params.n) +
                                 " p=" + std::to_string(params.p) +
                                 " requires " + std::to_string(count) +
                                 " nodes, budget is " +
                                 std::to_string(node_budget),
                             count, node_budget);
    }
    std::vector<Configuration> nodes;
    nodes.reserve(count);
    std::vector<std::int64_t> cards(static_cast<std::size_t>(params.p), 0);
    // Lexicographic recursion over the leading positions; the last
    // position absorbs the remainder.
    auto emit = [&](auto&& self, int pos, std::int64_t remaining) -> void {
        if (pos == params.p) {
            cards[pos - 1] = remaining;
            nodes.emplace_back(cards);
            return;
        }
        for (std::int64_t c = 0; c <= remaining; ++c) {
            cards[pos - 1] = c;
            self(self, pos + 1, remaining - c);
        }
    };
    emit(emit, 1, params.n);
    return nodes;
}

TransitionGraph build_graph(const GameParams& params,
                            std::uint64_t node_budget) {
    TransitionGraph g;
    g.params = params;
    g.nodes = enumerate_configurations(params, node_budget);
    g.out.resize(g.nodes.size());
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        for (int pos : enabled_positions(g.nodes[u])) {
            const Configuration b = apply_move(g.nodes[u], pos);
            g.out[u].push_back(Arc{pos, g.index_of(b)});
        }
    }
    return g;
}

std::vector<std::vector<int>> strongly_connected_components(
    const TransitionGraph& g) {
    const int n = static_cast<int>(g.nodes.size());
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int counter = 0;

    // Iterative Tarjan; frames hold the next out-arc to explore.
    struct Frame {
        int node;
        std::size_t next_arc;
    };
    std::vector<Frame> frames;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next_arc < g.out[f.node].size()) {
                const int w = g.out[f.node][f.next_arc++].to;
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.node] = std::min(low[f.node], index[w]);
                }
                continue;
            }
            const int v = f.node;
            frames.pop_back();
            if (!frames.empty()) {
                low[frames.back().node] =
                    std::min(low[frames.back().node], low[v]);
            }
            if (low[v] == index[v]) {
                std::vector<int> component;
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                    if (w == v) break;
                }
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
        }
    }
    std::sort(components.begin(), components.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return components;
}

ReducedGraph reduce(const TransitionGraph& g) {
    ReducedGraph rg;
    rg.params = g.params;

    std::vector<bool> dual(g.nodes.size(), false);
    std::vector<int> remap(g.nodes.size(), -1);
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        dual[u] = is_dual(g.nodes[u], g.params);
        if (!dual[u]) {
            remap[u] = static_cast<int>(rg.nodes.size());
            rg.nodes.push_back(g.nodes[u]);
        }
    }
    rg.has_bottom = g.params.q > 0;

    rg.out.resize(rg.nodes.size());
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        if (dual[u]) continue;
        auto& arcs = rg.out[remap[u]];
        int bottom_pos = 0;
        for (const Arc& arc : g.out[u]) {
            if (dual[arc.to]) {
                if (bottom_pos == 0) bottom_pos = arc.pos;
            } else {
                arcs.push_back(Arc{arc.pos, remap[arc.to]});
            }
        }
        if (bottom_pos != 0) {
            arcs.push_back(Arc{bottom_pos, rg.bottom_vertex()});
            std::sort(arcs.begin(), arcs.end(),
                      [](const Arc& a, const Arc& b) { return a.pos < b.pos; });
        }
    }
    return rg;
}

ReachableSet reachable_set(const ReducedGraph& rg,
                           const Configuration& origin) {
    validate(origin, rg.params);
    ReachableSet rs;
    rs.origin = origin;
    if (is_dual(origin, rg.params)) {
        // A dual origin collapses into the bottom class itself.
        rs.contains_bottom = true;
        return rs;
    }
    const int start = rg.index_of(origin);
    std::vector<bool> seen(static_cast<std::size_t>(rg.vertex_count()), false);
    std::queue<int> queue;
    seen[start] = true;
    queue.push(start);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        if (u == rg.bottom_vertex() && rg.has_bottom) continue;
        for (const Arc& arc : rg.out[u]) {
            if (!seen[arc.to]) {
                seen[arc.to] = true;
                queue.push(arc.to);
            }
        }
    }
    for (std::size_t v = 0; v < rg.nodes.size(); ++v) {
        if (seen[v]) rs.members.push_back(rg.nodes[v]);
    }
    rs.contains_bottom = rg.has_bottom && seen[rg.bottom_vertex()];
    return rs;
}

bool path_exists(const TransitionGraph& g, const Configuration& a,
                 const Configuration& b) {
    validate(a, g.params);
    validate(b, g.params);
    const int start = g.index_of(a);
    const int goal = g.index_of(b);
    std::vector<bool> seen(g.nodes.size(), false);
    std::queue<int> queue;
    seen[start] = true;
    queue.push(start);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        if (u == goal) return true;
        for (const Arc& arc : g.out[u]) {
            if (!seen[arc.to]) {
                seen[arc.to] = true;
                queue.push(arc.to);
            }
        }
    }
    return false;
}

}  // namespace cards
