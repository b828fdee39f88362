#include "cards/order.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <string>

#include "cards/errors.hpp"

namespace cards {
namespace {

// Origin lookup shared by the shot/poset builders. Returns the vertex of
// a validated non-dual origin.
int origin_vertex(const ReducedGraph& rg, const Configuration& origin) {
    validate(origin, rg.params);
    if (is_dual(origin, rg.params)) {
        throw ValidationError("origin '" + origin.str() +
                              "' is dual; the order is built from a "
                              "non-dual origin");
    }
    return rg.index_of(origin);
}

// BFS shot-vector labeling over the reachable non-dual subgraph. By
// path-independence every in-arc assigns the same label, so first
// discovery wins.
std::vector<ShotVector> label_reachable(const ReducedGraph& rg, int start) {
    std::vector<ShotVector> labels(rg.nodes.size());
    std::queue<int> queue;
    labels[start] = ShotVector(static_cast<std::size_t>(rg.params.p), 0);
    std::vector<bool> seen(rg.nodes.size(), false);
    seen[start] = true;
    queue.push(start);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        for (const Arc& arc : rg.out[u]) {
            if (arc.to == rg.bottom_vertex() && rg.has_bottom) continue;
            if (seen[arc.to]) continue;
            seen[arc.to] = true;
            labels[arc.to] = labels[u];
            labels[arc.to][arc.pos - 1] += 1;
            queue.push(arc.to);
        }
    }
    return labels;
}

inline bool bit(const std::vector<std::uint64_t>& row, int i) {
    return (row[static_cast<std::size_t>(i) >> 6] >>
            (static_cast<unsigned>(i) & 63u)) &
           1u;
}

inline void set_bit(std::vector<std::uint64_t>& row, int i) {
    row[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1}
                                             << (static_cast<unsigned>(i) & 63u);
}

}  // namespace

Ordering compare_componentwise(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b) {
    assert(a.size() == b.size());
    bool any_less = false, any_greater = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) any_less = true;
        if (a[i] > b[i]) any_greater = true;
    }
    if (any_less && any_greater) return Ordering::incomparable;
    if (any_less) return Ordering::less;
    if (any_greater) return Ordering::greater;
    return Ordering::equal;
}

ShotVector shot_vector(const ReducedGraph& rg, const Configuration& origin,
                       const Configuration& target) {
    const int start = origin_vertex(rg, origin);
    validate(target, rg.params);
    if (is_dual(target, rg.params)) {
        throw DualTarget("target '" + target.str() +
                         "' is dual; shot vectors to the collapsed class "
                         "are path-dependent");
    }
    const int goal = rg.index_of(target);
    // A labeled vertex is exactly a reachable one.
    std::vector<ShotVector> labels = label_reachable(rg, start);
    if (goal != start && labels[goal].empty()) {
        throw UnreachableTarget("target '" + target.str() +
                                "' is not reachable from '" + origin.str() +
                                "'");
    }
    return labels[goal];
}

bool shot_identity_check(const Configuration& origin,
                         const Configuration& target, const ShotVector& s) {
    if (static_cast<int>(s.size()) != origin.players()) return false;
    const PrefixDelta d = prefix_delta(origin, target);
    const std::int64_t last = s.back();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != last + d[i]) return false;
    }
    return true;
}

int PosetView::id_of(const Configuration& a) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), a);
    if (it == elements.end() || !(*it == a)) return -1;
    return static_cast<int>(it - elements.begin());
}

bool PosetView::reaches(int u, int v) const {
    return bit(reach_rows[static_cast<std::size_t>(u)], v);
}

PosetView build_poset(const ReducedGraph& rg, const Configuration& origin) {
    const int start = origin_vertex(rg, origin);

    PosetView pv;
    pv.params = rg.params;
    pv.origin = origin;

    // Forward closure over reduced-graph vertices.
    std::vector<bool> seen(static_cast<std::size_t>(rg.vertex_count()), false);
    std::queue<int> queue;
    seen[static_cast<std::size_t>(start)] = true;
    queue.push(start);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        if (rg.has_bottom && u == rg.bottom_vertex()) continue;
        for (const Arc& arc : rg.out[u]) {
            if (!seen[static_cast<std::size_t>(arc.to)]) {
                seen[static_cast<std::size_t>(arc.to)] = true;
                queue.push(arc.to);
            }
        }
    }

    std::vector<int> local_of(static_cast<std::size_t>(rg.vertex_count()), -1);
    for (std::size_t v = 0; v < rg.nodes.size(); ++v) {
        if (seen[v]) {
            local_of[v] = static_cast<int>(pv.elements.size());
            pv.elements.push_back(rg.nodes[v]);
        }
    }
    pv.has_bottom =
        rg.has_bottom && seen[static_cast<std::size_t>(rg.bottom_vertex())];
    if (pv.has_bottom) local_of[rg.bottom_vertex()] = pv.bottom_id();

    const int count = pv.element_count();
    const std::size_t words = (static_cast<std::size_t>(count) + 63) / 64;

    // Local arcs and in-degrees for a topological pass.
    std::vector<std::vector<Arc>> out(static_cast<std::size_t>(count));
    std::vector<int> indeg(static_cast<std::size_t>(count), 0);
    for (std::size_t v = 0; v < rg.nodes.size(); ++v) {
        if (!seen[v]) continue;
        for (const Arc& arc : rg.out[v]) {
            const int to = local_of[static_cast<std::size_t>(arc.to)];
            out[static_cast<std::size_t>(local_of[v])].push_back(
                Arc{arc.pos, to});
            ++indeg[static_cast<std::size_t>(to)];
        }
    }

    // Shot labels via BFS from the origin.
    std::vector<ShotVector> labels = label_reachable(rg, start);
    pv.shots.resize(pv.elements.size());
    for (std::size_t v = 0; v < rg.nodes.size(); ++v) {
        if (seen[v]) pv.shots[static_cast<std::size_t>(local_of[v])] = labels[v];
    }

    // Reachability rows, reflexive, filled in reverse topological order.
    std::vector<int> topo;
    topo.reserve(static_cast<std::size_t>(count));
    {
        std::vector<int> ready;
        for (int v = 0; v < count; ++v) {
            if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
        }
        std::vector<int> degrees = indeg;
        std::size_t head = 0;
        while (head < ready.size()) {
            const int u = ready[head++];
            topo.push_back(u);
            for (const Arc& arc : out[static_cast<std::size_t>(u)]) {
                if (--degrees[static_cast<std::size_t>(arc.to)] == 0) {
                    ready.push_back(arc.to);
                }
            }
        }
        if (static_cast<int>(topo.size()) != count) {
            throw std::logic_error(
                "reachable non-dual subgraph is not acyclic");
        }
    }
    pv.reach_rows.assign(static_cast<std::size_t>(count),
                         std::vector<std::uint64_t>(words, 0));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const int u = *it;
        auto& row = pv.reach_rows[static_cast<std::size_t>(u)];
        set_bit(row, u);
        for (const Arc& arc : out[static_cast<std::size_t>(u)]) {
            const auto& child = pv.reach_rows[static_cast<std::size_t>(arc.to)];
            for (std::size_t w = 0; w < words; ++w) row[w] |= child[w];
        }
    }

    // Covers: strictly-below minus anything strictly below those.
    pv.covers.assign(static_cast<std::size_t>(count), {});
    std::vector<std::uint64_t> strict(words), shadow(words), other(words);
    for (int u = 0; u < count; ++u) {
        const auto& row = pv.reach_rows[static_cast<std::size_t>(u)];
        for (std::size_t w = 0; w < words; ++w) strict[w] = row[w];
        strict[static_cast<std::size_t>(u) >> 6] &=
            ~(std::uint64_t{1} << (static_cast<unsigned>(u) & 63u));
        std::fill(shadow.begin(), shadow.end(), 0);
        for (int v = 0; v < count; ++v) {
            if (!bit(strict, v)) continue;
            const auto& below = pv.reach_rows[static_cast<std::size_t>(v)];
            for (std::size_t w = 0; w < words; ++w) other[w] = below[w];
            other[static_cast<std::size_t>(v) >> 6] &=
                ~(std::uint64_t{1} << (static_cast<unsigned>(v) & 63u));
            for (std::size_t w = 0; w < words; ++w) shadow[w] |= other[w];
        }
        for (int v = 0; v < count; ++v) {
            if (bit(strict, v) && !bit(shadow, v)) {
                pv.covers[static_cast<std::size_t>(u)].push_back(v);
            }
        }
    }
    return pv;
}

namespace {

int element_id_or_throw(const PosetView& pv, const Configuration& a) {
    validate(a, pv.params);
    const int id = pv.id_of(a);
    if (id < 0) {
        throw UnreachableTarget("configuration '" + a.str() +
                                "' is not an element of GC(" +
                                pv.origin.str() + ")");
    }
    return id;
}

}  // namespace

Ordering compare_gc(const PosetView& pv, const Configuration& a,
                    const Configuration& b) {
    const int ia = element_id_or_throw(pv, a);
    const int ib = element_id_or_throw(pv, b);
    if (ia == ib) return Ordering::equal;
    // Reversed: a is above b exactly when its shot vector is below.
    switch (compare_componentwise(pv.shots[static_cast<std::size_t>(ia)],
                                  pv.shots[static_cast<std::size_t>(ib)])) {
        case Ordering::less:
            return Ordering::greater;
        case Ordering::greater:
            return Ordering::less;
        case Ordering::incomparable:
            return Ordering::incomparable;
        case Ordering::equal:
            break;
    }
    // Shot labels determine the configuration, so distinct elements never
    // share one.
    throw std::logic_error("distinct elements with equal shot vectors");
}

std::optional<Configuration> inf_gc(const PosetView& pv,
                                    const Configuration& a,
                                    const Configuration& b) {
    const int ia = element_id_or_throw(pv, a);
    const int ib = element_id_or_throw(pv, b);
    const auto& sa = pv.shots[static_cast<std::size_t>(ia)];
    const auto& sb = pv.shots[static_cast<std::size_t>(ib)];
    const int p = pv.params.p;
    ShotVector m(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        m[static_cast<std::size_t>(i)] =
            std::max(sa[static_cast<std::size_t>(i)],
                     sb[static_cast<std::size_t>(i)]);
    }
    // Displacement identity: c_i = O_i - m_i + m_{pred(i)}.
    std::vector<std::int64_t> cards(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) {
        cards[static_cast<std::size_t>(i - 1)] =
            pv.origin.at(i) - m[static_cast<std::size_t>(i - 1)] +
            m[static_cast<std::size_t>(pred(i, p) - 1)];
    }
    Configuration c{std::move(cards)};
    if (is_dual(c, pv.params)) return std::nullopt;
    return c;
}

Configuration sup_gc(const PosetView& pv, const Configuration& a,
                     const Configuration& b) {
    const int ia = element_id_or_throw(pv, a);
    const int ib = element_id_or_throw(pv, b);
    const int count = static_cast<int>(pv.elements.size());
    std::vector<int> upper;
    for (int u = 0; u < count; ++u) {
        if (pv.reaches(u, ia) && pv.reaches(u, ib)) upper.push_back(u);
    }
    for (int u : upper) {
        bool least = true;
        for (int v : upper) {
            if (!pv.reaches(v, u)) {
                least = false;
                break;
            }
        }
        if (least) return pv.elements[static_cast<std::size_t>(u)];
    }
    throw std::logic_error("common upper bounds of '" + a.str() + "' and '" +
                           b.str() + "' have no least element");
}

}  // namespace cards
