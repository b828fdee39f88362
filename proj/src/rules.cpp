#include "cards/rules.hpp"

#include <algorithm>
#include <cassert>

#include "cards/errors.hpp"

namespace cards {

bool is_enabled(const Configuration& a, int pos) {
    const int p = a.players();
    if (pos < 1 || pos > p) return false;
    return a.at(pos) > a.at(succ(pos, p));
}

std::vector<int> enabled_positions(const Configuration& a) {
    std::vector<int> out;
    for (int i = 1; i <= a.players(); ++i) {
        if (is_enabled(a, i)) out.push_back(i);
    }
    return out;
}

Configuration apply_move(const Configuration& a, int pos) {
    if (!is_enabled(a, pos)) {
        throw MoveNotEnabled("position " + std::to_string(pos) +
                             " has no enabled move in '" + a.str() + "'");
    }
    std::vector<std::int64_t> cards = a.cards();
    const int p = a.players();
    cards[pos - 1] -= 1;
    cards[succ(pos, p) - 1] += 1;
    return Configuration(std::move(cards));
}

bool is_fixed_point(const Configuration& a) {
    for (int i = 1; i <= a.players(); ++i) {
        if (is_enabled(a, i)) return false;
    }
    return true;
}

bool is_dual(const Configuration& a, const GameParams& params) {
    assert(a.players() == params.p && a.total() == params.n);
    if (params.q == 0) return false;
    return std::all_of(a.cards().begin(), a.cards().end(),
                       [&](std::int64_t c) {
                           return c == params.k || c == params.k + 1;
                       });
}

Configuration canonical_dual(const GameParams& params) {
    std::vector<std::int64_t> cards(static_cast<std::size_t>(params.p),
                                    params.k);
    for (int i = 0; i < params.q; ++i) cards[i] = params.k + 1;
    return Configuration(std::move(cards));
}

PrefixDelta prefix_delta(const Configuration& a, const Configuration& b) {
    if (a.players() != b.players()) {
        throw ValidationError("prefix delta of '" + a.str() + "' and '" +
                              b.str() + "': lengths differ");
    }
    if (a.total() != b.total()) {
        throw ValidationError("prefix delta of '" + a.str() + "' and '" +
                              b.str() + "': totals differ");
    }
    PrefixDelta d(a.cards().size());
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        acc += a.cards()[i] - b.cards()[i];
        d[i] = acc;
    }
    return d;
}

std::vector<Configuration> dual_configurations(const GameParams& params) {
    std::vector<Configuration> out;
    if (params.q == 0) return out;
    // Choose the q positions holding k+1 cards.
    std::vector<int> take(static_cast<std::size_t>(params.q));
    for (int i = 0; i < params.q; ++i) take[i] = i;
    while (true) {
        std::vector<std::int64_t> cards(static_cast<std::size_t>(params.p),
                                        params.k);
        for (int pos : take) cards[pos] += 1;
        out.emplace_back(std::move(cards));
        int j = params.q - 1;
        while (j >= 0 && take[j] == params.p - params.q + j) --j;
        if (j < 0) break;
        ++take[j];
        for (int l = j + 1; l < params.q; ++l) take[l] = take[l - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cards
