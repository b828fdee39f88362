#pragma once

#include <cstdint>

namespace cards {

// A ring of p players sharing n indistinguishable cards, with
// n = k*p + q and 0 <= q < p.
struct GameParams {
    std::int64_t n = 0;  // total cards
    int p = 2;           // players, at least 2
    std::int64_t k = 0;  // n div p
    int q = 0;           // n mod p

    friend bool operator==(const GameParams&, const GameParams&) = default;
};

// Throws ValidationError unless n >= 0 and p >= 2.
GameParams make_params(std::int64_t n, int p);

}  // namespace cards
