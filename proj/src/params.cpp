#include "cards/params.hpp"

#include <string>

#include "cards/errors.hpp"

namespace cards {

GameParams make_params(std::int64_t n, int p) {
    if (p < 2) {
        throw ValidationError("players must be at least 2, got " +
                              std::to_string(p));
    }
    if (n < 0) {
        throw ValidationError("card count must be non-negative, got " +
                              std::to_string(n));
    }
    GameParams params;
    params.n = n;
    params.p = p;
    params.k = n / p;
    params.q = static_cast<int>(n % p);
    return params;
}

}  // namespace cards
