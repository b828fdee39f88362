#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cards/params.hpp"

namespace cards {

// Card counts by position. Positions are 1-based on every public surface
// and wrap around the ring: the successor of position p is position 1.
// Values are immutable after construction.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<std::int64_t> cards);

    // Text form: comma-separated decimal counts in position order, "4,1,1".
    static Configuration parse(std::string_view text);
    std::string str() const;

    int players() const { return static_cast<int>(cards_.size()); }
    std::int64_t total() const;
    std::int64_t at(int pos) const { return cards_[pos - 1]; }

    const std::vector<std::int64_t>& cards() const { return cards_; }

    friend auto operator<=>(const Configuration&, const Configuration&) = default;

private:
    std::vector<std::int64_t> cards_;
};

inline int succ(int pos, int p) { return pos % p + 1; }
inline int pred(int pos, int p) { return (pos + p - 2) % p + 1; }

// Throws ValidationError unless a has length p and sum n.
void validate(const Configuration& a, const GameParams& params);

}  // namespace cards
