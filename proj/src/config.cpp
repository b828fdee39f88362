#include "cards/config.hpp"

#include <charconv>
#include <numeric>
#include <utility>

#include "cards/errors.hpp"

namespace cards {

Configuration::Configuration(std::vector<std::int64_t> cards)
    : cards_(std::move(cards)) {
    if (cards_.empty()) {
        throw ValidationError("configuration must have at least one position");
    }
    for (std::int64_t c : cards_) {
        if (c < 0) {
            throw ValidationError("card counts must be non-negative, got " +
                                  std::to_string(c));
        }
    }
}

Configuration Configuration::parse(std::string_view text) {
    std::vector<std::int64_t> cards;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view field = text.substr(
            start, comma == std::string_view::npos ? comma : comma - start);
        std::int64_t value = 0;
        const char* first = field.data();
        const char* last = field.data() + field.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || field.empty()) {
            throw ValidationError("bad configuration field '" +
                                  std::string(field) + "' in '" +
                                  std::string(text) + "'");
        }
        cards.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Configuration(std::move(cards));
}

std::string Configuration::str() const {
    std::string out;
    for (std::size_t i = 0; i < cards_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(cards_[i]);
    }
    return out;
}

std::int64_t Configuration::total() const {
    return std::accumulate(cards_.begin(), cards_.end(), std::int64_t{0});
}

void validate(const Configuration& a, const GameParams& params) {
    if (a.players() != params.p) {
        throw ValidationError("configuration '" + a.str() + "' has " +
                              std::to_string(a.players()) +
                              " positions, expected " +
                              std::to_string(params.p));
    }
    if (a.total() != params.n) {
        throw ValidationError("configuration '" + a.str() + "' sums to " +
                              std::to_string(a.total()) + ", expected " +
                              std::to_string(params.n));
    }
}

}  // namespace cards
