#include "cubefree/params.hpp"

#include <stdexcept>

namespace cubefree {

Params Params::create(int n, int r, Mode mode) {
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("n must be in [1, " +
                                    std::to_string(kMaxDimension) + "], got " +
                                    std::to_string(n));
    if (r < 1) throw std::invalid_argument("r must be positive, got " + std::to_string(r));
    if (mode == Mode::strict) {
        if (r % 2 != 0)
            throw std::invalid_argument("strict mode requires even r, got " +
                                        std::to_string(r) +
                                        " (use exploratory mode to override)");
        if (r < 2 || r > 2 * n / 3)
            throw std::invalid_argument(
                "strict mode requires 2 <= r <= floor(2n/3) = " +
                std::to_string(2 * n / 3) + ", got r=" + std::to_string(r) +
                " (use exploratory mode to override)");
    } else {
        if (r > n)
            throw std::invalid_argument("exploratory mode requires r <= n, got r=" +
                                        std::to_string(r) + ", n=" + std::to_string(n));
    }
    return Params{n, r, mode};
}

int Params::half_r() const {
    if (r % 2 != 0)
        throw std::domain_error("r/2 requested for odd r=" + std::to_string(r));
    return r / 2;
}

std::string to_string(Mode mode) {
    return mode == Mode::strict ? "strict" : "exploratory";
}

Mode mode_from_string(const std::string& text) {
    if (text == "strict") return Mode::strict;
    if (text == "exploratory") return Mode::exploratory;
    throw std::invalid_argument("unknown mode '" + text +
                                "' (expected strict or exploratory)");
}

}  // namespace cubefree
