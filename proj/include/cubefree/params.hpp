#pragma once

#include <string>

namespace cubefree {

// Vertices live in one machine word.
inline constexpr int kMaxDimension = 64;

// Parameter regime. Strict keeps (n, r) in the range where the triangle
// problem is non-trivial: r even and 2 <= r <= floor(2n/3). Exploratory
// admits any 1 <= r <= n; the constructions and verifiers stay well defined
// there even though the bounds may not apply.
enum class Mode { strict, exploratory };

struct Params {
    int n = 0;
    int r = 0;
    Mode mode = Mode::strict;

    // Validates and returns the instance; throws std::invalid_argument.
    static Params create(int n, int r, Mode mode = Mode::strict);

    bool even_r() const { return r % 2 == 0; }
    int half_r() const;  // r/2; throws if r is odd

    // True when the level-sum upper bound machinery applies (2r <= n, r even).
    bool in_upper_regime() const { return even_r() && 2 * r <= n; }
};

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& text);

}  // namespace cubefree
