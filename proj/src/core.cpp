#include "cubefree/core.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cubefree/bigmath.hpp"

namespace cubefree {

namespace {

void require_same_dimension(const Vertex& u, const Vertex& v) {
    if (u.n != v.n)
        throw std::invalid_argument("dimension mismatch: " + std::to_string(u.n) +
                                    " vs " + std::to_string(v.n));
}

void check_materialization(const BigInt& count, const EnumerationGuard& guard,
                           const char* what) {
    if (count > BigInt(guard.max_materialized))
        throw std::runtime_error(std::string(what) + " would materialize " +
                                 count.str() + " vertices (guard: " +
                                 std::to_string(guard.max_materialized) + ")");
}

// Spreads the `weight` set bits of `small`, a mask over index positions,
// onto the actual bit positions listed in `positions`.
std::uint64_t spread_mask(std::uint64_t small, const std::vector<int>& positions) {
    std::uint64_t out = 0;
    while (small != 0) {
        const int idx = std::countr_zero(small);
        out |= std::uint64_t{1} << positions[static_cast<std::size_t>(idx)];
        small &= small - 1;
    }
    return out;
}

}  // namespace

int hamming_distance(const Vertex& u, const Vertex& v) {
    require_same_dimension(u, v);
    return std::popcount(u.bits ^ v.bits);
}

int level(const Vertex& v) { return std::popcount(v.bits); }

std::vector<Vertex> r_neighbors(const Vertex& v, const Params& params,
                                const EnumerationGuard& guard) {
    if (v.n != params.n)
        throw std::invalid_argument("vertex dimension " + std::to_string(v.n) +
                                    " does not match params n=" + std::to_string(params.n));
    check_materialization(binomial(params.n, params.r), guard, "r_neighbors");
    std::vector<Vertex> out;
    for_each_weight_mask(params.n, params.r, [&](std::uint64_t flip) {
        out.push_back(Vertex{v.bits ^ flip, v.n});
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_triangle(const Vertex& u, const Vertex& v, const Vertex& w,
                 const Params& params) {
    require_same_dimension(u, v);
    require_same_dimension(u, w);
    if (u == v || u == w || v == w)
        throw std::invalid_argument("is_triangle requires three distinct vertices");
    return hamming_distance(u, v) == params.r && hamming_distance(u, w) == params.r &&
           hamming_distance(v, w) == params.r;
}

std::vector<Vertex> common_r_neighbors(const Vertex& u, const Vertex& v,
                                       const Params& params, const EnumerationGuard& guard) {
    require_same_dimension(u, v);
    if (u.n != params.n)
        throw std::invalid_argument("vertex dimension " + std::to_string(u.n) +
                                    " does not match params n=" + std::to_string(params.n));
    const int d = hamming_distance(u, v);
    std::vector<Vertex> out;
    if (d % 2 != 0) return out;
    const int in_diff = d / 2;           // flips among the differing positions
    const int in_same = params.r - in_diff;  // flips among the agreeing ones
    if (in_same < 0 || in_same > params.n - d) return out;
    check_materialization(binomial(d, in_diff) * binomial(params.n - d, in_same), guard,
                          "common_r_neighbors");

    std::vector<int> diff_pos, same_pos;
    for (int i = 0; i < params.n; ++i) {
        if (((u.bits ^ v.bits) >> i) & 1u)
            diff_pos.push_back(i);
        else
            same_pos.push_back(i);
    }
    for_each_weight_mask(d, in_diff, [&](std::uint64_t a) {
        const std::uint64_t flip_diff = spread_mask(a, diff_pos);
        for_each_weight_mask(params.n - d, in_same, [&](std::uint64_t b) {
            out.push_back(Vertex{u.bits ^ flip_diff ^ spread_mask(b, same_pos), u.n});
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> shadows(const Vertex& v, int depth, const EnumerationGuard& guard) {
    const int ones = level(v);
    if (depth < 1) throw std::invalid_argument("shadow depth must be positive");
    if (depth > ones)
        throw std::invalid_argument("shadow depth " + std::to_string(depth) +
                                    " exceeds level " + std::to_string(ones));
    check_materialization(binomial(ones, depth), guard, "shadows");

    std::vector<int> positions;
    positions.reserve(static_cast<std::size_t>(ones));
    for (int i = 0; i < v.n; ++i)
        if ((v.bits >> i) & 1u) positions.push_back(i);

    std::vector<Vertex> out;
    for_each_weight_mask(ones, depth, [&](std::uint64_t pick) {
        out.push_back(Vertex{v.bits ^ spread_mask(pick, positions), v.n});
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> covers(const Vertex& v, int depth, const EnumerationGuard& guard) {
    const int zeros = v.n - level(v);
    if (depth < 1) throw std::invalid_argument("cover depth must be positive");
    if (depth > zeros)
        throw std::invalid_argument("cover depth " + std::to_string(depth) +
                                    " exceeds number of zeros " + std::to_string(zeros));
    check_materialization(binomial(zeros, depth), guard, "covers");

    std::vector<int> positions;
    positions.reserve(static_cast<std::size_t>(zeros));
    for (int i = 0; i < v.n; ++i)
        if (((v.bits >> i) & 1u) == 0) positions.push_back(i);

    std::vector<Vertex> out;
    for_each_weight_mask(zeros, depth, [&](std::uint64_t pick) {
        out.push_back(Vertex{v.bits | spread_mask(pick, positions), v.n});
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cubefree
