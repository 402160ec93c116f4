#pragma once

// Distance primitives on the n-cube: Hamming distance, the distance-r
// neighborhood, the triangle predicate, levels, shadows and covers.

#include <cstdint>
#include <vector>

#include "cubefree/params.hpp"
#include "cubefree/vertex.hpp"

namespace cubefree {

// Caps for operations that materialize vertex lists or sweep the whole cube.
// Thresholds are configuration, not constants; defaults keep every default
// run interactive.
struct EnumerationGuard {
    int max_dimension = 20;                              // whole-cube sweeps
    std::uint64_t max_materialized = std::uint64_t{1} << 22;  // returned lists
    double max_work = 4e9;                               // rough op estimate
};

int hamming_distance(const Vertex& u, const Vertex& v);

// Number of ones.
int level(const Vertex& v);

// All C(n, r) vertices at Hamming distance exactly r from v, ascending.
std::vector<Vertex> r_neighbors(const Vertex& v, const Params& params,
                                const EnumerationGuard& guard = {});

// True iff the three distinct vertices are pairwise at distance exactly r.
bool is_triangle(const Vertex& u, const Vertex& v, const Vertex& w,
                 const Params& params);

// All vertices at distance exactly r from each of u and v, ascending. Such a
// vertex flips d(u,v)/2 of the differing positions and r - d(u,v)/2 of the
// agreeing ones, so the result is empty when d(u, v) is odd, above 2r, or
// too far below r for the remaining flips to fit.
std::vector<Vertex> common_r_neighbors(const Vertex& u, const Vertex& v,
                                       const Params& params,
                                       const EnumerationGuard& guard = {});

// Vertices obtained by clearing exactly `depth` ones of v, ascending.
std::vector<Vertex> shadows(const Vertex& v, int depth,
                            const EnumerationGuard& guard = {});

// Vertices obtained by setting exactly `depth` zeros of v, ascending.
std::vector<Vertex> covers(const Vertex& v, int depth,
                           const EnumerationGuard& guard = {});

// Calls fn(mask) for every width-bit mask with exactly `weight` ones, in
// ascending numeric order (Gosper's hack).
template <typename F>
void for_each_weight_mask(int width, int weight, F&& fn) {
    if (weight < 0 || weight > width) return;
    if (weight == 0) {
        fn(std::uint64_t{0});
        return;
    }
    std::uint64_t mask = (weight == 64) ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << weight) - 1;
    const std::uint64_t top = width_mask(width);
    while (true) {
        fn(mask);
        // Next ascending mask of the same weight.
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t ripple = mask + low;
        if (ripple > top || ripple < mask) break;  // wrapped past the width
        mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
}

}  // namespace cubefree
