#pragma once

// The three explicit constructions: antipodal block sets (independent),
// random sampling with triangle removal (triangle-free), and the fixed-bit
// level set (triangle-free).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubefree/core.hpp"
#include "cubefree/params.hpp"
#include "cubefree/rng.hpp"
#include "cubefree/vertex.hpp"

namespace cubefree {

// Two p-long blocks are antipodal when their XOR is all ones. Pairs are
// stored as (a, b) with a < b, ascending by a.
struct AntipodalParams {
    int n = 0;
    int p = 0;
    int m = 0;  // n = m * p, block count
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // 2^(p-1) of them

    // Validates p prime, p | n, p not dividing r, n/p > r; each failure has
    // its own message.
    static AntipodalParams create(int n, int p, int r);
};

// Among primes p with p | n, p not dividing r and n/p > r, the one
// maximizing the set size 2^(n/p + p - 1); ties go to the smaller p.
// Empty when no prime qualifies.
std::optional<int> select_antipodal_prime(int n, int r);

// All 2^m vertices built by concatenating m blocks, each a or b. Block j
// (1-based, leftmost) occupies bit positions (j-1)p .. jp-1.
VertexSet antipodal_block_set(std::uint64_t a, std::uint64_t b, int p, int m);

// Union of the block sets over all 2^(p-1) antipodal pairs; exactly
// 2^(n/p + p - 1) vertices, independent at distance r (pairwise distances
// are positive multiples of p or at least m).
VertexSet antipodal_construction(int n, int p, int r, const EnumerationGuard& guard = {});

struct SamplingPlan {
    // Unset means: use the optimal sampling probability for the instance.
    std::optional<double> probability;
    std::uint64_t seed = kDefaultSeed;
    int trials = 1;  // best_of_trials runs seeds seed, seed+1, ...
};

struct AlterationTrace {
    std::uint64_t sampled_count = 0;    // X, vertices picked
    std::uint64_t triangles_found = 0;  // Y, triangles inside the sample
    std::vector<Vertex> removed;        // in removal order
    std::uint64_t final_size = 0;       // sampled_count - |removed|
    double probability = 0.0;           // the probability actually used
    std::uint64_t seed = 0;
};

// Samples each vertex independently with the plan's probability (draw index
// = vertex mask), then scans the sample's triangles in ascending (u, v, w)
// order and removes the string-largest member of each triangle that is
// still intact. The result is triangle-free for every seed.
std::pair<VertexSet, AlterationTrace> alteration_construction(
    const Params& params, const SamplingPlan& plan, const EnumerationGuard& guard = {});

// Runs alteration_construction for seeds plan.seed .. plan.seed + trials - 1
// and keeps the largest final set (first on ties).
std::pair<VertexSet, AlterationTrace> best_of_trials(
    const Params& params, const SamplingPlan& plan, const EnumerationGuard& guard = {});

// Every weight-(r/2) vertex whose coordinate 1 or 2 is set. Size
// C(n, r/2) - C(n-2, r/2); triangle-free since two members sharing one of
// those coordinates are at distance at most r - 2, and among any three
// members two must share one.
VertexSet fixed_bit_construction(const Params& params);

}  // namespace cubefree
