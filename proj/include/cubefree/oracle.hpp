#pragma once

// Exact maximum triangle-free subset by branch and bound on instances small
// enough to enumerate, and the sandwich report that checks every lower
// witness against every applicable upper bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubefree/bigmath.hpp"
#include "cubefree/core.hpp"
#include "cubefree/params.hpp"
#include "cubefree/vertex.hpp"

namespace cubefree {

struct SearchLimits {
    std::uint64_t max_nodes = 100'000'000;
    double time_budget_secs = 120.0;
    bool allow_symmetry = true;
};

struct OracleResult {
    std::uint64_t best_size = 0;
    VertexSet witness;       // always triangle-free, |witness| = best_size
    bool optimal = false;    // search exhausted within budget
    std::uint64_t nodes = 0;
};

// Depth-first include/exclude search over vertices in ascending order,
// include branch first. Pruning: a candidate closing a triangle with two
// chosen vertices, chosen + remaining <= incumbent, and (for even r with
// 2r <= n) the per-level capacity from level_bound. With allow_symmetry the
// all-zeros vertex is fixed into the set, valid because XOR translations
// act transitively on vertices. Exceeding a budget returns the incumbent
// with optimal = false, never an error.
OracleResult max_triangle_free_exact(const Params& params, const SearchLimits& limits = {},
                                     const EnumerationGuard& guard = {});

struct SandwichReport {
    Params params;
    double lower_probabilistic = 0.0;
    std::optional<int> antipodal_prime;
    std::optional<BigInt> antipodal;       // size, formula value
    std::optional<BigInt> fixed_bit;       // absent when r is odd
    std::optional<std::uint64_t> alteration;  // default-plan run, absent above the guard
    std::optional<OracleResult> oracle;
    BigInt best_known;                     // largest lower witness seen
    std::optional<BigInt> upper_r2;
    std::optional<BigInt> upper_level_sum;
    bool consistent = true;                // no applicable inequality failed
    std::vector<std::string> violations;   // the failed inequalities, spelled out
    std::vector<std::string> notes;        // reasons for absent entries
};

// Gathers construction sizes, the probabilistic lower bound, the oracle
// result (skipped above the enumeration guard) and the upper bounds, then
// checks lower <= best <= upper wherever both sides are defined. When the
// oracle is optimal its value also caps every construction and the
// probabilistic bound.
SandwichReport sandwich_report(const Params& params, const SearchLimits& limits = {},
                               const EnumerationGuard& guard = {});

}  // namespace cubefree
