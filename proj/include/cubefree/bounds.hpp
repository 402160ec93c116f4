#pragma once

// Closed-form bound evaluation: triangle counts, the optimal sampling
// probability, probabilistic and asymptotic lower bounds, construction
// sizes, the matching (Frankl) bound, the r=2 upper bound and the general
// level-sum upper bound. Integer quantities are exact; real-valued outputs
// are doubles with a documented 1e-9 comparison tolerance.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubefree/bigmath.hpp"
#include "cubefree/params.hpp"

namespace cubefree {

// Which inequality produced a level's bound.
enum class LevelRule { trivial, shadow, cover };

std::string to_string(LevelRule rule);

struct LevelBound {
    BigInt value;
    LevelRule rule = LevelRule::trivial;
};

// Bounds on the number of members per level k = 0..n.
struct LevelProfile {
    std::vector<LevelBound> per_level;
    BigInt total() const;
};

// Optimal sampling probability with the clamp into (0, 1] made explicit.
// raw is the formula value and may exceed 1 or be infinite (denominator 0).
struct ClampedProbability {
    double value = 1.0;
    double raw = 1.0;
    bool clamped = false;
};

struct AntipodalBound {
    int p = 0;
    BigInt size;
};

struct BoundReport {
    Params params;
    BigInt triangle_count;
    ClampedProbability optimal_probability;
    double lower_probabilistic = 0.0;
    double lower_asymptotic = 0.0;
    std::optional<AntipodalBound> antipodal;  // absent: no qualifying prime
    std::optional<BigInt> fixed_bit;          // absent: r odd
    std::optional<BigInt> upper_r2;           // present iff r = 2
    std::optional<BigInt> upper_level_sum;    // present iff r even and 2r <= n
    bool upper_applicable = false;            // r even and 2r <= n
    std::vector<std::string> notes;           // reasons for absent fields
};

// (1/6) * 2^n * C(n,r) * C(r,r/2) * C(n-r,r/2), exact. Throws if r is odd
// or the division by 6 is not exact (parameters outside the derivation).
BigInt triangle_count_formula(const Params& params);

// sqrt(2 / (C(n,r) * C(r,r/2) * C(n-r,r/2))), clamped to 1. A vanishing
// denominator (no triangles) clamps to 1 with raw = infinity. Odd r counts
// as a vanishing denominator.
ClampedProbability optimal_sampling_probability(const Params& params);

// (2 sqrt 2 / 3) * 2^n / sqrt(C(n,r) C(r,r/2) C(n-r,r/2)). Equals
// 2^n * p * 2/3 at the unclamped optimal probability p. When no triangles
// exist the whole cube qualifies, so the value is 2^n.
double lower_bound_probabilistic(const Params& params);

// sqrt(2) * (2/3) * 2^n / (e^r * 2^(r/2) * (n/r)^(3r/4)).
double lower_bound_asymptotic(const Params& params);

// 2^(n/p + p - 1). Requires p >= 1 and p | n.
BigInt antipodal_size(int n, int p);

// C(n, r/2) - C(n-2, r/2). Requires even r.
BigInt fixed_bit_size(const Params& params);

// (s-1) * C(n-1, k-1): the largest k-uniform family over n points with no
// s pairwise disjoint members. Requires n >= k*s, k >= 1, s >= 2.
BigInt frankl_bound(int n, int k, int s);

// Exact ceiling of 1 + (2/(n+1)) * (2^(n+1) - 2), the r=2 upper bound.
BigInt upper_bound_r2(int n);

// The same quantity as the term-by-term rational sum
// 1 + sum_{k=1..n} (2/k) * C(n, k-1), before the ceiling.
BigRat upper_bound_r2_sum(int n);

// Bound on the number of members at level k. For k <= r/2 the trivial
// C(n, k); for r/2 < k <= floor(n/2) the shadow rule
//   floor(C(n, k - r/2) * frankl_bound(n - (k - r/2), r/2, 3) / C(k, r/2));
// above floor(n/2) the cover-symmetric value at n - k. Requires 2r <= n.
LevelBound level_bound(const Params& params, int k);

// Sum of level_bound over k = 0..n, each level counted exactly once, with
// the per-level profile.
std::pair<BigInt, LevelProfile> upper_bound_level_sum(const Params& params);

// The doubled half-sum variant of the same argument,
//   2 * (sum_{k <= r/2} C(n,k) + sum_{r/2 < k <= floor(n/2)} C(n,k) * r / (n - k + r/2)),
// which counts the middle level twice for even n. Exposed for comparison
// only; the single-count sum above is the bound this library reports.
BigRat upper_bound_level_sum_doubled(const Params& params);

// Everything applicable for one instance; absences carry a note.
BoundReport bound_report(const Params& params);

}  // namespace cubefree
