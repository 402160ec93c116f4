#pragma once

// Brute-force ground truth: triangle-freeness, independence and triangle
// counts, with canonical (lexicographically least) violation witnesses.

#include <optional>
#include <vector>

#include "cubefree/bigmath.hpp"
#include "cubefree/core.hpp"
#include "cubefree/params.hpp"
#include "cubefree/vertex.hpp"

namespace cubefree {

struct Violation {
    enum class Kind { edge, triangle };
    Kind kind;
    std::vector<Vertex> witnesses;  // 2 or 3 members, in string order (lex_less)
};

// Empty optional means the check passed.
using CheckResult = std::optional<Violation>;

// Ok iff no triple of members is pairwise at distance exactly r. Walks member
// pairs at distance r and intersects their common r-neighborhood with the set.
CheckResult check_triangle_free(const VertexSet& set, const Params& params);

// Ok iff no member pair is at distance exactly r (strictly stronger).
CheckResult check_independent(const VertexSet& set, const Params& params);

// Number of triangles in the whole r-distance graph, counted per edge via
// common-neighbor enumeration and divided by 3.
BigInt count_triangles_graph(const Params& params, const EnumerationGuard& guard = {});

// Number of triangles with all three corners inside the set.
BigInt count_triangles_in_set(const VertexSet& set, const Params& params);

}  // namespace cubefree
