#include "cubefree/verify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cubefree {

namespace {

void require_set_matches(const VertexSet& set, const Params& params) {
    if (!set.empty() && set.dimension() != params.n)
        throw std::invalid_argument("set dimension " + std::to_string(set.dimension()) +
                                    " does not match params n=" + std::to_string(params.n));
}

std::vector<Vertex> members_in_string_order(const VertexSet& set) {
    std::vector<Vertex> out = set.members();
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

CheckResult check_triangle_free(const VertexSet& set, const Params& params) {
    require_set_matches(set, params);
    if (params.r % 2 != 0) return std::nullopt;  // triangles need even r

    // String order throughout, so the first hit is the least violating
    // triple and its witnesses come out sorted.
    const std::vector<Vertex> members = members_in_string_order(set);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (hamming_distance(members[i], members[j]) != params.r) continue;
            Vertex best;
            bool found = false;
            for (const Vertex& w : common_r_neighbors(members[i], members[j], params)) {
                if (lex_less(members[j], w) && (!found || lex_less(w, best)) && set.contains(w)) {
                    best = w;
                    found = true;
                }
            }
            if (found)
                return Violation{Violation::Kind::triangle, {members[i], members[j], best}};
        }
    }
    return std::nullopt;
}

CheckResult check_independent(const VertexSet& set, const Params& params) {
    require_set_matches(set, params);
    const std::vector<Vertex> members = members_in_string_order(set);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (hamming_distance(members[i], members[j]) == params.r)
                return Violation{Violation::Kind::edge, {members[i], members[j]}};
    return std::nullopt;
}

BigInt count_triangles_graph(const Params& params, const EnumerationGuard& guard) {
    if (params.n > guard.max_dimension)
        throw std::runtime_error("count_triangles_graph: n=" + std::to_string(params.n) +
                                 " exceeds enumeration guard (max " +
                                 std::to_string(guard.max_dimension) + ")");
    // Per edge we scan the full r-neighborhood of one endpoint; this stays
    // independent of the split-flip construction in common_r_neighbors.
    const BigInt degree = binomial(params.n, params.r);
    const BigInt work = pow2(static_cast<unsigned>(params.n)) * degree * degree / 2;
    if (work > BigInt(static_cast<std::uint64_t>(guard.max_work)))
        throw std::runtime_error("count_triangles_graph: estimated work " + work.str() +
                                 " exceeds enumeration guard");

    const std::uint64_t total = std::uint64_t{1} << params.n;
    std::uint64_t triple_ends = 0;  // (edge, common corner) incidences
    for (std::uint64_t ub = 0; ub < total; ++ub) {
        for_each_weight_mask(params.n, params.r, [&](std::uint64_t flip) {
            const std::uint64_t vb = ub ^ flip;
            if (vb <= ub) return;  // each edge once
            for_each_weight_mask(params.n, params.r, [&](std::uint64_t flip2) {
                const std::uint64_t wb = ub ^ flip2;
                if (wb == vb) return;
                if (std::popcount(wb ^ vb) == params.r) ++triple_ends;
            });
        });
    }
    if (triple_ends % 3 != 0)
        throw std::logic_error("triangle incidence count not divisible by 3");
    return BigInt(triple_ends) / 3;
}

BigInt count_triangles_in_set(const VertexSet& set, const Params& params) {
    require_set_matches(set, params);
    if (params.r % 2 != 0) return 0;

    const auto& members = set.members();
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (hamming_distance(members[i], members[j]) != params.r) continue;
            // Third corners above members[j], so each triangle counts once.
            for (const Vertex& w : common_r_neighbors(members[i], members[j], params))
                if (w.bits > members[j].bits && set.contains(w)) ++count;
        }
    }
    return count;
}

}  // namespace cubefree
