#include "cubefree/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cubefree/bigmath.hpp"
#include "cubefree/bounds.hpp"

namespace cubefree {

AntipodalParams AntipodalParams::create(int n, int p, int r) {
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("n must be in [1, " + std::to_string(kMaxDimension) + "]");
    if (!is_prime(p))
        throw std::invalid_argument("p=" + std::to_string(p) + " is not prime");
    if (n % p != 0)
        throw std::invalid_argument("p=" + std::to_string(p) +
                                    " does not divide n=" + std::to_string(n));
    if (r % p == 0)
        throw std::invalid_argument("p=" + std::to_string(p) +
                                    " divides r=" + std::to_string(r));
    const int m = n / p;
    if (m <= r)
        throw std::invalid_argument("block count m=" + std::to_string(m) +
                                    " must exceed r=" + std::to_string(r));
    AntipodalParams out;
    out.n = n;
    out.p = p;
    out.m = m;
    const std::uint64_t ones = width_mask(p);
    out.pairs.reserve(std::size_t{1} << (p - 1));
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << (p - 1)); ++a)
        out.pairs.emplace_back(a, a ^ ones);
    return out;
}

std::optional<int> select_antipodal_prime(int n, int r) {
    if (n < 1 || r < 2) throw std::invalid_argument("need n >= 1 and r >= 2");
    std::optional<int> best;
    int best_exponent = -1;
    for (int p = 2; p <= n; ++p) {
        if (!is_prime(p) || n % p != 0 || r % p == 0 || n / p <= r) continue;
        const int exponent = n / p + p - 1;  // set size is 2^exponent
        if (exponent > best_exponent) {      // ties keep the smaller p
            best_exponent = exponent;
            best = p;
        }
    }
    return best;
}

VertexSet antipodal_block_set(std::uint64_t a, std::uint64_t b, int p, int m) {
    if (p < 1 || m < 1 || p * m > kMaxDimension)
        throw std::invalid_argument("block sizes out of range: p=" + std::to_string(p) +
                                    ", m=" + std::to_string(m));
    const std::uint64_t ones = width_mask(p);
    if ((a | b) > ones || (a ^ b) != ones)
        throw std::invalid_argument("blocks are not an antipodal pair of width " +
                                    std::to_string(p));
    const int n = p * m;
    std::vector<Vertex> members;
    members.reserve(std::size_t{1} << m);
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << m); ++word) {
        std::uint64_t bits = 0;
        for (int j = 0; j < m; ++j)
            bits |= (((word >> j) & 1u) ? b : a) << (j * p);
        members.push_back(Vertex{bits, n});
    }
    return VertexSet(n, std::move(members));
}

VertexSet antipodal_construction(int n, int p, int r, const EnumerationGuard& guard) {
    const AntipodalParams ap = AntipodalParams::create(n, p, r);
    const BigInt size = pow2(static_cast<unsigned>(ap.m + ap.p - 1));
    if (size > BigInt(guard.max_materialized))
        throw std::runtime_error("antipodal construction would materalize " + size.str() +
                                 " vertices (guard: " + std::to_string(guard.max_materialized) +
                                 ")");
    std::vector<Vertex> members;
    members.reserve(static_cast<std::size_t>(size));
    for (const auto& [a, b] : ap.pairs) {
        const VertexSet block = antipodal_block_set(a, b, ap.p, ap.m);
        members.insert(members.end(), block.begin(), block.end());
    }
    return VertexSet(n, std::move(members));
}

std::pair<VertexSet, AlterationTrace> alteration_construction(const Params& params,
                                                              const SamplingPlan& plan,
                                                              const EnumerationGuard& guard) {
    const double prob =
        plan.probability.value_or(optimal_sampling_probability(params).value);
    if (!(prob > 0.0 && prob <= 1.0))
        throw std::invalid_argument("sampling probability must be in (0, 1], got " +
                                    std::to_string(prob));
    if (params.n > guard.max_dimension)
        throw std::runtime_error("alteration sweep over 2^" + std::to_string(params.n) +
                                 " vertices exceeds the enumeration guard (max n " +
                                 std::to_string(guard.max_dimension) + ")");

    const std::uint64_t total = std::uint64_t{1} << params.n;
    std::vector<std::uint64_t> sample;
    std::vector<bool> in_sample(total, false);
    for (std::uint64_t v = 0; v < total; ++v) {
        if (unit_draw(plan.seed, v) < prob) {
            sample.push_back(v);
            in_sample[v] = true;
        }
    }

    const double pair_work = 0.5 * static_cast<double>(sample.size()) *
                             static_cast<double>(sample.size());
    if (pair_work > guard.max_work)
        throw std::runtime_error("sample of " + std::to_string(sample.size()) +
                                 " vertices exceeds the pair-scan work guard; "
                                 "lower the probability");

    AlterationTrace trace;
    trace.sampled_count = sample.size();
    trace.probability = prob;
    trace.seed = plan.seed;

    // Triangles of the sample in ascending (u, v, w) order. Each one either
    // lost a member to an earlier removal or loses its string-largest member
    // now, so no triangle survives.
    std::vector<bool> alive = in_sample;
    for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
        const Vertex u{sample[i], params.n};
        for (std::size_t j = i + 1; j < sample.size(); ++j) {
            if (std::popcount(sample[i] ^ sample[j]) != params.r) continue;
            const Vertex v{sample[j], params.n};
            for (const Vertex& w : common_r_neighbors(u, v, params, guard)) {
                if (w.bits <= v.bits || !in_sample[w.bits]) continue;
                ++trace.triangles_found;
                if (!alive[u.bits] || !alive[v.bits] || !alive[w.bits]) continue;
                const Vertex drop = std::max({u, v, w}, lex_less);
                alive[drop.bits] = false;
                trace.removed.push_back(drop);
            }
        }
    }

    std::vector<Vertex> members;
    members.reserve(sample.size() - trace.removed.size());
    for (std::uint64_t v : sample)
        if (alive[v]) members.push_back(Vertex{v, params.n});
    trace.final_size = members.size();
    return {VertexSet(params.n, std::move(members)), std::move(trace)};
}

std::pair<VertexSet, AlterationTrace> best_of_trials(const Params& params,
                                                     const SamplingPlan& plan,
                                                     const EnumerationGuard& guard) {
    if (plan.trials < 1) throw std::invalid_argument("trials must be positive");
    std::pair<VertexSet, AlterationTrace> best;
    for (int t = 0; t < plan.trials; ++t) {
        SamplingPlan single = plan;
        single.seed = plan.seed + static_cast<std::uint64_t>(t);
        single.trials = 1;
        auto run = alteration_construction(params, single, guard);
        if (t == 0 || run.second.final_size > best.second.final_size) best = std::move(run);
    }
    return best;
}

VertexSet fixed_bit_construction(const Params& params) {
    const int h = params.half_r();
    if (h > params.n)
        throw std::invalid_argument("r/2 exceeds the dimension");
    std::vector<Vertex> members;
    for_each_weight_mask(params.n, h, [&](std::uint64_t mask) {
        if (mask & 0b11) members.push_back(Vertex{mask, params.n});
    });
    return VertexSet(params.n, std::move(members));
}

}  // namespace cubefree
