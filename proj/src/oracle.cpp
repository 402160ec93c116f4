#include "cubefree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "cubefree/bounds.hpp"
#include "cubefree/constructions.hpp"

namespace cubefree {

namespace {

struct Frame {
    std::uint64_t pos;
    int stage;      // 0 first visit, 1 after include branch, 2 after exclude
    bool included;
};

}  // namespace

OracleResult max_triangle_free_exact(const Params& params, const SearchLimits& limits,
                                     const EnumerationGuard& guard) {
    if (params.n > guard.max_dimension)
        throw std::runtime_error("exact search over 2^" + std::to_string(params.n) +
                                 " vertices exceeds the enumeration guard (max n " +
                                 std::to_string(guard.max_dimension) + ")");
    if (limits.max_nodes == 0 || limits.time_budget_secs <= 0)
        throw std::invalid_argument("search budgets must be positive");

    const int n = params.n;
    const std::uint64_t total = std::uint64_t{1} << n;

    // Valid caps on any triangle-free subset, used to bound completions.
    std::vector<std::uint64_t> caps;
    if (params.in_upper_regime()) {
        caps.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            caps.push_back(level_bound(params, k).value.convert_to<std::uint64_t>());
    }

    // remaining counts vertices in [pos, total) per level, kept in step with
    // the stack; a vertex is consumed once both branches can see it spent.
    std::vector<std::uint64_t> remaining(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t v = 0; v < total; ++v) ++remaining[static_cast<std::size_t>(std::popcount(v))];
    std::uint64_t total_remaining = total;
    std::vector<std::uint64_t> chosen_by_level(static_cast<std::size_t>(n) + 1, 0);

    std::vector<std::uint64_t> chosen, best;
    std::uint64_t best_size = 0;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    const auto t0 = std::chrono::steady_clock::now();

    const auto update_best = [&] {
        if (chosen.size() > best_size) {
            best_size = chosen.size();
            best = chosen;
        }
    };

    // A candidate is admissible unless it closes a triangle with two chosen
    // vertices.
    const auto include_feasible = [&](std::uint64_t x) {
        if (params.r % 2 != 0) return true;  // no triangles exist at odd r
        std::vector<std::uint64_t> near;
        for (std::uint64_t c : chosen)
            if (std::popcount(c ^ x) == params.r) near.push_back(c);
        for (std::size_t i = 0; i < near.size(); ++i)
            for (std::size_t j = i + 1; j < near.size(); ++j)
                if (std::popcount(near[i] ^ near[j]) == params.r) return false;
        return true;
    };

    const auto capacity = [&] {
        std::uint64_t sum = 0;
        for (std::size_t k = 0; k < caps.size(); ++k)
            sum += std::min(chosen_by_level[k] + remaining[k], caps[k]);
        return sum;
    };

    std::uint64_t start_pos = 0;
    if (limits.allow_symmetry) {
        // Translations act transitively on vertices, so some maximum set
        // contains the all-zeros vertex; fix it in.
        chosen.push_back(0);
        ++chosen_by_level[0];
        --remaining[0];
        --total_remaining;
        update_best();
        start_pos = 1;
    }

    std::vector<Frame> stack;
    stack.push_back({start_pos, 0, false});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const std::size_t w =
            f.pos < total ? static_cast<std::size_t>(std::popcount(f.pos)) : 0;
        switch (f.stage) {
            case 0: {
                ++nodes;
                if (nodes > limits.max_nodes) exhausted = true;
                if ((nodes & 4095) == 0 &&
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                            .count() > limits.time_budget_secs)
                    exhausted = true;
                if (exhausted || f.pos == total ||
                    chosen.size() + total_remaining <= best_size ||
                    (!caps.empty() && capacity() <= best_size)) {
                    stack.pop_back();
                    break;
                }
                --remaining[w];
                --total_remaining;
                f.stage = 1;
                if (include_feasible(f.pos)) {
                    chosen.push_back(f.pos);
                    ++chosen_by_level[w];
                    update_best();
                    f.included = true;
                    stack.push_back({f.pos + 1, 0, false});
                }
                break;
            }
            case 1: {
                if (f.included) {
                    chosen.pop_back();
                    --chosen_by_level[w];
                    f.included = false;
                }
                f.stage = 2;
                if (!exhausted) stack.push_back({f.pos + 1, 0, false});
                break;
            }
            default: {
                ++remaining[w];
                ++total_remaining;
                stack.pop_back();
                break;
            }
        }
    }

    OracleResult result;
    result.best_size = best_size;
    result.nodes = nodes;
    result.optimal = !exhausted;
    std::vector<Vertex> witness;
    witness.reserve(best.size());
    for (std::uint64_t v : best) witness.push_back(Vertex{v, n});
    result.witness = VertexSet(n, std::move(witness));
    return result;
}

SandwichReport sandwich_report(const Params& params, const SearchLimits& limits,
                               const EnumerationGuard& guard) {
    SandwichReport rep;
    rep.params = params;
    rep.lower_probabilistic = lower_bound_probabilistic(params);

    const BoundReport bounds = bound_report(params);
    rep.upper_r2 = bounds.upper_r2;
    rep.upper_level_sum = bounds.upper_level_sum;
    if (bounds.antipodal) {
        rep.antipodal_prime = bounds.antipodal->p;
        rep.antipodal = bounds.antipodal->size;
    } else {
        rep.notes.push_back("antipodal construction inapplicable: no qualifying prime");
    }
    rep.fixed_bit = bounds.fixed_bit;
    if (!rep.fixed_bit) rep.notes.push_back("fixed-bit construction needs even r");

    if (params.n <= guard.max_dimension) {
        rep.alteration = alteration_construction(params, SamplingPlan{}, guard)
                             .second.final_size;
        rep.oracle = max_triangle_free_exact(params, limits, guard);
        if (!rep.oracle->optimal)
            rep.notes.push_back("search budget exhausted; oracle value is a witness, "
                                "not the optimum");
    } else {
        rep.notes.push_back("instance above the enumeration guard; sampling run and "
                            "exact search skipped");
    }

    rep.best_known = 0;
    if (rep.antipodal) rep.best_known = std::max(rep.best_known, *rep.antipodal);
    if (rep.fixed_bit) rep.best_known = std::max(rep.best_known, *rep.fixed_bit);
    if (rep.alteration) rep.best_known = std::max(rep.best_known, BigInt(*rep.alteration));
    if (rep.oracle) rep.best_known = std::max(rep.best_known, BigInt(rep.oracle->best_size));

    const auto check = [&](bool ok, const std::string& text) {
        if (!ok) rep.violations.push_back(text);
    };
    for (const auto* upper : {&rep.upper_r2, &rep.upper_level_sum}) {
        if (!upper->has_value()) continue;
        const BigInt& u = **upper;
        check(rep.best_known <= u, "best known " + rep.best_known.str() +
                                       " exceeds upper bound " + u.str());
        check(rep.lower_probabilistic <= to_double(u) + 1e-9,
              "probabilistic lower bound exceeds upper bound " + u.str());
    }
    if (rep.oracle && rep.oracle->optimal) {
        const BigInt opt(rep.oracle->best_size);
        if (rep.antipodal)
            check(*rep.antipodal <= opt, "antipodal size exceeds the exact optimum");
        if (rep.fixed_bit)
            check(*rep.fixed_bit <= opt, "fixed-bit size exceeds the exact optimum");
        if (rep.alteration)
            check(BigInt(*rep.alteration) <= opt, "sampled set exceeds the exact optimum");
        check(rep.lower_probabilistic <= to_double(opt) + 1e-9,
              "probabilistic lower bound exceeds the exact optimum");
    }
    rep.consistent = rep.violations.empty();
    return rep;
}

}  // namespace cubefree
