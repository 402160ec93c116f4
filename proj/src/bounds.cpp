#include "cubefree/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cubefree/constructions.hpp"

namespace cubefree {

namespace {

// C(n,r) * C(r,r/2) * C(n-r,r/2), the denominator under the square root in
// the probabilistic bound. Zero iff the graph has no triangles.
BigInt triangle_product(const Params& params) {
    const int h = params.half_r();
    return binomial(params.n, params.r) * binomial(params.r, h) *
           binomial(params.n - params.r, h);
}

BigInt floor_rational(const BigRat& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);  // positive
    BigInt q = num / den;
    if (q * den != num && num < 0) --q;
    return q;
}

}  // namespace

std::string to_string(LevelRule rule) {
    switch (rule) {
        case LevelRule::trivial: return "trivial";
        case LevelRule::shadow: return "shadow";
        case LevelRule::cover: return "cover";
    }
    throw std::logic_error("unknown level rule");
}

BigInt LevelProfile::total() const {
    BigInt sum = 0;
    for (const LevelBound& lb : per_level) sum += lb.value;
    return sum;
}

BigInt triangle_count_formula(const Params& params) {
    if (!params.even_r())
        throw std::domain_error("triangle count formula requires even r, got r=" +
                                std::to_string(params.r));
    const BigInt product = pow2(static_cast<unsigned>(params.n)) * triangle_product(params);
    if (product % 6 != 0)
        throw std::domain_error("triangle count " + product.str() +
                                " is not divisible by 6; parameters are outside "
                                "the formula's derivation");
    return product / 6;
}

ClampedProbability optimal_sampling_probability(const Params& params) {
    const BigInt denom = params.even_r() ? triangle_product(params) : BigInt(0);
    if (denom == 0)
        return {1.0, std::numeric_limits<double>::infinity(), true};
    const double raw = std::sqrt(2.0 / to_double(denom));
    if (raw > 1.0) return {1.0, raw, true};
    return {raw, raw, false};
}

double lower_bound_probabilistic(const Params& params) {
    const BigInt denom = params.even_r() ? triangle_product(params) : BigInt(0);
    const double whole_cube = std::exp2(params.n);
    if (denom == 0) return whole_cube;  // no triangles at all
    return (2.0 / 3.0) * whole_cube * std::sqrt(2.0 / to_double(denom));
}

double lower_bound_asymptotic(const Params& params) {
    const double n = params.n;
    const double r = params.r;
    const double denom = std::exp(r) * std::exp2(r / 2.0) * std::pow(n / r, 0.75 * r);
    return std::sqrt(2.0) * (2.0 / 3.0) * std::exp2(n) / denom;
}

BigInt antipodal_size(int n, int p) {
    if (p < 1 || n < 1 || n % p != 0)
        throw std::invalid_argument("antipodal size needs p | n, got n=" +
                                    std::to_string(n) + ", p=" + std::to_string(p));
    return pow2(static_cast<unsigned>(n / p + p - 1));
}

BigInt fixed_bit_size(const Params& params) {
    const int h = params.half_r();
    return binomial(params.n, h) - binomial(params.n - 2, h);
}

BigInt frankl_bound(int n, int k, int s) {
    if (k < 1 || s < 2)
        throw std::invalid_argument("matching bound needs k >= 1 and s >= 2");
    if (n < k * s)
        throw std::invalid_argument("matching bound needs n >= k*s, got n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k) +
                                    ", s=" + std::to_string(s));
    return BigInt(s - 1) * binomial(n - 1, k - 1);
}

BigInt upper_bound_r2(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const BigRat value = 1 + BigRat(2, n + 1) * BigRat(pow2(static_cast<unsigned>(n) + 1) - 2);
    return ceil_rational(value);
}

BigRat upper_bound_r2_sum(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    BigRat sum = 1;
    for (int k = 1; k <= n; ++k) sum += BigRat(2, k) * BigRat(binomial(n, k - 1));
    return sum;
}

LevelBound level_bound(const Params& params, int k) {
    if (!params.in_upper_regime())
        throw std::invalid_argument("level bounds need even r with 2r <= n");
    if (k < 0 || k > params.n)
        throw std::invalid_argument("level k out of range");

    const int n = params.n;
    const int h = params.half_r();
    if (k > n / 2) {
        LevelBound mirror = level_bound(params, n - k);
        if (mirror.rule == LevelRule::shadow) mirror.rule = LevelRule::cover;
        return mirror;
    }
    if (k <= h) return {binomial(n, k), LevelRule::trivial};

    // Fixing a shadow at level k - r/2 leaves r/2-sets over the other
    // n - (k - r/2) coordinates with no 3 pairwise disjoint members.
    const int ground = n - (k - h);
    if (ground < 3 * h)
        throw std::logic_error("matching bound inapplicable at level " + std::to_string(k) +
                               " for n=" + std::to_string(n) + ", r=" + std::to_string(params.r));
    const BigRat via_shadows =
        BigRat(binomial(n, k - h) * frankl_bound(ground, h, 3), binomial(k, h));
    const BigInt capped = std::min(binomial(n, k), floor_rational(via_shadows));
    return {capped, LevelRule::shadow};
}

std::pair<BigInt, LevelProfile> upper_bound_level_sum(const Params& params) {
    if (!params.in_upper_regime())
        throw std::invalid_argument("level-sum upper bound needs even r with 2r <= n");
    LevelProfile profile;
    profile.per_level.reserve(static_cast<std::size_t>(params.n) + 1);
    for (int k = 0; k <= params.n; ++k) profile.per_level.push_back(level_bound(params, k));
    BigInt sum = profile.total();
    return {std::move(sum), std::move(profile)};
}

BigRat upper_bound_level_sum_doubled(const Params& params) {
    if (!params.in_upper_regime())
        throw std::invalid_argument("level-sum upper bound needs even r with 2r <= n");
    const int n = params.n;
    const int h = params.half_r();
    BigRat half_sum = 0;
    for (int k = 0; k <= h; ++k) half_sum += BigRat(binomial(n, k));
    for (int k = h + 1; k <= n / 2; ++k)
        half_sum += BigRat(binomial(n, k) * params.r, n - k + h);
    return 2 * half_sum;
}

BoundReport bound_report(const Params& params) {
    BoundReport rep;
    rep.params = params;
    rep.upper_applicable = params.in_upper_regime();

    if (params.even_r()) {
        rep.triangle_count = triangle_count_formula(params);
        rep.fixed_bit = fixed_bit_size(params);
    } else {
        rep.triangle_count = 0;
        rep.notes.push_back("r odd: no triangles exist, count is 0 by parity");
        rep.notes.push_back("fixed-bit size undefined for odd r");
    }

    rep.optimal_probability = optimal_sampling_probability(params);
    if (rep.optimal_probability.clamped)
        rep.notes.push_back("optimal probability clamped to 1");
    rep.lower_probabilistic = lower_bound_probabilistic(params);
    rep.lower_asymptotic = lower_bound_asymptotic(params);

    const std::optional<int> p =
        params.r >= 2 ? select_antipodal_prime(params.n, params.r) : std::nullopt;
    if (p)
        rep.antipodal = AntipodalBound{*p, antipodal_size(params.n, *p)};
    else
        rep.notes.push_back("no prime p with p | n, p not dividing r, n/p > r");

    if (params.r == 2)
        rep.upper_r2 = upper_bound_r2(params.n);
    else
        rep.notes.push_back("closed-form upper bound applies only at r = 2");

    if (rep.upper_applicable)
        rep.upper_level_sum = upper_bound_level_sum(params).first;
    else
        rep.notes.push_back(params.even_r() ? "level-sum upper bound needs 2r <= n"
                                            : "level-sum upper bound needs even r");
    return rep;
}

}  // namespace cubefree
