// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any of them fail. Criteria marked as
// frozen compare against constants that were derived once by independent
// enumeration and must never drift.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubefree/bigmath.hpp"
#include "cubefree/bounds.hpp"
#include "cubefree/constructions.hpp"
#include "cubefree/core.hpp"
#include "cubefree/oracle.hpp"
#include "cubefree/verify.hpp"

using namespace cubefree;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& text,
                   const std::function<bool(std::string&)>& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << text;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

bool criterion_triangle_counts(std::string& detail) {
    for (int n = 3; n <= 8; ++n) {
        for (int r = 2; 3 * r <= 2 * n; r += 2) {
            const Params params = Params::create(n, r);
            if (triangle_count_formula(params) != count_triangles_graph(params)) {
                detail = "mismatch at n=" + std::to_string(n) + ", r=" + std::to_string(r);
                return false;
            }
        }
    }
    if (triangle_count_formula(Params::create(3, 2)) != 8) return false;
    if (triangle_count_formula(Params::create(6, 2)) != 1280) return false;
    return true;
}

bool criterion_antipodal(std::string& detail) {
    const VertexSet showcase = antipodal_construction(9, 3, 2);
    if (showcase.size() != 32) {
        detail = "(9,3,2) produced " + std::to_string(showcase.size()) + " vertices";
        return false;
    }
    if (check_independent(showcase, Params::create(9, 2)).has_value()) {
        detail = "(9,3,2) is not independent";
        return false;
    }
    int covered = 0;
    for (int n = 2; n <= 15; ++n) {
        for (int p = 2; p <= n; ++p) {
            if (!is_prime(p) || n % p != 0) continue;
            for (int r = 1; r <= n; ++r) {
                if (r % p == 0 || n / p <= r) continue;
                const VertexSet set = antipodal_construction(n, p, r);
                if (BigInt(set.size()) != antipodal_size(n, p)) {
                    detail = "size mismatch at n=" + std::to_string(n) +
                             ", p=" + std::to_string(p) + ", r=" + std::to_string(r);
                    return false;
                }
                const Params params = Params::create(n, r, Mode::exploratory);
                if (check_independent(set, params).has_value()) {
                    detail = "dependence at n=" + std::to_string(n) +
                             ", p=" + std::to_string(p) + ", r=" + std::to_string(r);
                    return false;
                }
                ++covered;
            }
        }
    }
    detail = std::to_string(covered) + " instances";
    return covered > 20;
}

bool criterion_block_pair(std::string&) {
    const VertexSet s_ab =
        antipodal_block_set(parse_vertex("01").bits, parse_vertex("10").bits, 2, 3);
    const std::vector<std::string> expected = {"010101", "010110", "011001", "011010",
                                               "100101", "100110", "101001", "101010"};
    std::vector<std::string> got;
    for (const Vertex& v : s_ab) got.push_back(format_vertex(v));
    std::sort(got.begin(), got.end());
    return got == expected;
}

bool criterion_alteration(std::string& detail) {
    std::ostringstream summary;
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{6, 2}, {8, 2}, {9, 4}}) {
        const Params params = Params::create(n, r);
        double total = 0;
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            const auto [set, trace] = alteration_construction(params, {{}, seed, 1});
            if (check_triangle_free(set, params).has_value()) {
                detail = "triangle survived at n=" + std::to_string(n) +
                         ", r=" + std::to_string(r) + ", seed=" + std::to_string(seed);
                return false;
            }
            total += static_cast<double>(trace.final_size);
        }
        const double mean = total / 200.0;
        const double floor_value = 0.8 * lower_bound_probabilistic(params);
        summary << "(" << n << "," << r << ") mean " << mean << " vs floor " << floor_value
                << "; ";
        if (mean < floor_value) {
            detail = summary.str() + "mean below floor";
            return false;
        }
    }
    detail = summary.str();
    return true;
}

bool criterion_fixed_bit(std::string& detail) {
    for (int n = 3; n <= 12; ++n) {
        for (int r = 2; 3 * r <= 2 * n; r += 2) {
            const Params params = Params::create(n, r);
            const VertexSet set = fixed_bit_construction(params);
            const BigInt expected =
                binomial(n, r / 2) - binomial(n - 2, r / 2);
            if (BigInt(set.size()) != expected) {
                detail = "size mismatch at n=" + std::to_string(n) + ", r=" + std::to_string(r);
                return false;
            }
            if (check_triangle_free(set, params).has_value()) {
                detail = "triangle at n=" + std::to_string(n) + ", r=" + std::to_string(r);
                return false;
            }
        }
    }
    return true;
}

bool criterion_r2_identity(std::string& detail) {
    for (int n = 1; n <= 30; ++n) {
        const BigRat closed =
            1 + BigRat(2, n + 1) * BigRat(pow2(static_cast<unsigned>(n) + 1) - 2);
        if (upper_bound_r2_sum(n) != closed) {
            detail = "sum mismatch at n=" + std::to_string(n);
            return false;
        }
        if (upper_bound_r2(n) != ceil_rational(closed)) {
            detail = "ceiling mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    return upper_bound_r2(4) == 13 && upper_bound_r2(6) == 37;
}

bool criterion_level_sum(std::string& detail) {
    const auto [total, profile] = upper_bound_level_sum(Params::create(8, 4));
    if (total != 184) {
        detail = "(8,4) total " + total.str();
        return false;
    }
    const std::vector<int> expected = {1, 8, 28, 32, 46, 32, 28, 8, 1};
    for (std::size_t k = 0; k < expected.size(); ++k)
        if (profile.per_level[k].value != expected[k]) {
            detail = "(8,4) level " + std::to_string(k) + " is " +
                     profile.per_level[k].value.str();
            return false;
        }
    // The per-level machinery must stay inside its applicability window over
    // the whole valid grid; an internal assertion would surface here.
    int instances = 0;
    for (int n = 4; n <= 40; ++n) {
        for (int r = 2; 3 * r <= 2 * n; r += 2) {
            const Params params = Params::create(n, r);
            if (!params.in_upper_regime()) continue;
            (void)upper_bound_level_sum(params);
            ++instances;
        }
    }
    detail = std::to_string(instances) + " grid instances";
    return instances > 100;
}

bool criterion_sandwich(std::string& detail) {
    const OracleResult tiny = max_triangle_free_exact(Params::create(2, 2, Mode::exploratory));
    if (!tiny.optimal || tiny.best_size != 4) {
        detail = "(2,2) optimum " + std::to_string(tiny.best_size);
        return false;
    }
    std::ostringstream summary;
    for (int n = 3; n <= 5; ++n) {
        for (int r = 2; 3 * r <= 2 * n; r += 2) {
            const Params params = Params::create(n, r);
            const SandwichReport rep = sandwich_report(params);
            if (!rep.oracle || !rep.oracle->optimal) {
                detail = "oracle not exact at n=" + std::to_string(n) +
                         ", r=" + std::to_string(r);
                return false;
            }
            const BigInt opt(rep.oracle->best_size);
            if (n == 3 && r == 2 && opt != 4) {
                detail = "(3,2) optimum " + opt.str();
                return false;
            }
            bool ok = true;
            if (rep.antipodal) ok = ok && *rep.antipodal <= opt;
            if (rep.fixed_bit) ok = ok && *rep.fixed_bit <= opt;
            if (rep.alteration) ok = ok && BigInt(*rep.alteration) <= opt;
            if (rep.upper_r2) ok = ok && opt <= *rep.upper_r2;
            if (rep.upper_level_sum) ok = ok && opt <= *rep.upper_level_sum;
            ok = ok && rep.lower_probabilistic <= to_double(opt) + 1e-9;
            ok = ok && rep.consistent;
            if (!ok) {
                detail = "inequality failed at n=" + std::to_string(n) +
                         ", r=" + std::to_string(r);
                return false;
            }
            summary << "(" << n << "," << r << ") opt " << rep.oracle->best_size << "; ";
        }
    }
    detail = summary.str();
    return true;
}

bool criterion_asymptotic_dominance(std::string& detail) {
    int instances = 0;
    for (int n = 3; n <= 64; ++n) {
        for (int r = 2; 3 * r <= 2 * n; r += 2) {
            const Params params = Params::create(n, r);
            if (lower_bound_asymptotic(params) >
                lower_bound_probabilistic(params) + 1e-9) {
                detail = "dominance fails at n=" + std::to_string(n) +
                         ", r=" + std::to_string(r);
                return false;
            }
            ++instances;
        }
    }
    detail = std::to_string(instances) + " grid instances";
    return instances > 600;
}

}  // namespace

int main() {
    std::vector<bool> finite_suites;

    run_criterion(1, "triangle-count formula equals graph enumeration for n <= 8",
                  criterion_triangle_counts);
    run_criterion(2, "antipodal construction: size formula and independence up to n = 15",
                  criterion_antipodal);
    run_criterion(3, "single-pair block set comes out verbatim", criterion_block_pair);
    run_criterion(4,
                  "alteration stays triangle-free over 200 seeds with mean size >= 0.8 "
                  "of the probabilistic bound",
                  criterion_alteration);
    run_criterion(5, "fixed-bit construction: size formula and triangle-freeness up to n = 12",
                  criterion_fixed_bit);
    run_criterion(6, "distance-2 upper bound equals its term-by-term sum exactly up to n = 30",
                  criterion_r2_identity);
    const int failures_before_finite = failures;
    run_criterion(7, "level-sum bound: (8,4) profile and applicability over the n <= 40 grid",
                  criterion_level_sum);
    run_criterion(8, "exact optima are sandwiched by constructions and upper bounds for n <= 5",
                  criterion_sandwich);
    run_criterion(9, "asymptotic lower bound never exceeds the exact one up to n = 64",
                  criterion_asymptotic_dominance);
    const bool finite_ok = failures == failures_before_finite;

    run_criterion(10,
                  "growth-rate claims have no finite test; every finite inequality behind "
                  "them is covered by criteria 6-9",
                  [&](std::string& detail) {
                      detail = finite_ok ? "criteria 6-9 green" : "criteria 6-9 not all green";
                      return finite_ok;
                  });

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
