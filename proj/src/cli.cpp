#include "cubefree/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cubefree/bounds.hpp"
#include "cubefree/constructions.hpp"
#include "cubefree/io.hpp"
#include "cubefree/json_io.hpp"
#include "cubefree/oracle.hpp"
#include "cubefree/params.hpp"
#include "cubefree/verify.hpp"

namespace cubefree::cli {
namespace {

std::string fmt_double(double value, int significant = 6) {
    std::ostringstream stream;
    stream.precision(significant);
    stream << value;
    return stream.str();
}

// "3..7" or a bare "5" (meaning 5..5).
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int single = std::stoi(text);
            return {single, single};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range " + text);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("expected a range like 4..9, got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("range endpoints out of range in '" + text + "'");
    }
}

// Columns padded to equal width, two spaces between them, no trailing blanks.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << "\n";
    }
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream stream(path);
    if (!stream) throw std::runtime_error("cannot open " + path + " for writing");
    stream << body;
    if (!stream) throw std::runtime_error("write to " + path + " failed");
}

// Flag values for every subcommand; n and r stay optional where a file
// header can supply them.
struct Flags {
    int n = 0;
    int r = 0;
    std::string mode = "strict";
    std::string format = "text";
    std::string kind;
    std::optional<int> prime;
    std::uint64_t seed = kDefaultSeed;
    int trials = 1;
    std::optional<double> probability;
    std::string input;
    std::string output;
    std::string property = "triangle-free";
    std::uint64_t max_nodes = 0;  // per-subcommand default applied below
    double time_budget_secs = 0.0;
    bool no_symmetry = false;
    std::string n_range;
    std::string r_range;
};

Params make_params(const Flags& flags) {
    return Params::create(flags.n, flags.r, mode_from_string(flags.mode));
}

// ---------------------------------------------------------------- construct

int run_construct(const Flags& flags, std::ostream& out) {
    const Params params = make_params(flags);
    VertexSet set;
    Json sidecar;
    sidecar["construction"] = flags.kind;
    sidecar["params"] = to_json(params);

    if (flags.kind == "antipodal") {
        int p = 0;
        if (flags.prime) {
            p = *flags.prime;
        } else {
            const auto chosen = select_antipodal_prime(params.n, params.r);
            if (!chosen)
                throw std::invalid_argument(
                    "no prime p with p | n, p not dividing r and n/p > r exists for n=" +
                    std::to_string(params.n) + ", r=" + std::to_string(params.r) +
                    "; pass --p to force one");
            p = *chosen;
        }
        set = antipodal_construction(params.n, p, params.r);
        sidecar["p"] = p;
        sidecar["property"] = "independent";
    } else if (flags.kind == "alteration") {
        SamplingPlan plan{flags.probability, flags.seed, flags.trials};
        auto [result, trace] = best_of_trials(params, plan);
        set = std::move(result);
        sidecar["trials"] = flags.trials;
        sidecar["trace"] = to_json(trace);
        sidecar["property"] = "triangle-free";
    } else {  // fixed-bit, enforced by the option validator
        set = fixed_bit_construction(params);
        sidecar["property"] = "triangle-free";
    }
    sidecar["size"] = set.size();

    std::string path = flags.output;
    if (path.empty())
        path = flags.kind + "-n" + std::to_string(params.n) + "-r" +
               std::to_string(params.r) + ".txt";
    write_vertex_set_file(path, set, params.r);
    write_text_file(path + ".json", sidecar.dump(2) + "\n");
    out << "wrote " << path << " (" << set.size() << " vertices) and " << path
        << ".json\n";
    return 0;
}

// ------------------------------------------------------------------- verify

int run_verify(const Flags& flags, std::istream& in, std::ostream& out) {
    const VertexSetFile file =
        flags.input.empty() ? read_vertex_set(in) : read_vertex_set_file(flags.input);

    int n = flags.n;
    if (n == 0) {
        if (file.header_n)
            n = *file.header_n;
        else if (!file.set.empty())
            n = file.set.dimension();
        else
            throw std::invalid_argument("dimension unknown: pass --n or use a # n= header");
    }
    if (!file.set.empty() && file.set.dimension() != n)
        throw std::invalid_argument("--n " + std::to_string(n) + " does not match the " +
                                    std::to_string(file.set.dimension()) +
                                    "-character vertices in the input");
    int r = flags.r;
    if (r == 0) {
        if (!file.header_r)
            throw std::invalid_argument("distance unknown: pass --r or use a # r= header");
        r = *file.header_r;
    }
    const Params params = Params::create(n, r, mode_from_string(flags.mode));

    const CheckResult result = flags.property == "independent"
                                   ? check_independent(file.set, params)
                                   : check_triangle_free(file.set, params);
    if (flags.format == "json") {
        Json body;
        body["property"] = flags.property;
        body["params"] = to_json(params);
        body["size"] = file.set.size();
        body["ok"] = !result.has_value();
        body["violation"] = result ? to_json(*result) : Json(nullptr);
        out << body.dump(2) << "\n";
    } else if (!result) {
        out << "ok: " << file.set.size() << " vertices, " << flags.property << " at r="
            << params.r << "\n";
    } else {
        out << "violation: "
            << (result->kind == Violation::Kind::triangle ? "triangle" : "edge") << "\n";
        for (const Vertex& witness : result->witnesses)
            out << format_vertex(witness) << "\n";
    }
    return result ? 1 : 0;
}

// -------------------------------------------------------------------- count

int run_count(const Flags& flags, std::istream& in, std::ostream& out,
              bool from_stdin) {
    const Params params = make_params(flags);
    BigInt triangles;
    std::string source;
    std::optional<std::uint64_t> set_size;

    if (!flags.input.empty() || from_stdin) {
        const VertexSetFile file =
            flags.input.empty() ? read_vertex_set(in) : read_vertex_set_file(flags.input);
        if (!file.set.empty() && file.set.dimension() != params.n)
            throw std::invalid_argument("--n " + std::to_string(params.n) +
                                        " does not match the input vertices");
        triangles = count_triangles_in_set(file.set, params);
        source = "set";
        set_size = file.set.size();
    } else if (params.even_r()) {
        triangles = triangle_count_formula(params);
        source = "formula";
    } else {
        triangles = 0;  // odd distances close no triangles (parity)
        source = "parity";
    }

    if (flags.format == "json") {
        Json body;
        body["params"] = to_json(params);
        body["source"] = source;
        if (set_size) body["size"] = *set_size;
        body["triangles"] = triangles.str();
        out << body.dump(2) << "\n";
    } else {
        out << triangles.str() << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- bounds

int run_bounds(const Flags& flags, std::ostream& out) {
    const Params params = make_params(flags);
    const BoundReport report = bound_report(params);
    if (flags.format == "json") {
        out << to_json(report).dump(2) << "\n";
        return 0;
    }

    auto opt_str = [](const std::optional<BigInt>& value) {
        return value ? value->str() : std::string("-");
    };
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", std::to_string(params.n)});
    rows.push_back({"r", std::to_string(params.r)});
    rows.push_back({"mode", to_string(params.mode)});
    rows.push_back({"triangle_count", report.triangle_count.str()});
    std::string probability = fmt_double(report.optimal_probability.value);
    if (report.optimal_probability.clamped)
        probability += " (clamped from " + fmt_double(report.optimal_probability.raw) + ")";
    rows.push_back({"optimal_probability", probability});
    rows.push_back({"lower_probabilistic", fmt_double(report.lower_probabilistic)});
    rows.push_back({"lower_asymptotic", fmt_double(report.lower_asymptotic)});
    rows.push_back({"antipodal", report.antipodal
                                     ? report.antipodal->size.str() + " (p=" +
                                           std::to_string(report.antipodal->p) + ")"
                                     : std::string("-")});
    rows.push_back({"fixed_bit", opt_str(report.fixed_bit)});
    rows.push_back({"upper_r2", opt_str(report.upper_r2)});
    rows.push_back({"upper_level_sum", opt_str(report.upper_level_sum)});
    rows.push_back({"upper_applicable", report.upper_applicable ? "yes" : "no"});
    print_table(out, rows);
    for (const std::string& note : report.notes) out << "note: " << note << "\n";
    return 0;
}

// ------------------------------------------------------------------- oracle

int run_oracle(const Flags& flags, std::ostream& out) {
    const Params params = make_params(flags);
    SearchLimits limits;
    if (flags.max_nodes != 0) limits.max_nodes = flags.max_nodes;
    if (flags.time_budget_secs > 0) limits.time_budget_secs = flags.time_budget_secs;
    limits.allow_symmetry = !flags.no_symmetry;

    const OracleResult result = max_triangle_free_exact(params, limits);
    Json body = to_json(result);
    body["params"] = to_json(params);
    out << body.dump(2) << "\n";
    write_vertex_set(out, result.witness, params.r);
    return 0;
}

// ------------------------------------------------------------------- report

int run_report(const Flags& flags, std::ostream& out) {
    std::pair<int, int> n_span, r_span;
    if (!flags.n_range.empty())
        n_span = parse_range(flags.n_range);
    else if (flags.n != 0)
        n_span = {flags.n, flags.n};
    else
        throw std::invalid_argument("pass --n or --n-range");
    if (!flags.r_range.empty())
        r_span = parse_range(flags.r_range);
    else if (flags.r != 0)
        r_span = {flags.r, flags.r};
    else
        throw std::invalid_argument("pass --r or --r-range");

    const Mode mode = mode_from_string(flags.mode);
    SearchLimits limits;
    limits.max_nodes = flags.max_nodes != 0 ? flags.max_nodes : 200'000;
    limits.time_budget_secs = flags.time_budget_secs > 0 ? flags.time_budget_secs : 5.0;
    limits.allow_symmetry = !flags.no_symmetry;

    std::vector<SandwichReport> reports;
    for (int n = n_span.first; n <= n_span.second; ++n) {
        for (int r = r_span.first; r <= r_span.second; ++r) {
            if (mode == Mode::strict && (r % 2 != 0 || r < 2 || 3 * r > 2 * n)) continue;
            if (mode == Mode::exploratory && (r < 1 || r > n)) continue;
            reports.push_back(sandwich_report(Params::create(n, r, mode), limits));
        }
    }
    if (reports.empty())
        throw std::invalid_argument("no valid (n, r) pairs in the requested ranges");

    bool all_consistent = true;
    for (const SandwichReport& report : reports) all_consistent &= report.consistent;

    if (flags.format == "json") {
        Json body = Json::array();
        for (const SandwichReport& report : reports) body.push_back(to_json(report));
        out << body.dump(2) << "\n";
    } else {
        auto opt_big = [](const std::optional<BigInt>& value) {
            return value ? value->str() : std::string("-");
        };
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"n", "r", "lower_prob", "antipodal", "fixed_bit", "alteration",
                        "oracle", "best_known", "upper_r2", "upper_level", "consistent"});
        for (const SandwichReport& report : reports) {
            std::string oracle = "-";
            if (report.oracle)
                oracle = std::to_string(report.oracle->best_size) +
                         (report.oracle->optimal ? "" : "+");
            rows.push_back({std::to_string(report.params.n), std::to_string(report.params.r),
                            fmt_double(report.lower_probabilistic), opt_big(report.antipodal),
                            opt_big(report.fixed_bit),
                            report.alteration ? std::to_string(*report.alteration)
                                              : std::string("-"),
                            oracle, report.best_known.str(), opt_big(report.upper_r2),
                            opt_big(report.upper_level_sum),
                            report.consistent ? "yes" : "NO"});
        }
        print_table(out, rows);
        for (const SandwichReport& report : reports)
            for (const std::string& violation : report.violations)
                out << "violation at n=" << report.params.n << " r=" << report.params.r
                    << ": " << violation << "\n";
    }
    return all_consistent ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"triangle-free and independent subsets of the hypercube distance-r graph"};
    app.name("cubefree");
    app.require_subcommand(1);

    Flags flags;
    int exit_code = 0;

    const auto mode_check = CLI::IsMember({"strict", "exploratory"});
    const auto format_check = CLI::IsMember({"text", "json"});

    auto add_params = [&](CLI::App* cmd, bool required) {
        auto* n_opt = cmd->add_option("--n", flags.n, "dimension (1..64)");
        auto* r_opt = cmd->add_option("--r", flags.r, "distance");
        if (required) {
            n_opt->required();
            r_opt->required();
        }
        cmd->add_option("--mode", flags.mode, "strict | exploratory")->check(mode_check);
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", flags.format, "text | json")->check(format_check);
    };

    auto* construct = app.add_subcommand(
        "construct", "build a vertex set and write it with a JSON sidecar");
    add_params(construct, true);
    construct->add_option("--kind", flags.kind, "antipodal | alteration | fixed-bit")
        ->required()
        ->check(CLI::IsMember({"antipodal", "alteration", "fixed-bit"}));
    construct->add_option("--p", flags.prime, "antipodal block width (default: best prime)");
    construct->add_option("--seed", flags.seed, "sampling seed (default 1)");
    construct->add_option("--trials", flags.trials, "alteration restarts, best kept")
        ->check(CLI::PositiveNumber);
    construct->add_option("--probability", flags.probability,
                          "sampling probability in (0, 1] (default: optimal)");
    construct->add_option("--output", flags.output,
                          "output path (default <kind>-n<n>-r<r>.txt)");
    construct->callback([&] { exit_code = run_construct(flags, out); });

    auto* verify =
        app.add_subcommand("verify", "check a vertex-set file or stdin for violations");
    add_params(verify, false);
    verify->add_option("--property", flags.property, "triangle-free | independent")
        ->check(CLI::IsMember({"triangle-free", "independent"}));
    verify->add_option("--input", flags.input, "vertex-set file (default: stdin)");
    add_format(verify);
    verify->callback([&] { exit_code = run_verify(flags, in, out); });

    auto* count = app.add_subcommand(
        "count", "triangles in the whole graph (formula) or inside a given set");
    add_params(count, true);
    auto* count_input =
        count->add_option("--input", flags.input, "count inside this vertex-set file");
    auto* count_stdin = count->add_flag("--stdin", "count inside the set read from stdin");
    count_input->excludes(count_stdin);
    add_format(count);
    count->callback(
        [&] { exit_code = run_count(flags, in, out, count_stdin->count() > 0); });

    auto* bounds = app.add_subcommand("bounds", "evaluate every bound for one instance");
    add_params(bounds, true);
    add_format(bounds);
    bounds->callback([&] { exit_code = run_bounds(flags, out); });

    auto* oracle = app.add_subcommand(
        "oracle", "exact maximum triangle-free subset by branch and bound");
    add_params(oracle, true);
    oracle->add_option("--max-nodes", flags.max_nodes, "search node budget");
    oracle->add_option("--time-budget-secs", flags.time_budget_secs, "wall-clock budget");
    oracle->add_flag("--no-symmetry", flags.no_symmetry, "do not fix vertex 0 into the set");
    oracle->callback([&] { exit_code = run_oracle(flags, out); });

    auto* report = app.add_subcommand(
        "report", "sandwich lower and upper bounds over a parameter grid");
    add_params(report, false);
    report->add_option("--n-range", flags.n_range, "dimensions, e.g. 4..9");
    report->add_option("--r-range", flags.r_range, "distances, e.g. 2..4");
    report->add_option("--max-nodes", flags.max_nodes, "per-instance node budget");
    report->add_option("--time-budget-secs", flags.time_budget_secs,
                       "per-instance wall-clock budget");
    report->add_flag("--no-symmetry", flags.no_symmetry, "do not fix vertex 0 into the set");
    add_format(report);
    report->callback([&] { exit_code = run_report(flags, out); });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace cubefree::cli
