#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cubefree/cli.hpp"
#include "cubefree/io.hpp"
#include "cubefree/verify.hpp"
#include "support/schema_check.hpp"

using namespace cubefree;
namespace fs = std::filesystem;
using schema_check::Json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

void expect_schema(const std::string& schema_file, const Json& value) {
    const Json schema = schema_check::load(std::string(SCHEMA_DIR) + "/" + schema_file);
    const std::vector<std::string> errors = schema_check::validate(schema, value);
    for (const std::string& e : errors) FAIL_CHECK(schema_file << ": " << e);
}

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "cubefree-cli-tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct CwdGuard {
    fs::path old = fs::current_path();
    ~CwdGuard() { fs::current_path(old); }
};

}  // namespace

TEST_CASE("usage errors and help carry the right exit codes") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"--help"}).out.find("construct") != std::string::npos);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"bounds", "--n", "6", "--r", "2", "--bogus"}).code == 2);
    CHECK(run_cli({"bounds", "--n", "6", "--r", "2", "--mode", "weird"}).code == 2);
    CHECK(run_cli({"bounds", "--n", "6"}).code == 2);  // --r is required

    // strict-mode parameter validation surfaces as a usage error
    const RunResult odd = run_cli({"bounds", "--n", "6", "--r", "3"});
    CHECK(odd.code == 2);
    CHECK(odd.err.find("error:") != std::string::npos);
    CHECK(odd.err.find("exploratory") != std::string::npos);
}

TEST_CASE("bounds emits the documented values in both formats") {
    const RunResult json_run =
        run_cli({"bounds", "--n", "6", "--r", "2", "--format", "json"});
    REQUIRE(json_run.code == 0);
    const Json body = Json::parse(json_run.out);
    CHECK(body["triangle_count"] == "1280");
    CHECK(body["upper_r2"] == "37");
    CHECK(body["upper_level_sum"] == "36");
    CHECK(body["antipodal"].is_null());
    expect_schema("bound-report.schema.json", body);

    const RunResult text_run = run_cli({"bounds", "--n", "6", "--r", "2"});
    REQUIRE(text_run.code == 0);
    CHECK(text_run.out.find("triangle_count") != std::string::npos);
    CHECK(text_run.out.find("1280") != std::string::npos);
    CHECK(text_run.out.find("37") != std::string::npos);
    CHECK(text_run.out.find("36") != std::string::npos);
}

TEST_CASE("bounds output is byte-identical across runs") {
    const std::vector<std::string> args = {"bounds", "--n", "9", "--r", "2",
                                           "--format", "json"};
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("construct antipodal writes the set file and sidecar") {
    const fs::path path = temp_dir() / "antipodal-9-2.txt";
    fs::remove(path);
    fs::remove(path.string() + ".json");
    const RunResult run = run_cli({"construct", "--kind", "antipodal", "--n", "9", "--r",
                                   "2", "--output", path.string()});
    REQUIRE(run.code == 0);
    CHECK(run.out.find(path.string()) != std::string::npos);

    const VertexSetFile file = read_vertex_set_file(path.string());
    CHECK(file.set.size() == 32);
    CHECK(file.header_n == 9);
    CHECK(file.header_r == 2);

    const Json sidecar = Json::parse(slurp(path.string() + ".json"));
    CHECK(sidecar["construction"] == "antipodal");
    CHECK(sidecar["p"] == 3);
    CHECK(sidecar["size"] == 32);
    CHECK(sidecar["property"] == "independent");
    expect_schema("construct-sidecar.schema.json", sidecar);

    // round trip through the verifier, in both properties
    CHECK(run_cli({"verify", "--input", path.string(), "--property", "independent"}).code ==
          0);
    CHECK(run_cli({"verify", "--input", path.string()}).code == 0);
}

TEST_CASE("construct antipodal without a qualifying prime is a usage error") {
    const RunResult run = run_cli({"construct", "--kind", "antipodal", "--n", "6", "--r",
                                   "2", "--output", (temp_dir() / "no.txt").string()});
    CHECK(run.code == 2);
    CHECK(run.err.find("--p") != std::string::npos);
}

TEST_CASE("construct alteration is reproducible and verifies triangle-free") {
    const fs::path path = temp_dir() / "alteration-6-2.txt";
    const std::vector<std::string> args = {"construct", "--kind", "alteration",
                                           "--n",       "6",      "--r",
                                           "2",         "--seed", "5",
                                           "--trials",  "3",      "--output",
                                           path.string()};
    REQUIRE(run_cli(args).code == 0);
    const std::string bytes_first = slurp(path);
    const std::string sidecar_first = slurp(path.string() + ".json");

    const Json sidecar = Json::parse(sidecar_first);
    CHECK(sidecar["construction"] == "alteration");
    CHECK(sidecar["trials"] == 3);
    const std::uint64_t seed = sidecar["trace"]["seed"].get<std::uint64_t>();
    CHECK(seed >= 5);
    CHECK(seed <= 7);
    expect_schema("construct-sidecar.schema.json", sidecar);

    CHECK(run_cli({"verify", "--input", path.string()}).code == 0);

    REQUIRE(run_cli(args).code == 0);
    CHECK(slurp(path) == bytes_first);
    CHECK(slurp(path.string() + ".json") == sidecar_first);
}

TEST_CASE("construct fixed-bit writes the level set") {
    const fs::path path = temp_dir() / "fixed-bit-9-4.txt";
    REQUIRE(run_cli({"construct", "--kind", "fixed-bit", "--n", "9", "--r", "4",
                     "--output", path.string()})
                .code == 0);
    const VertexSetFile file = read_vertex_set_file(path.string());
    CHECK(file.set.size() == 15);
    CHECK(run_cli({"verify", "--input", path.string()}).code == 0);
}

TEST_CASE("construct derives its default output name from the instance") {
    CwdGuard guard;
    fs::current_path(temp_dir());
    fs::remove("fixed-bit-n6-r2.txt");
    fs::remove("fixed-bit-n6-r2.txt.json");
    REQUIRE(run_cli({"construct", "--kind", "fixed-bit", "--n", "6", "--r", "2"}).code == 0);
    CHECK(fs::exists("fixed-bit-n6-r2.txt"));
    CHECK(fs::exists("fixed-bit-n6-r2.txt.json"));
}

TEST_CASE("verify reports the documented triangle violation from stdin") {
    const RunResult run = run_cli(
        {"verify", "--n", "3", "--r", "2", "--mode", "exploratory"}, "110\n101\n011\n");
    CHECK(run.code == 1);
    CHECK(run.out.find("violation: triangle") != std::string::npos);
    CHECK(run.out.find("011\n101\n110") != std::string::npos);

    const RunResult as_json =
        run_cli({"verify", "--n", "3", "--r", "2", "--mode", "exploratory", "--format",
                 "json"},
                "110\n101\n011\n");
    CHECK(as_json.code == 1);
    const Json body = Json::parse(as_json.out);
    CHECK(body["ok"] == false);
    CHECK(body["violation"]["kind"] == "triangle");
    CHECK(body["violation"]["witnesses"] == Json::array({"011", "101", "110"}));
    expect_schema("verify-result.schema.json", body);
}

TEST_CASE("verify picks n and r up from the file header") {
    const RunResult ok = run_cli({"verify"}, "# n=3 r=2\n110\n101\n");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("ok") == 0);

    const RunResult json_ok = run_cli({"verify", "--format", "json"}, "# n=3 r=2\n110\n101\n");
    CHECK(json_ok.code == 0);
    const Json body = Json::parse(json_ok.out);
    CHECK(body["ok"] == true);
    CHECK(body["violation"].is_null());
    expect_schema("verify-result.schema.json", body);
}

TEST_CASE("verify without a distance anywhere is a usage error") {
    const RunResult run = run_cli({"verify"}, "110\n101\n");
    CHECK(run.code == 2);
    CHECK(run.err.find("--r") != std::string::npos);
}

TEST_CASE("verify rejects a dimension flag that contradicts the input") {
    const RunResult run = run_cli({"verify", "--n", "5", "--r", "2"}, "1100\n0011\n");
    CHECK(run.code == 2);
}

TEST_CASE("count uses the formula, the parity shortcut, or the given set") {
    const RunResult formula = run_cli({"count", "--n", "6", "--r", "2"});
    CHECK(formula.code == 0);
    CHECK(formula.out == "1280\n");

    const Json formula_json = Json::parse(
        run_cli({"count", "--n", "6", "--r", "2", "--format", "json"}).out);
    CHECK(formula_json["source"] == "formula");
    CHECK(formula_json["triangles"] == "1280");
    expect_schema("count-result.schema.json", formula_json);

    const RunResult parity =
        run_cli({"count", "--n", "5", "--r", "3", "--mode", "exploratory"});
    CHECK(parity.out == "0\n");
    const Json parity_json = Json::parse(
        run_cli({"count", "--n", "5", "--r", "3", "--mode", "exploratory", "--format",
                 "json"})
            .out);
    CHECK(parity_json["source"] == "parity");
    expect_schema("count-result.schema.json", parity_json);

    const RunResult in_set = run_cli({"count", "--n", "3", "--r", "2", "--mode",
                                      "exploratory", "--stdin", "--format", "json"},
                                     "110\n101\n011\n000\n");
    REQUIRE(in_set.code == 0);
    const Json set_json = Json::parse(in_set.out);
    CHECK(set_json["source"] == "set");
    CHECK(set_json["size"] == 4);
    CHECK(set_json["triangles"] == "4");  // every 3-subset closes a triangle
    expect_schema("count-result.schema.json", set_json);
}

TEST_CASE("oracle prints the result and a loadable witness") {
    const RunResult run = run_cli({"oracle", "--n", "3", "--r", "2"});
    REQUIRE(run.code == 0);
    const auto split = run.out.find("\n# n=");
    REQUIRE(split != std::string::npos);
    const Json body = Json::parse(run.out.substr(0, split + 1));
    CHECK(body["best_size"] == 4);
    CHECK(body["optimal"] == true);
    expect_schema("oracle-result.schema.json", body);

    std::stringstream witness_text(run.out.substr(split + 1));
    const VertexSetFile witness = read_vertex_set(witness_text);
    CHECK(witness.set.size() == 4);
    CHECK(witness.header_r == 2);
    CHECK_FALSE(check_triangle_free(witness.set, Params::create(3, 2)).has_value());
}

TEST_CASE("report renders a consistent strict grid and skips invalid pairs") {
    const RunResult text = run_cli({"report", "--n", "3", "--r", "2"});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("best_known") != std::string::npos);
    CHECK(text.out.find("yes") != std::string::npos);

    const RunResult grid =
        run_cli({"report", "--n-range", "3..4", "--r-range", "2..4", "--format", "json",
                 "--max-nodes", "100000"});
    REQUIRE(grid.code == 0);
    const Json body = Json::parse(grid.out);
    REQUIRE(body.is_array());
    CHECK(body.size() == 2);  // r = 4 is out of strict range for n <= 4
    for (const Json& entry : body) CHECK(entry["consistent"] == true);
    expect_schema("sandwich-report.schema.json", body);
}

TEST_CASE("report with an empty grid is a usage error") {
    CHECK(run_cli({"report", "--n-range", "3..3", "--r-range", "4..4"}).code == 2);
    CHECK(run_cli({"report", "--r-range", "2..2"}).code == 2);  // no n given
    CHECK(run_cli({"report", "--n", "3", "--r", "2", "--n-range", "oops"}).code == 2);
}

TEST_CASE("report json output is byte-identical across runs") {
    const std::vector<std::string> args = {"report", "--n", "4", "--r", "2", "--format",
                                           "json", "--max-nodes", "50000"};
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
}
