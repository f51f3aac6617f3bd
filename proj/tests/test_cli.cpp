#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "d2p/io.hpp"

using namespace d2p;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("field command emits the canonical parameters") {
    const RunResult r = run({"field", "-p", "3"});
    CHECK(r.code == 0);
    const auto j = io::json::parse(r.out);
    CHECK(j["p"] == 3);
    CHECK(j["m"] == 2);
    CHECK(j["modulus"] == 7);
    CHECK(j["lambda"] == 2);
    CHECK(run({"field", "-p", "7"}).out.find("\"m\": 3") != std::string::npos);
}

TEST_CASE("field command rejects bad p with exit code 4") {
    const RunResult r = run({"field", "-p", "4"});
    CHECK(r.code == 4);
    CHECK(r.out.empty());
    CHECK(r.err.find("odd") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::vector<std::string> args = {"gens", "--spec", R"({"p":3,"weights":[1],"s":1})",
                                           "--dmax", "6"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> sample = {
        "verify-sep", "--spec", R"({"p":3,"weights":[1],"s":1})",
        "--mode",     "sample", "--budget",
        "50",         "--seed", "9"};
    CHECK(run(sample).out == run(sample).out);
}

TEST_CASE("decompose command reports the regular representation multiset") {
    const Field f = Field::for_p(3);
    const auto path = write_temp("d2p_regular3.json",
                                 io::matrix_rep_to_json(regular_representation(3, f)).dump());
    const RunResult r = run({"decompose", "--matrix", path.string()});
    CHECK(r.code == 0);
    const auto j = io::json::parse(r.out);
    CHECK(j["multiset"]["W_1"] == 2);
    CHECK(j["multiset"]["W_0"] == 1);
    CHECK(j["multiset"].size() == 2);
}

TEST_CASE("decompose command names the violated relation") {
    const Field f = Field::for_p(5);
    io::json j = io::matrix_rep_to_json(regular_representation(5, f));
    j["sigma"][0] = 1;  // break the involution
    const auto path = write_temp("d2p_bad_rep.json", j.dump());
    const RunResult r = run({"decompose", "--matrix", path.string()});
    CHECK(r.code == 4);
    CHECK(r.err.find("sigma") != std::string::npos);
}

TEST_CASE("gens command output formats") {
    const std::string spec = R"({"p":3,"weights":[1],"s":0})";
    const RunResult csv = run({"gens", "--spec", spec, "--dmax", "8", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out ==
          "degree,dim_invariants,rank_from_below,new_generators,representatives\n"
          "1,0,0,0,\n"
          "2,1,0,1,x1*y1\n"
          "3,1,0,1,x1^3+y1^3\n"
          "4,1,1,0,\n"
          "5,1,1,0,\n"
          "6,2,2,0,\n"
          "7,1,1,0,\n"
          "8,2,2,0,\n");
    const RunResult j = run({"gens", "--spec", spec, "--dmax", "8"});
    const auto parsed = io::json::parse(j.out);
    CHECK(parsed["beta_observed"] == 3);
    CHECK(parsed["paper_bound"] == 3);
    CHECK(parsed["rows"].size() == 8);
    // default d_max = s + max{r, p} + 3
    const RunResult def = run({"gens", "--spec", spec});
    CHECK(io::json::parse(def.out)["d_max"] == 6);
}

TEST_CASE("gens command validates the spec and fails fast") {
    const RunResult r = run({"gens", "--spec", R"({"p":3,"weights":[2],"s":0})"});
    CHECK(r.code == 4);
    CHECK(r.err.find("weight") != std::string::npos);
    const RunResult bad_json = run({"gens", "--spec", R"({"p":3,"weights":[1]})"});
    CHECK(bad_json.code == 4);
    CHECK(bad_json.err.find("\"s\"") != std::string::npos);
}

TEST_CASE("sepset text output round-trips through verify-sep --set") {
    const std::string spec = R"({"p":3,"weights":[1],"s":1})";
    const RunResult text = run({"sepset", "--spec", spec, "--format", "text"});
    CHECK(text.code == 0);
    const auto path = write_temp("d2p_set.txt", text.out);
    const RunResult verify = run({"verify-sep", "--spec", spec, "--set", path.string()});
    CHECK(verify.code == 0);
    CHECK(io::json::parse(verify.out)["verdict"] == "separating");
}

TEST_CASE("verify-sep exit codes distinguish the outcomes") {
    const std::string spec = R"({"p":3,"weights":[1],"s":1})";
    CHECK(run({"verify-sep", "--spec", spec, "--builtin"}).code == 0);

    const auto dropped = write_temp("d2p_dropped.txt",
                                    "x1*y1\nx1^3+y1^3\n# no h_1\nz1+w1\nz1*w1\n");
    const RunResult cex = run({"verify-sep", "--spec", spec, "--set", dropped.string()});
    CHECK(cex.code == 2);
    const auto j = io::json::parse(cex.out);
    CHECK(j["verdict"] == "counterexample");
    CHECK(j["counterexample"][0] == io::json::array({0, 1, 0, 1}));
    CHECK(j["counterexample"][1] == io::json::array({0, 1, 1, 0}));

    const RunResult budget = run({"verify-sep", "--spec", spec, "--budget", "100"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("256") != std::string::npos);

    const RunResult both = run({"verify-sep", "--spec", spec, "--set", dropped.string(),
                                "--builtin"});
    CHECK(both.code == 4);
}

TEST_CASE("verify-sep sampled mode embeds the seed") {
    const std::string spec = R"({"p":3,"weights":[1],"s":1})";
    const RunResult r = run({"verify-sep", "--spec", spec, "--mode", "sample", "--budget",
                             "25", "--seed", "77"});
    CHECK(r.code == 0);
    const auto j = io::json::parse(r.out);
    CHECK(j["mode"] == "sampled");
    CHECK(j["seed"] == 77);
    CHECK(j["verdict"] == "inconclusive-sampled");
    // default seed is printed too
    const RunResult defaulted =
        run({"verify-sep", "--spec", spec, "--mode", "sample", "--budget", "5"});
    CHECK(io::json::parse(defaulted.out)["seed"].is_number());
}

TEST_CASE("beta-sep command") {
    const RunResult r = run({"beta-sep", "-p", "5"});
    CHECK(r.code == 0);
    const auto j = io::json::parse(r.out);
    CHECK(j["separated_at_p_plus_1"] == true);
    CHECK(j["separated_at_le_p"] == false);
    CHECK(j["beta_sep"] == 6);
    CHECK(j["separating_invariant"] == "x1^5*z1+y1^5*w1");
    CHECK(run({"beta-sep", "-p", "6"}).code == 4);
}

TEST_CASE("bounds command") {
    const RunResult r = run({"bounds", "--spec", R"({"p":7,"weights":[1,2,3],"s":2})"});
    CHECK(r.code == 0);
    const auto j = io::json::parse(r.out);
    CHECK(j["paper_bound"] == 9);
    CHECK(j["symonds_bound"] == 130);
    CHECK(j["beta_sep_bound"] == 8);
}

TEST_CASE("spec can come from a file, with field multiplier applied") {
    const auto path = write_temp("d2p_spec.json", R"({"p":3,"weights":[1],"s":0})");
    const RunResult r = run({"bounds", "--spec", path.string()});
    CHECK(r.code == 0);
    const RunResult stress =
        run({"verify-sep", "--spec", path.string(), "--field-multiplier", "2"});
    CHECK(stress.code == 0);
    CHECK(io::json::parse(stress.out)["points"] == 256);  // GF(16)^2
}

TEST_CASE("unknown flags and missing subcommands are input errors") {
    CHECK(run({"gens", "--nope"}).code == 4);
    CHECK(run({}).code == 4);
    CHECK(run({"verify-sep", "--spec", "/nonexistent/file.json"}).code == 4);
}
