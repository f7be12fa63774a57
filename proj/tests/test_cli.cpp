#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary() {
    const char* bin = std::getenv("SPHLAB_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

RunResult run(const std::string& args) {
    // Subshell so trailing heredoc bodies stay intact ahead of the redirect.
    std::string cmd = "( " + binary() + " " + args + "\n) 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

Json run_json(const std::string& args, int expected_exit = 0) {
    RunResult r = run(args);
    CAPTURE(args, r.out);
    REQUIRE(r.exit_code == expected_exit);
    return Json::parse(r.out);
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/sphlab_cli_test_") + name;
}

}  // namespace

TEST_CASE("omega at the trivial parameter prints the documented value") {
    Json j = run_json("omega --p 2 --n 3 --param trivial --coweight 1,0,-1");
    REQUIRE(j.size() == 2);
    CHECK(j.at("re") == 1.0);
    CHECK(j.at("im") == 0.0);
}

TEST_CASE("cosets reports the documented count") {
    Json j = run_json("cosets --p 2 --n 2 --coweight 1,-1");
    CHECK(j.at("count") == 6);
    CHECK(j.at("label") == Json::array({1, -1}));
    CHECK(j.at("delta") == "1");
    CHECK(j.contains("inverse_hval_histogram"));
    CHECK_FALSE(j.contains("reps"));

    Json with_reps = run_json("cosets --p 2 --n 2 --coweight 1,-1 --emit-reps");
    CHECK(with_reps.at("reps").size() == 6);
}

TEST_CASE("distinct members of the perturbation sequence are not equivalent") {
    Json j = run_json("param-equiv --p 2 --n 3 --param sequence:1 --param-b sequence:2");
    REQUIRE(j.size() == 1);
    CHECK(j.at("equivalent") == false);

    Json same = run_json("param-equiv --p 2 --n 3 --param sequence:3 --param-b sequence:3");
    CHECK(same.at("equivalent") == true);
}

TEST_CASE("cartan and iwasawa decompose the running example") {
    Json c = run_json("cartan --p 2 --n 2 --matrix '1,0;1/2,1'");
    CHECK(c.at("label") == Json::array({1, -1}));

    Json i = run_json("iwasawa --p 2 --n 2 --matrix '1,0;1/2,1'");
    CHECK(i.at("hval") == Json::array({-1, 1}));
}

TEST_CASE("structure constants match the frozen expansion") {
    Json j = run_json("structure-constants --p 2 --n 2 --m1 1,-1 --m2 1,-1");
    REQUIRE(j.at("constants").size() == 3);
    CHECK(j.at("constants")[0].at("m") == Json::array({0, 0}));
    CHECK(j.at("constants")[0].at("value") == "6");
    CHECK(j.at("constants")[1].at("value") == "1");
    CHECK(j.at("constants")[2].at("value") == "1");
}

TEST_CASE("convolve and l1-norm consume exact elements from stdin") {
    const std::string indicator = R"({"p":2,"n":2,"terms":[{"m":[1,-1],"coeff":"1"}]})";
    const std::string doc = "{\"f\":" + indicator + ",\"g\":" + indicator + "}";

    RunResult conv = run("convolve --in - <<EOF\n" + doc + "\nEOF");
    REQUIRE(conv.exit_code == 0);
    Json cj = Json::parse(conv.out);
    CHECK(cj.at("terms").size() == 3);
    for (const Json& term : cj.at("terms"))
        if (term.at("m") == Json::array({0, 0})) CHECK(term.at("coeff") == "6");

    RunResult norm = run("l1-norm --in - <<EOF\n" + indicator + "\nEOF");
    REQUIRE(norm.exit_code == 0);
    CHECK(Json::parse(norm.out).at("value") == "6");
}

TEST_CASE("alpha at the trivial parameter is one") {
    Json j = run_json("alpha --p 2 --n 3 --param trivial --hval -1,0,1");
    CHECK(j.at("re") == 1.0);
    CHECK(j.at("im") == 0.0);
}

TEST_CASE("satake emits the symmetric transform") {
    RunResult r = run("satake --in - <<EOF\n"
                      R"({"p":2,"n":2,"terms":[{"m":[1,-1],"coeff":"1"}]})"
                      "\nEOF");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("symmetric") == true);
    CHECK(j.at("terms").size() == 3);
}

TEST_CASE("star-test reports the reversal witness") {
    Json j = run_json("star-test --p 2 --n 3 --param sequence:1");
    CHECK(j.at("star") == true);
    CHECK(j.at("witness") == Json::array({2, 1, 0}));
}

TEST_CASE("psd flags the first perturbation gram matrix as not psd") {
    Json j = run_json(
        "psd --p 2 --n 3 --param sequence:1 --points '0,0,0;1,0,-1;1,1,-2'");
    CHECK(j.at("verdict") == "NOT_PSD");
    CHECK(j.at("min_eigenvalue").get<double>() < -1e-3);

    Json g = run_json(
        "gram --p 2 --n 3 --param sequence:1 --points '0,0,0;1,0,-1;1,1,-2'");
    CHECK(g.at("size") == 3);
    REQUIRE(g.at("gram").size() == 3);
    CHECK(g.at("gram")[0][0].at("re") == 1.0);
}

TEST_CASE("find-witness emits a certificate that re-verifies") {
    std::string path = temp_path("witness.json");
    Json cert = run_json("find-witness --p 2 --n 3 --j-max 2 --out " + path);
    CHECK(cert.at("kind") == "bounded_non_positive_definite_witness");
    CHECK(cert.at("j") == 1);

    Json verdict = run_json("find-witness --verify " + path);
    CHECK(verdict.at("verified") == true);
    CHECK(verdict.at("quadratic_value").get<double>() < 0.0);

    // Tampering with the recorded value must fail verification with exit 1.
    Json broken = cert;
    broken["quadratic_value"] = broken["quadratic_value"].get<double>() + 1e-3;
    std::string broken_path = temp_path("witness_broken.json");
    std::ofstream(broken_path) << broken.dump();
    RunResult r = run("find-witness --verify " + broken_path);
    CHECK(r.exit_code == 1);
    CHECK(Json::parse(r.out).at("verified") == false);
}

TEST_CASE("unbounded emits a certificate that re-verifies") {
    std::string path = temp_path("unbounded.json");
    Json cert = run_json("unbounded --p 2 --n 2 --sigma 1 --m-max 4 --out " + path);
    CHECK(cert.at("kind") == "unbounded_star_spherical");
    CHECK(cert.at("first_crossing") == 1);
    CHECK(cert.at("profile")[1] == "19/12");

    Json verdict = run_json("unbounded --verify " + path);
    CHECK(verdict.at("verified") == true);
}

TEST_CASE("unbounded distinguishes not-found from errors") {
    RunResult not_found = run("unbounded --p 2 --n 2 --sigma 1/2 --m-max 6");
    CHECK(not_found.exit_code == 2);
    CHECK(Json::parse(not_found.out).at("found") == false);

    RunResult error = run("unbounded --p 2 --n 2 --sigma 1/3 --m-max 4");
    CHECK(error.exit_code == 1);
    CHECK(error.out.empty());
}

TEST_CASE("verify-axioms passes for a star parameter") {
    Json j = run_json("verify-axioms --p 2 --n 3 --param sequence:2");
    CHECK(j.at("all_pass") == true);
}

TEST_CASE("convergence-profile emits a decreasing profile") {
    Json j = run_json("convergence-profile --p 2 --n 3 --js 1,2,4");
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    double prev = 1e9;
    for (const Json& pt : j) {
        double gap = pt.at("max_omega_gap").get<double>();
        CHECK(gap <= pt.at("max_majorant_gap").get<double>() + 1e-12);
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("semantic errors exit with code one") {
    RunResult bad_coweight = run("cosets --p 2 --n 2 --coweight 1,1");
    CHECK(bad_coweight.exit_code == 1);

    RunResult bad_prime = run("cosets --p 4 --n 2 --coweight 1,-1");
    CHECK(bad_prime.exit_code == 1);

    RunResult no_sub = run("");
    CHECK(no_sub.exit_code == 1);
}

TEST_CASE("environment variables supply defaults") {
    RunResult r = run("cosets --coweight 1,-1 --n 2 < /dev/null");
    // no --p: default 2 applies
    CHECK(r.exit_code == 0);

    std::string cmd = "SPHLAB_P=3 " + binary() + " cosets --n 2 --coweight 1,-1 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    REQUIRE(pclose(pipe) == 0);
    CHECK(Json::parse(out).at("count") == 12);
}

TEST_CASE("repeated runs with one seed are deterministic") {
    std::string args = "find-witness --p 2 --n 3 --j-max 2 --seed 7";
    Json a = run_json(args);
    Json b = run_json(args);
    CHECK(a == b);
}
