#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "polylin/io.hpp"

using namespace polylin;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch() {
    fs::path dir = fs::temp_directory_path() / "polylin_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Run run(const std::string& args) {
    fs::path err = scratch() / "stderr.txt";
    std::string cmd = std::string(POLYLIN_CLI_PATH) + " " + args + " 2>" + err.string();
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err);
    return r;
}

std::string write(const std::string& name, const std::string& text) {
    fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string poly_file(const std::string& name, int n, const std::vector<std::pair<Monomial, std::string>>& terms) {
    PolynomialInstance p;
    p.n = n;
    for (const auto& [m, c] : terms) p.terms[m] = parse_rational(c);
    return write(name, to_json(p).dump());
}

std::string running_poly() {
    return poly_file("running.json", 6, {{{1, 2, 3, 4}, "-1"}, {{3, 4, 5}, "-1"}, {{4, 5, 6}, "-1"}});
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("validate") {
    std::string good = write("running_example.json", to_json(fixtures::running_example()).dump());
    Run ok = run("validate " + good + " --require-simple");
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out)["valid"] == true);

    std::string bad = write("bad.json", R"({"n": 3, "monomials": [[1, 2, 3]], "constraints": []})");
    Run fail = run("validate " + bad);
    CHECK(fail.code == 1);
    Json j = Json::parse(fail.out);
    CHECK(j["valid"] == false);
    CHECK(j["diagnostics"][0]["kind"] == "inconsistent");
}

TEST_CASE("check-integral") {
    std::string b = write("joined_example.json", to_json(fixtures::joined_example()).dump());
    Run ok = run("check-integral " + b + " --targets '1,2,3;2,3;3,4,5,6'");
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out)["integral"] == true);

    std::string running_example = write("running_example.json", to_json(fixtures::running_example()).dump());
    Run cyc = run("check-integral " + running_example + " --targets '1,2,3,4;3,4,5;4,5,6'");
    CHECK(cyc.code == 1);
    Json j = Json::parse(cyc.out);
    CHECK(j["integral"] == false);
    CHECK(j["point_in_relaxation"] == true);
    CHECK(j["outside_integer_hull"] == true);
    CHECK(j["certificate"]["construction"] == "path-count");
    CHECK(j["certificate"]["point"]["2_3_4"] == "1/3");

    Run bad = run("check-integral " + running_example + " --targets '3'");
    CHECK(bad.code == 2);
    Run junk = run("check-integral " + running_example + " --targets '1,x'");
    CHECK(junk.code == 2);
}

TEST_CASE("check-mip") {
    std::string running = running_poly();
    Run r = run("check-mip " + running + " --cross-check");
    CHECK(r.code == 1);
    Json j = Json::parse(r.out);
    CHECK(j["mip"] == false);
    CHECK(j["violated"] == "A");
    CHECK(j["prime_agrees"] == true);

    std::string nested = poly_file("nested.json", 3, {{{1, 2}, "1"}, {{1, 2, 3}, "-2"}});
    Run ok = run("check-mip " + nested);
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out)["mip"] == true);
}

TEST_CASE("solve") {
    std::string running = running_poly();
    Run refused = run("solve " + running);
    CHECK(refused.code == 1);
    CHECK(refused.err.find("intersection property violated (A)") != std::string::npos);

    Run brute = run("solve " + running + " --engine brute");
    CHECK(brute.code == 0);
    Json b = Json::parse(brute.out);
    CHECK(b["value"] == "-3");
    for (const char* i : {"1", "2", "3", "4", "5", "6"}) CHECK(b["assignment"][i] == 1);

    std::string nested = poly_file("nested.json", 3, {{{1, 2}, "1"}, {{1, 2, 3}, "-2"}, {{3}, "1/2"}});
    Run dp = run("solve " + nested);
    CHECK(dp.code == 0);
    Run check = run("solve " + nested + " --engine brute");
    CHECK(Json::parse(dp.out)["value"] == Json::parse(check.out)["value"]);
    CHECK(Json::parse(dp.out)["engine"] == "dp");

    Run lp = run("solve " + running + " --engine lp");
    CHECK(lp.code == 0);
    CHECK(Json::parse(lp.out)["integral"] == false);

    std::string running_example = write("running_example.json", to_json(fixtures::running_example()).dump());
    Run with_lin = run("solve " + running + " --lin " + running_example + " --engine lp");
    CHECK(with_lin.code == 0);
    Run wrong = run("solve " + running + " --engine simplex");
    CHECK(wrong.code == 2);
}

TEST_CASE("build-star and export-lp") {
    std::string running = running_poly();
    fs::path star = scratch() / "star.json";
    Run built = run("build-star " + running + " -o " + star.string());
    CHECK(built.code == 0);
    CHECK(Json::parse(built.out)["monomials"] == 11);
    CHECK(run("validate " + star.string() + " --require-simple").code == 0);

    fs::path lp1 = scratch() / "a.lp", lp2 = scratch() / "b.lp";
    CHECK(run("export-lp " + running + " -o " + lp1.string()).code == 0);
    CHECK(run("export-lp " + running + " -o " + lp2.string()).code == 0);
    CHECK(slurp(lp1) == slurp(lp2));
    CHECK(slurp(lp1).find("Subject To") != std::string::npos);

    std::string running_example = write("running_example.json", to_json(fixtures::running_example()).dump());
    Run rows = run("export-lp " + running_example + " -o " + lp2.string());
    CHECK(Json::parse(rows.out)["rows"] == 62);
}

TEST_CASE("tdi-demo") {
    Run r = run("tdi-demo -k 3 -w 1,1,1 --wbar -1");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["case"] == 1);
    CHECK(j["primal_value"] == 2);
    CHECK(j["dual_value"] == 2);
    CHECK(run("tdi-demo -k 2 -w 1,1,1 --wbar 0").code == 2);
}

TEST_CASE("usage and guard errors") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("validate /nonexistent.json").code == 2);

    std::string wide = poly_file("wide.json", 30, {{{1, 30}, "-1"}});
    Run guarded = run("solve " + wide + " --engine brute");
    CHECK(guarded.code == 3);
}

} // TEST_SUITE
