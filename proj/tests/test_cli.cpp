#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args)
{
    std::string cmd = std::string(GERMINV_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

fs::path write_instance(const std::string& name, const std::string& text)
{
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << text;
    return p;
}

} // namespace

TEST_CASE("verify on the cusp exits 0 with all checks passing")
{
    auto file = write_instance("cli_cusp.germ",
                               "n = 2\nbranch b (t): x1 = t^2, x2 = t^3\nideal: f = x2^2 - x1^3\n");
    auto r = run_cli("verify " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("pass") != std::string::npos);
}

TEST_CASE("parse errors exit 1 with a location")
{
    auto file = write_instance("cli_bad.germ", "n = 2\nbranch b (t): x1 = 1 + t, x2 = t\n");
    auto r = run_cli("check " + file.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("2:") != std::string::npos);

    auto missing = run_cli("check /nonexistent/x.germ");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("constant branch exits 2")
{
    auto file = write_instance("cli_const.germ", "n = 2\nbranch b (t): x1 = 0, x2 = 0\n");
    auto r = run_cli("check " + file.string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("imprimitive branch exits 2 and reports k")
{
    auto file = write_instance("cli_imprim.germ", "n = 2\nbranch b (t): x1 = t^2, x2 = t^4\n");
    auto r = run_cli("check " + file.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("k=2") != std::string::npos);
}

TEST_CASE("coincident branches exit 3")
{
    auto file = write_instance("cli_coincident.germ",
                               "n = 2\nbranch a (t): x1 = t, x2 = t^2\nbranch b (s): x1 = s, x2 = s^2\n");
    auto r = run_cli("invariants " + file.string() + " --trunc-max 64");
    CHECK(r.exit_code == 3);
}

TEST_CASE("json report is valid json and byte-stable")
{
    auto file = write_instance("cli_json.germ", "n = 2\nbranch b (t): x1 = t^3, x2 = t^4\n");
    auto a = run_cli("report " + file.string() + " --format json");
    auto b = run_cli("report " + file.string() + " --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    auto doc = nlohmann::json::parse(a.output);
    CHECK(doc["delta"]["value"] == 3);
    CHECK(doc["ae_codim"]["value"] == 3);
    CHECK(doc["gorenstein"]["value"] == true);
    CHECK(doc["cm_type"]["value"] == 1);
    CHECK(doc["classification"] == "singular-finite");
}

TEST_CASE("codim subcommand reports the codimension")
{
    auto file = write_instance("cli_e6.germ", "n = 2\nbranch b (t): x1 = t^3, x2 = t^4\n");
    auto r = run_cli("codim " + file.string() + " --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["ae_codim"]["value"] == 3);
    CHECK(doc["le_codim"]["value"] == 6);
}

TEST_CASE("usage errors exit 1")
{
    CHECK(run_cli("frobnicate x.germ").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
}
