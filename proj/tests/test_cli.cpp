#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "roundfold/textio.hpp"

namespace {

struct CommandResult {
    int exit_code;
    std::string output;  // stdout + stderr interleaved
};

CommandResult run_cli(const std::string& args) {
    std::string command = std::string(ROUNDFOLD_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string fixture(const std::string& name) {
    return std::string(ROUNDFOLD_TESTS_DIR) + "/fixtures/" + name;
}

std::string golden(const std::string& name) {
    return roundfold::read_file(std::string(ROUNDFOLD_TESTS_DIR) + "/golden/" + name);
}

}  // namespace

TEST_CASE("catalog subcommand emits a parseable descriptor") {
    auto result = run_cli("catalog connected_sum_sphere_bundles 6 2 2");
    CHECK(result.exit_code == 0);
    auto d = roundfold::parse_descriptor(result.output);
    CHECK(d.m == 6);
    CHECK(d.l == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("graph").exit_code == 2);
}

TEST_CASE("validate subcommand") {
    CHECK(run_cli("validate " + fixture("csb_4_2_2.desc")).exit_code == 0);
    auto bad = run_cli("validate " + fixture("broken_lengths.desc"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("regions") != std::string::npos);
}

TEST_CASE("check exit codes follow applicability") {
    std::string descriptor = fixture("csb_4_2_2.desc");
    std::string bundle = fixture("trivial.bundle");
    auto ok = run_cli("check " + descriptor + " --bundle " + bundle + " --start 0 --rule thm3");
    CHECK(ok.exit_code == 0);
    auto rejected = run_cli("check " + descriptor + " --bundle " + bundle + " --start 0 --rule thm1");
    CHECK(rejected.exit_code == 1);
    CHECK(rejected.output.find("H^2(F_C;Z) = 0") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs and match the golden files") {
    std::vector<std::pair<std::string, std::string>> cases = {
        {"report thm6 3", "report_thm6_3.txt"},
        {"report thm7 4", "report_thm7_4.txt"},
        {"report thm8 4 6", "report_thm8_4_6.txt"},
        {"check " + fixture("csb_4_2_2.desc") + " --bundle " + fixture("trivial.bundle") +
             " --start 0 --rule thm3",
         "check_csb_4_2_2_thm3.txt"},
        {"check " + fixture("csb_9_4_2.desc") + " --bundle " + fixture("trivial.bundle") +
             " --start 0 --rule auto",
         "check_csb_9_4_2_auto.txt"},
        {"check " + fixture("csb_4_2_2.desc") + " --bundle " + fixture("euler7.bundle") +
             " --start 0 --rule thm3",
         "check_csb_4_2_2_euler7.txt"},
        {"graph " + fixture("csb_5_4_3.desc") + " --degree 1 --ring z", "graph_csb_5_4_3_h1_z.txt"},
        {"graph " + fixture("csb_9_4_2.desc") + " --degree 1 --ring z2 --dot",
         "graph_csb_9_4_2_h1_z2.dot"},
        {"graph " + fixture("csb_9_4_2.desc") + " --degree 1 --ring z2 --json",
         "graph_csb_9_4_2_h1_z2.json"},
    };
    for (const auto& [args, golden_name] : cases) {
        CAPTURE(args);
        auto first = run_cli(args);
        auto second = run_cli(args);
        CHECK(first.output == second.output);
        CHECK(first.output == golden(golden_name));
    }
}

TEST_CASE("apply emits the rewritten descriptor") {
    auto result = run_cli("apply " + fixture("csb_9_4_2.desc") + " --fiber 'sphere(1)' --bundle " +
                          fixture("trivial.bundle") + " --start 0");
    CHECK(result.exit_code == 0);
    // First line is the provenance comment; the rest parses back.
    auto d = roundfold::parse_descriptor(result.output);
    CHECK(d.m == 10);
    CHECK(d.l == 2);

    auto rejected = run_cli("apply " + fixture("csb_4_2_2.desc") + " --fiber 'sphere(1)' --bundle " +
                            fixture("trivial.bundle") + " --start 0 --rule thm1");
    CHECK(rejected.exit_code == 1);
}

TEST_CASE("homology subcommand with json output") {
    auto result = run_cli("--json homology --four-manifold " + fixture("two_trivial.4mfd") +
                          " --alpha 1,0,0,0");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"simply_connected\": true") != std::string::npos);
    CHECK(result.output.find("#3 (S^2 x S^3)") != std::string::npos);
}
