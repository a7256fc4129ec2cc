#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include "prodring/cli.hpp"
#include "prodring/scenario.hpp"

using namespace prodring;
using nlohmann::json;

namespace {

std::string scenario(const std::string& name) { return std::string(PRODRING_SCENARIOS) + "/" + name; }

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "prodring");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

CliRun binary(const std::string& args) {
    const std::string cmd = std::string(PRODRING_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    CliRun r{-1, {}, {}};
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string input_error(const std::string& text) {
    try {
        run_scenario(parse_scenario_text(text, "inline.json"), "inline.json");
    } catch (const InputError& e) {
        return e.what();
    }
    ADD_FAILURE() << "no input error for " << text;
    return "";
}

}  // namespace

TEST(Scenario, IntegersSquaredMaxideals) {
    const Report r = run_scenario_file(scenario("z2_maxideals.json"));
    EXPECT_EQ(r.exit_code, 0);
    const json& q = r.records.at(1);
    EXPECT_EQ(q["kind"], "maxideals");
    EXPECT_EQ(q["result"]["accepted"].size(), 4u);
    // Both Frechet descriptors are rejected, each with a reason.
    ASSERT_EQ(q["result"]["rejected"].size(), 2u);
    for (const json& rej : q["result"]["rejected"]) {
        EXPECT_TRUE(rej["ultrafilter"]["cofinite_frechet"].get<bool>());
        EXPECT_FALSE(rej["verdict"]["reason"].get<std::string>().empty());
    }
}

TEST(Scenario, Residue12PlusPlusTable) {
    const Report r = run_scenario_file(scenario("z12_plusplus.json"));
    const json& q = r.records.at(1);
    EXPECT_EQ(q["verdict"], true);
    ASSERT_EQ(q["result"]["witness_table"].size(), 12u);
    EXPECT_EQ(q["result"]["witness_table"][2][1].get<int>() % 6, 3);
}

TEST(Scenario, FailedAssertExitsTwo) {
    const Report r = run_scenario_file(scenario("assert_frechet_maximal.json"));
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_EQ(r.records.at(1)["verdict"], false);
    EXPECT_EQ(r.records.at(2)["verdict"], true);
    EXPECT_EQ(r.records.back()["assert_failures"], 1);
}

TEST(Scenario, HeaderAndSummary) {
    const Report r = run_scenario_file(scenario("asserts.json"));
    const json& h = r.records.front();
    EXPECT_EQ(h["record"], "header");
    EXPECT_EQ(h["schema_version"], kReportSchemaVersion);
    EXPECT_EQ(h["product"], "Z x Z");
    EXPECT_EQ(r.records.back()["record"], "summary");
    EXPECT_EQ(r.exit_code, 0);
}

TEST(Scenario, EveryVerdictHasProvenance) {
    for (const auto& entry : std::filesystem::directory_iterator(PRODRING_SCENARIOS)) {
        if (entry.path().extension() != ".json") continue;
        const Report r = run_scenario_file(entry.path().string());
        for (const json& rec : r.records) {
            if (rec["record"] != "query") continue;
            ASSERT_TRUE(rec.contains("provenance")) << entry.path();
            const std::string p = rec["provenance"];
            EXPECT_NE(p.find(':'), std::string::npos) << entry.path() << " " << rec["kind"];
            if (rec["kind"] == "assert") { EXPECT_TRUE(rec["result"]["inner"].contains("provenance")); }
        }
    }
}

TEST(Scenario, Deterministic) {
    for (const char* name : {"z2_maxideals.json", "asserts.json", "valuations.json", "finite_products.json"}) {
        const std::string a = render(run_scenario_file(scenario(name)), ReportFormat::Machine);
        const std::string b = render(run_scenario_file(scenario(name)), ReportFormat::Machine);
        EXPECT_EQ(a, b) << name;
    }
}

TEST(Scenario, InputErrorsNameThePath) {
    EXPECT_NE(input_error(R"({"rings":[{"kind":"octonions"}],"queries":[]})").find("rings[0].kind"), std::string::npos);
    EXPECT_NE(input_error(R"({"rings":[{"kind":"integers"}],"queries":[{"kind":"is_maximal","ultrafilter":{"coordinate":3,"principal":2}}]})")
                  .find("queries[0].ultrafilter.coordinate"),
              std::string::npos);
    EXPECT_NE(input_error(R"({"rings":[{"kind":"integers"}],"queries":[{"kind":"is_maximal","ultrafilter":{"coordinate":0,"principal":4}}]})")
                  .find("queries[0].ultrafilter"),
              std::string::npos);
    EXPECT_NE(input_error(R"({"rings":[{"kind":"integers"}],"queries":[{"kind":"frobnicate"}]})").find("unknown query kind"),
              std::string::npos);
    EXPECT_NE(input_error(R"({"rings":[{"kind":"integers"}],"options":{"bound":0},"queries":[]})").find("options.bound"),
              std::string::npos);
    EXPECT_NE(input_error(R"({"rings":[{"kind":"integers"}],"queries":[{"kind":"s_of","element":[1,2]}]})").find("queries[0].element"),
              std::string::npos);
}

TEST(Scenario, ParseErrorsGiveLineAndColumn) {
    try {
        parse_scenario_text("{\n  \"rings\": [,]\n}", "broken.json");
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("broken.json:2:"), std::string::npos) << e.what();
    }
}

TEST(Scenario, InfiniteIndexOptionIsRefused) {
    const std::string msg = input_error(R"({"rings":[{"kind":"integers"}],"options":{"infinite_index":true},"queries":[]})");
    EXPECT_EQ(msg, infinite_index_refusal());
}

TEST(Scenario, BigIntegersRoundTripAsStrings) {
    const Report r = run_scenario_file(scenario("interpolation.json"));
    const json& big = r.records.at(6);
    EXPECT_EQ(big["kind"], "floor_log");
    EXPECT_TRUE(big["verdict"].is_string());
    const json& small = r.records.at(5);
    EXPECT_EQ(small["verdict"], 144);
}

TEST(Cli, Version) {
    const CliRun r = cli({"--version"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find(kToolVersion), std::string::npos);
}

TEST(Cli, InfiniteIndexRefusal) {
    const CliRun r = cli({"--infinite-index", "maxideals", "--ring", "Z"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("out of scope"), std::string::npos);
    EXPECT_NE(r.err.find("Scope"), std::string::npos);
}

TEST(Cli, Subcommands) {
    CliRun r = cli({"--format", "machine", "is-maximal", "--ring", "Z/12", "--ring", "Z/10", "-u", "0:3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"verdict\":true"), std::string::npos) << r.out;

    r = cli({"--format", "machine", "is-maximal", "--ring", "Z", "--ring", "Z", "-u", "0:cofinite"});
    EXPECT_NE(r.out.find("\"verdict\":false"), std::string::npos) << r.out;

    r = cli({"--format", "machine", "check-plus", "--ring", "Z", "--r", "6", "--a", "10"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"verdict\":5"), std::string::npos) << r.out;

    r = cli({"--format", "machine", "floor-log", "--n", "1000"});
    EXPECT_NE(r.out.find("\"verdict\":144"), std::string::npos) << r.out;

    r = cli({"--format", "machine", "interpolate", "--doubling", "1000"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"verdict\":true"), std::string::npos) << r.out;

    r = cli({"--format", "machine", "oracle", "--ring", "Z/4", "--ring", "Z/9"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, BadInputExitsOne) {
    EXPECT_EQ(cli({"is-maximal", "--ring", "Z", "-u", "0:4"}).code, 1);
    EXPECT_EQ(cli({"is-maximal", "--ring", "Q", "-u", "0:2"}).code, 1);
    EXPECT_EQ(cli({"run", "/nonexistent/scenario.json"}).code, 1);
    EXPECT_EQ(cli({"no-such-command"}).code, 1);
}

TEST(Cli, RunExitCodes) {
    EXPECT_EQ(cli({"run", scenario("z2_maxideals.json")}).code, 0);
    EXPECT_EQ(cli({"run", scenario("assert_frechet_maximal.json")}).code, 2);
}

TEST(Binary, MatchesLibraryReport) {
    const std::string path = scenario("valuations.json");
    const CliRun r = binary("--format machine run " + path);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, render(run_scenario_file(path), ReportFormat::Machine));
    EXPECT_EQ(binary("--format machine run " + scenario("assert_frechet_maximal.json")).code, 2);
    EXPECT_EQ(binary("--infinite-index oracle --ring Z/2").code, 1);
}
