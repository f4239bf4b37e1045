#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/cli.hpp"

using polignac::cli::run;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path temp(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("polignac_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, CensusCsvBody) {
    const auto r = call({"census", "--x", "30", "--format", "csv"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "gap,count\n1,1\n2,4\n4,3\n6,1\n");
}

TEST(Cli, Lemma1PrintsTupleAndCertificate) {
    const auto r = call({"lemma1", "--k", "3", "--n", "1", "--format", "json"});
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["tuple"], nlohmann::json::array({"0", "6", "12"}));
    EXPECT_TRUE(j["admissible"].get<bool>());
    EXPECT_EQ(j["certificate"].size(), 2u);
    EXPECT_NE(call({"lemma1", "--k", "3", "--n", "1"}).out.find("0,6,12"), std::string::npos);
}

TEST(Cli, AnalyticDensity) {
    const auto r = call({"density", "--analytic", "--c", "600"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("1/1200"), std::string::npos);
    const auto j = nlohmann::json::parse(call({"density", "--analytic", "--c", "1/2", "--format", "json"}).out);
    EXPECT_EQ(j["value"], "1");
    EXPECT_EQ(call({"density", "--analytic", "--c", "0"}).status, 2);
    EXPECT_EQ(call({"density", "--c", "3"}).status, 2);
}

TEST(Cli, EmpiricalDensity) {
    const auto j = nlohmann::json::parse(
        call({"density", "--empirical", "--x", "30", "--n", "6", "--format", "json"}).out);
    EXPECT_EQ(j["value"], "1/2");
    EXPECT_EQ(call({"density", "--empirical", "--x", "30", "--n", "0"}).status, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({}).status, 2);
    EXPECT_EQ(call({"frobnicate"}).status, 2);
    const auto r = call({"census", "--x", "30", "--bogus"});
    EXPECT_EQ(r.status, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(call({"census", "--x", "-3"}).status, 2);
    EXPECT_EQ(call({"census", "--x", "30", "--format", "xml"}).status, 2);
    EXPECT_EQ(call({"census", "--x", "30", "--workers", "0"}).status, 2);
    EXPECT_EQ(call({"narrow", "--k", "0", "--max-diameter", "5"}).status, 2);
    EXPECT_EQ(call({"ap"}).status, 2);
    EXPECT_EQ(call({"--help"}).status, 0);
}

TEST(Cli, CapacityIsAUsageError) {
    const auto r = call({"census", "--x", "20000000000"});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("ceiling"), std::string::npos);
}

TEST(Cli, CeilingOverrideFromEnvironment) {
    ::setenv("POLIGNAC_SIEVE_CEILING", "100", 1);
    EXPECT_EQ(call({"sieve", "--hi", "101"}).status, 2);
    EXPECT_EQ(call({"sieve", "--hi", "100", "--count-only"}).status, 0);
    ::unsetenv("POLIGNAC_SIEVE_CEILING");
}

TEST(Cli, NarrowFailureExitsOne) {
    const auto r = call({"narrow", "--k", "3", "--max-diameter", "1"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("no admissible tuple"), std::string::npos);
    const auto ok = call({"narrow", "--k", "2", "--max-diameter", "2", "--format", "json"});
    EXPECT_EQ(ok.status, 0);
    EXPECT_EQ(nlohmann::json::parse(ok.out)["tuple"], nlohmann::json::array({"0", "2"}));
}

TEST(Cli, Admissible) {
    EXPECT_EQ(call({"admissible", "--tuple", "0,2,6"}).status, 0);
    const auto bad = call({"admissible", "--tuple", "0,2,4", "--format", "json"});
    EXPECT_EQ(bad.status, 1);
    EXPECT_EQ(nlohmann::json::parse(bad.out)["violation"]["p"], 3);
    // normalized before checking
    const auto shifted = call({"admissible", "--tuple", "11,13,17", "--format", "csv"});
    EXPECT_EQ(shifted.out, "p,missed_residue\n2,1\n3,1\n");
    EXPECT_EQ(call({"admissible", "--tuple", "4,2"}).status, 2);
}

TEST(Cli, EmptyCandidateSetExitsOne) {
    EXPECT_EQ(call({"candidates", "--x", "2"}).status, 1);
    EXPECT_EQ(call({"cover", "--x", "2", "--m-max", "10"}).status, 1);
}

TEST(Cli, CandidatesDropGapOneByDefault) {
    EXPECT_EQ(call({"candidates", "--x", "30", "--format", "csv"}).out, "gap\n2\n4\n6\n");
    EXPECT_EQ(call({"candidates", "--x", "30", "--keep-gap-one", "--format", "csv"}).out, "gap\n1\n2\n4\n6\n");
    EXPECT_EQ(call({"candidates", "--x", "30", "-T", "3", "--format", "csv"}).out, "gap\n2\n4\n");
}

TEST(Cli, BlocksAndDirichlet) {
    const auto b = nlohmann::json::parse(call({"blocks", "--q", "1", "--k", "3", "--count", "2", "--format", "json"}).out);
    EXPECT_EQ(b["blocks"], nlohmann::json::parse(R"([["6","12"],["18","36"]])"));
    const auto d = nlohmann::json::parse(
        call({"dirichlet", "--a", "6", "--q", "3", "--k", "3", "--count", "1", "--format", "json"}).out);
    EXPECT_EQ(d["n_values"], nlohmann::json::array({"10"}));
    EXPECT_EQ(d["terms"], nlohmann::json::array({"36"}));
    EXPECT_TRUE(d["verified"].get<bool>());

    const auto bad = call({"dirichlet", "--a", "7", "--q", "3", "--k", "3", "--count", "1"});
    EXPECT_EQ(bad.status, 2);
    EXPECT_NE(bad.err.find("q | a"), std::string::npos);

    const auto zero = call({"dirichlet", "--a", "0", "--q", "1", "--k", "3", "--i-max", "2", "--format", "json"});
    EXPECT_EQ(zero.status, 0);
    const auto z = nlohmann::json::parse(zero.out);
    EXPECT_EQ(z["command"], "blocks");
    EXPECT_EQ(z["blocks"], b["blocks"]);
}

TEST(Cli, BigIntegersInFullDecimal) {
    const auto r = call({"window", "--k", "59", "--n", "1", "--format", "csv"});
    EXPECT_NE(r.out.find("1922760350154212639070"), std::string::npos);
    EXPECT_EQ(r.out.find("e+"), std::string::npos);
}

TEST(Cli, ApFromSetFile) {
    const auto path = temp("set.txt");
    std::ofstream(path, std::ios::binary) << "1\n2\n4\n5\n7\n";
    const auto j = nlohmann::json::parse(call({"ap", "--set", path.string(), "--format", "json"}).out);
    EXPECT_EQ(j["run"]["start"], 1);
    EXPECT_EQ(j["run"]["step"], 3);
    EXPECT_EQ(j["run"]["length"], 3);
    std::ofstream(path, std::ios::binary) << "3\n1\n";
    EXPECT_EQ(call({"ap", "--set", path.string()}).status, 2);
    std::filesystem::remove(path);
    EXPECT_EQ(call({"ap", "--set", path.string()}).status, 2);
}

TEST(Cli, CensusFileRoundTrip) {
    const auto path = temp("census.txt");
    for (const char* x : {"1000", "100000"}) {
        ASSERT_EQ(call({"census", "--x", x, "--out", path.string()}).status, 0);
        EXPECT_EQ(slurp(path).rfind("POLIGNAC-CENSUS v1\nx=", 0), 0u);
        for (const char* t : {"1", "5", "40"}) {
            for (const char* sub : {"candidates", "ap"}) {
                const auto from_file = call({sub, "--census", path.string(), "-T", t, "--format", "json"});
                const auto direct = call({sub, "--x", x, "-T", t, "--format", "json"});
                ASSERT_EQ(from_file.out, direct.out) << sub << " x=" << x << " T=" << t;
            }
        }
    }
    std::ofstream(path, std::ios::binary) << "not a census\n";
    EXPECT_EQ(call({"candidates", "--census", path.string()}).status, 2);
    std::filesystem::remove(path);
}

TEST(Cli, OutWritesRenderedOutput) {
    const auto path = temp("out.txt");
    ASSERT_EQ(call({"window", "--k", "3", "--n", "5", "--format", "csv", "--out", path.string()}).status, 0);
    EXPECT_EQ(slurp(path), "i,difference\n1,30\n2,60\n");
    std::filesystem::remove(path);
}

TEST(Cli, JsonSchemaIsStable) {
    const std::vector<std::vector<std::string>> cmds = {
        {"sieve", "--hi", "50"},
        {"census", "--x", "100"},
        {"candidates", "--x", "100"},
        {"cover", "--x", "1000", "--m-max", "20"},
        {"density", "--analytic", "--c", "7"},
        {"density", "--empirical", "--x", "1000", "--n", "20"},
        {"admissible", "--tuple", "0,2,6,8"},
        {"narrow", "--k", "5", "--max-diameter", "20"},
        {"lemma1", "--k", "4", "--n", "2"},
        {"window", "--k", "4", "--n", "2"},
        {"blocks", "--q", "2", "--k", "4", "--count", "2"},
        {"dirichlet", "--a", "10", "--q", "5", "--k", "4", "--count", "3"},
        {"ap", "--x", "10000"},
    };
    for (auto args : cmds) {
        args.insert(args.end(), {"--format", "json"});
        const auto r = call(args);
        ASSERT_EQ(r.status, 0) << args[0] << ": " << r.err;
        const auto j = nlohmann::json::parse(r.out);
        ASSERT_EQ(j["command"], args[0]);
        ASSERT_EQ(j["status"], "ok");
        const auto again = nlohmann::json::parse(call(args).out);
        std::vector<std::string> k1, k2;
        for (const auto& [k, v] : j.items()) k1.push_back(k);
        for (const auto& [k, v] : again.items()) k2.push_back(k);
        ASSERT_EQ(k1, k2);
    }
}

TEST(Cli, WorkerCountDoesNotChangeBytes) {
    const std::vector<std::vector<std::string>> cmds = {
        {"sieve", "--lo", "1000", "--hi", "60000"},
        {"census", "--x", "300000"},
        {"candidates", "--x", "300000", "-T", "10"},
        {"cover", "--x", "300000", "--m-max", "80"},
        {"density", "--empirical", "--x", "300000", "--n", "100"},
        {"ap", "--x", "300000"},
        {"narrow", "--k", "20", "--max-diameter", "200"},
    };
    for (const auto& base : cmds) {
        for (const char* fmt : {"table", "csv", "json"}) {
            auto one = base;
            one.insert(one.end(), {"--format", fmt, "--workers", "1", "--segment-size", "4096"});
            auto eight = base;
            eight.insert(eight.end(), {"--format", fmt, "--workers", "8"});
            ASSERT_EQ(call(one).out, call(eight).out) << base[0] << " " << fmt;
        }
    }
}
