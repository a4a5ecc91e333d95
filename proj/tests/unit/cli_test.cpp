#include "cli.hpp"
#include "icg/combinatorics.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <sstream>

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = icg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Drops the fields that legitimately vary between runs.
std::string stable(json doc) {
    doc["provenance"].erase("elapsed_ms");
    doc["provenance"].erase("jobs");
    return doc.dump();
}

} // namespace

TEST(Cli, HpReport) {
    const auto o = run({"hp", "--p", "3", "--s", "3", "--a", "0,1,2"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto doc = o.doc();
    EXPECT_EQ(doc["format_version"], "1");
    EXPECT_EQ(doc["command"], "hp");
    EXPECT_EQ(doc["result"]["hp"]["num"], "7");
    EXPECT_EQ(doc["result"]["hp"]["den"], "9");
    EXPECT_EQ(doc["result"]["hp"]["decimal"], "0.77778");
    EXPECT_EQ(doc["result"]["energy"], "52");
    EXPECT_EQ(doc["result"]["delta"], (std::vector<int>{1, 1}));
}

TEST(Cli, HpFromDeltaInfersS) {
    const auto o = run({"hp", "--p", "3", "--delta", "1,1,2,1,1,2,1,1,2,1,2,1,1,2,1,1"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.doc()["result"]["hp"]["decimal"], "5.36266");
}

TEST(Cli, RationalsRoundTrip) {
    const auto o = run({"search", "--p", "3", "--s", "12", "--r", "5", "--top", "3"});
    ASSERT_EQ(o.code, 0) << o.err;
    for (const auto& entry : o.doc()["result"]["top"]) {
        const icg::Rational v(icg::BigInt(entry["value"]["num"].get<std::string>()),
                              icg::BigInt(entry["value"]["den"].get<std::string>()));
        for (const auto& vec : entry["vectors"]) {
            const auto d = vec["delta"].get<std::vector<int>>();
            EXPECT_EQ(icg::hp_eval(icg::Prime(3), icg::DeltaVector(d)), v);
        }
    }
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"hp", "--p", "4", "--s", "3", "--a", "0,1,2"}).code, 2);
    EXPECT_EQ(run({"hp", "--p", "3", "--s", "3", "--a", "0,2,1"}).code, 2);
    EXPECT_EQ(run({"search", "--p", "2", "--s", "8", "--r", "4", "--filter", "sepstar"}).code, 3);
    EXPECT_EQ(run({"search", "--p", "3", "--s", "4", "--r", "6"}).code, 2);
    EXPECT_EQ(run({"search", "--p", "3", "--s", "8"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"energy", "--n", "720720", "--all-subsets"}).code, 3);
    EXPECT_EQ(run({"energy", "--n", "9", "--divisors", "2"}).code, 2);
    EXPECT_EQ(run({"lambda", "--delta", "1,1,2,2"}).code, 0);
    EXPECT_EQ(run({"verify", "--p", "3", "--s", "10", "--r", "4"}).code, 0);
    EXPECT_EQ(run({"verify", "--p", "2", "--s", "10", "--r", "4"}).code, 2);
}

TEST(Cli, JobsDoNotChangeTheReport) {
    const std::vector<std::string> base{"search", "--p", "3", "--s", "18", "--r", "9", "--top", "4"};
    auto with_jobs = [&](const char* j) {
        auto a = base;
        a.insert(a.end(), {"--jobs", j});
        const auto o = run(a);
        EXPECT_EQ(o.code, 0) << o.err;
        return stable(o.doc());
    };
    const auto one = with_jobs("1");
    EXPECT_EQ(one, with_jobs("2"));
    EXPECT_EQ(one, with_jobs("4"));
}

TEST(Cli, JobsFromEnvironment) {
    ::setenv("ICG_ENERGY_JOBS", "3", 1);
    const auto o = run({"search", "--p", "3", "--s", "10", "--r", "4"});
    ::unsetenv("ICG_ENERGY_JOBS");
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.doc()["provenance"]["jobs"], 3);

    ::setenv("ICG_ENERGY_JOBS", "zero", 1);
    EXPECT_EQ(run({"search", "--p", "3", "--s", "10", "--r", "4"}).code, 2);
    ::unsetenv("ICG_ENERGY_JOBS");
}

TEST(Cli, VerifySweepCsv) {
    const auto o = run({"verify", "--sweep", "4..8,3..7,3", "--format", "csv"});
    ASSERT_EQ(o.code, 0) << o.err;
    std::istringstream lines(o.out);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, "p,s,r,status,case,min_num,min_den,min_decimal");
    int pass = 0, skipped = 0;
    for (std::string line; std::getline(lines, line);) {
        if (line.find(",pass,") != std::string::npos) ++pass;
        if (line.find(",skipped,") != std::string::npos) ++skipped;
    }
    EXPECT_EQ(pass, 15);
    EXPECT_EQ(pass + skipped, 25);
}

TEST(Cli, LambdaFullFrom) {
    const auto o = run({"lambda", "--full-from", "--p", "3", "--s", "16", "--r", "11", "--top", "2"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_FALSE(o.out.empty());
}

TEST(Cli, Energy) {
    const auto o = run({"energy", "--n", "27", "--divisors", "1,3,9", "--float-check"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto doc = o.doc();
    EXPECT_EQ(doc["result"]["energy"], "52");
    EXPECT_EQ(doc["result"]["approximate_check"]["pass"], true);

    const auto all = run({"energy", "--n", "9", "--all-subsets"});
    ASSERT_EQ(all.code, 0) << all.err;
    EXPECT_NE(all.out.find("\"12\""), std::string::npos);
}
