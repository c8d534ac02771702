/*
   Copyright 2026 The gmcfar Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmcfar/cli.hpp"

namespace gmcfar {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const cli::Hooks& hooks = {}) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err, hooks);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    return rows;
}

std::string last_field(const std::string& row) { return row.substr(row.rfind(',') + 1); }

std::vector<std::string> split(const std::string& row) {
    std::vector<std::string> out;
    std::istringstream in(row);
    for (std::string f; std::getline(in, f, ',');) out.push_back(f);
    return out;
}

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

TEST(CliPfa, PartialMulti) {
    const auto r = run({"pfa", "--kind", "partial-multi", "--n", "2", "--m", "4", "--tau", "1", "--variant",
                        "paper-form"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "detector,n_cut,m_ref,tau,form,pfa");
    EXPECT_EQ(rows[1], "partial-multi,2,4,1,paper-form,0.1875");
}

TEST(CliPfa, ValidatedFormFromCachedReport) {
    const auto path = temp_path("gmcfar_cli_cache.json");
    std::remove(path.c_str());
    auto r = run({"pfa", "--kind", "partial-single", "--n", "1", "--tau", "1", "--report", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(last_field(lines(r.out)[1]), "0.5");
    EXPECT_NE(r.err.find("adjudicating"), std::string::npos);
    r = run({"pfa", "--kind", "partial-single", "--n", "1", "--tau", "1", "--report", path, "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.err.empty());
    EXPECT_NE(r.out.find("\"pfa\": 0.5"), std::string::npos);
    std::remove(path.c_str());
}

TEST(CliPfa, AllVariants) {
    const auto r = run({"pfa", "--kind", "full-multi", "--n", "1", "--m", "8", "--tau", "1", "--all-variants"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto f = split(lines(r.out)[1]);
    ASSERT_EQ(f.size(), 8u);
    EXPECT_NEAR(std::stod(f[4]), 3.4722222e-3, 1e-9);
    EXPECT_NEAR(std::stod(f[5]), 6.9444444e-3, 1e-9);
    EXPECT_NEAR(std::stod(f[6]), 6.9444444e-3, 1e-9);
    EXPECT_EQ(f[7], "m-minus-one");
}

TEST(CliPfa, UsageErrors) {
    EXPECT_EQ(run({"pfa", "--kind", "bogus", "--n", "1", "--tau", "1"}).code, 2);
    EXPECT_EQ(run({"pfa", "--kind", "partial-multi", "--n", "2", "--tau", "1", "--variant", "paper-form"}).code, 2);
    EXPECT_EQ(run({"pfa", "--kind", "partial-single", "--n", "2", "--m", "3", "--tau", "1"}).code, 2);
    EXPECT_EQ(run({"pfa", "--kind", "partial-multi", "--n", "2", "--m", "4", "--tau", "-1"}).code, 2);
    EXPECT_EQ(run({"pfa", "--kind", "partial-multi", "--n", "2", "--m", "4", "--tau", "1", "--variant",
                   "candidate-form"})
                  .code,
              2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliThreshold, Examples) {
    auto r = run({"threshold", "--kind", "partial-single", "--n", "16", "--pfa", "1.52244e-3", "--variant",
                  "paper-form"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto f = split(lines(r.out)[1]);
    EXPECT_NEAR(std::stod(f[5]), 0.5, 1e-6);
    r = run({"threshold", "--kind", "partial-multi", "--n", "2", "--m", "4", "--pfa", "0.1875", "--variant",
             "paper-form"});
    ASSERT_EQ(r.code, 0) << r.err;
    f = split(lines(r.out)[1]);
    EXPECT_NEAR(std::stod(f[5]), 1.0, 1e-9);
    EXPECT_NEAR(std::stod(f[6]), 0.1875, 1e-12);
}

TEST(CliThreshold, UnreachableExitsThree) {
    const auto r = run({"threshold", "--kind", "full-multi", "--n", "2", "--m", "1", "--pfa", "1e-4"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("does not depend on tau"), std::string::npos);
    EXPECT_EQ(run({"threshold", "--kind", "full-multi", "--n", "2", "--m", "4", "--pfa", "1.5"}).code, 2);
}

TEST(CliSimulate, DeterministicAndConsistent) {
    const std::vector<std::string> args{"simulate", "--kind", "partial-multi", "--n", "2", "--m", "4", "--tau",
                                        "1", "--alpha", "5", "--beta", "1", "--trials", "1000000", "--seed", "7"};
    const auto a = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(run(args).out, a.out);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "3"});
    EXPECT_EQ(run(threaded).out, a.out);

    const auto f = split(lines(a.out)[1]);
    const double estimate = std::stod(f[8]);
    EXPECT_LE(std::abs(estimate - 0.1875), 4.0 * std::sqrt(0.1875 * 0.8125 / 1e6));
}

TEST(CliSimulate, JsonCarriesEstimateFields) {
    const auto r = run({"--format", "json", "simulate", "--kind", "full-single", "--n", "4", "--tau", "0.5",
                        "--alpha", "2", "--beta", "3", "--trials", "10000"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* key : {"\"detector\"", "\"alpha\"", "\"trials\"", "\"rejections\"", "\"ci_high\"",
                            "\"stream_id\""}) {
        EXPECT_NE(r.out.find(key), std::string::npos) << key;
    }
}

TEST(CliSimulate, ZeroTrialsIsUsageError) {
    EXPECT_EQ(run({"simulate", "--kind", "partial-multi", "--n", "2", "--m", "4", "--tau", "1", "--alpha", "5",
                   "--beta", "1", "--trials", "0"})
                  .code,
              2);
    EXPECT_EQ(run({"simulate", "--kind", "partial-multi", "--n", "2", "--m", "4", "--tau", "1", "--alpha", "-5",
                   "--beta", "1"})
                  .code,
              2);
}

const std::vector<std::string> kSmallVerify{"verify",        "--kinds",       "partial-multi", "--grid-n",
                                            "1,2",           "--grid-m",      "2,4",           "--grid-tau",
                                            "0.5,1",         "--trials",      "1000000",       "--cfar-trials",
                                            "1000"};

TEST(CliVerify, SmallGridPasses) {
    const auto r = run(kSmallVerify);
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(lines(r.out)[0], "check,detector,status,detail");
}

TEST(CliVerify, TamperedClosedFormFails) {
    cli::Hooks hooks;
    hooks.closed_form = [](DetectorKind k, std::int64_t n, std::int64_t m, double t, PfaFormulaVariant v) {
        auto value = closed_form_pfa(k, n, m, t, v);
        if (value && k == DetectorKind::GmPartialMulti) *value *= 1.02;
        return value;
    };
    const auto r = run(kSmallVerify, hooks);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("FAIL"), std::string::npos);
}

TEST(CliVerify, FewTrialsFlagInsufficientPrecision) {
    const auto out = temp_path("gmcfar_cli_verify.json");
    const auto r = run({"verify", "--trials", "1000", "--cfar-trials", "1000", "--grid-n", "1,2", "--grid-m", "1,4",
                        "--grid-tau", "1", "--out", out});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("insufficient-precision"), std::string::npos);
    std::ifstream saved(out);
    std::stringstream text;
    text << saved.rdbuf();
    EXPECT_NE(text.str().find("\"verdict\": \"insufficient-precision\""), std::string::npos);
    std::remove(out.c_str());
}

TEST(CliSweep, TauRange) {
    const auto r = run({"sweep", "--kind", "partial-single", "--n", "4", "--tau-range", "0:2", "--step", "0.5",
                        "--variant", "paper-form"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], "tau,pfa");
    EXPECT_EQ(rows[1], "0,1");
    double last = 2.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double v = std::stod(last_field(rows[i]));
        EXPECT_LT(v, last);
        last = v;
    }
    const auto single = run({"pfa", "--kind", "partial-single", "--n", "4", "--tau", "1", "--variant", "paper-form"});
    EXPECT_EQ(last_field(rows[3]), last_field(lines(single.out)[1]));
}

TEST(CliSweep, PfaRange) {
    const auto r = run({"sweep", "--kind", "partial-multi", "--n", "2", "--m", "16", "--pfa-range", "1e-2:1e-6",
                        "--variant", "paper-form"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], "pfa,tau");
    double last = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double v = std::stod(last_field(rows[i]));
        EXPECT_GT(v, last);
        last = v;
    }
}

TEST(CliSweep, BadRanges) {
    const std::vector<std::string> base{"sweep", "--kind", "partial-single", "--n", "4", "--variant", "paper-form"};
    auto with = [&](std::vector<std::string> extra) {
        auto args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return run(args).code;
    };
    EXPECT_EQ(with({"--tau-range", "2:0", "--step", "0.5"}), 2);
    EXPECT_EQ(with({"--tau-range", "0:2", "--step", "0"}), 2);
    EXPECT_EQ(with({"--tau-range", "0:2"}), 2);
    EXPECT_EQ(with({"--tau-range", "a:b", "--step", "1"}), 2);
    EXPECT_EQ(with({"--pfa-range", "1e-2:2"}), 2);
    EXPECT_EQ(with({}), 2);
}

TEST(CliSample, Examples) {
    const std::vector<std::string> args{"sample", "--alpha", "3", "--beta", "100", "--count", "3", "--seed", "5"};
    const auto a = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    const auto rows = lines(a.out);
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& v : rows) EXPECT_GE(std::stod(v), 100.0);
    EXPECT_EQ(run(args).out, a.out);
    EXPECT_EQ(run({"sample", "--alpha", "3", "--beta", "1", "--count", "0"}).code, 2);
    EXPECT_EQ(run({"sample", "--alpha", "3", "--beta", "1", "--count", "2", "--out", "/nonexistent/dir/x"}).code, 2);
}

TEST(CliSample, WritesFile) {
    const auto path = temp_path("gmcfar_cli_sample.txt");
    ASSERT_EQ(run({"sample", "--alpha", "2", "--beta", "1", "--count", "10", "--out", path}).code, 0);
    std::ifstream in(path);
    int n = 0;
    for (std::string line; std::getline(in, line);) ++n;
    EXPECT_EQ(n, 10);
    std::remove(path.c_str());
}

}  // namespace
}  // namespace gmcfar
