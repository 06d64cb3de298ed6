#include "contact_forge/cli/commands.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

using contact_forge::cli::run_cli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args)
{
    args.insert(args.begin(), "contact-forge");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(CF_GOLDEN_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("contact_forge_" + name);
}

}  // namespace

TEST(Cli, VerifyProductPasses)
{
    const CliRun r = run({"verify-product", "--n", "2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("PASS alpha ^ (d alpha)^2"), std::string::npos);
    EXPECT_NE(r.out.find("contact condition at sampled collar points"), std::string::npos);
}

TEST(Cli, VerifyProductJsonN3)
{
    const CliRun r = run({"verify-product", "--n", "3", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["status"], "pass");
    EXPECT_EQ(j[0]["difference_form"], "");
    EXPECT_EQ(j[1]["status"], "pass");
}

TEST(Cli, VerifyProductDeterministicBySeed)
{
    const CliRun a = run({"verify-product", "--seed", "7", "--samples", "10", "--format", "json"});
    const CliRun b = run({"verify-product", "--seed", "7", "--samples", "10", "--format", "json"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(nlohmann::json::parse(a.out)[0]["data"]["samples"]["seed"], 7);
}

TEST(Cli, VerifyProductMutationFails)
{
    const CliRun r = run({"verify-product", "--mutate", "product-sign"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("collar volume identity"), std::string::npos);
    EXPECT_NE(r.err.find("difference"), std::string::npos);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"verify-product", "--n", "5"}).code, 2);
    EXPECT_EQ(run({"verify-bw", "--sign", "zero"}).code, 2);
    EXPECT_EQ(run({"verify-sum", "--format", "csv"}).code, 2);
    EXPECT_EQ(run({"verify-sum", "--mutate", "everything"}).code, 2);
    EXPECT_EQ(run({"no-such-command"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"chern", "--max-d", "1"}).code, 2);
    EXPECT_EQ(run({"verify-bw", "--r-min", "0.1"}).code, 2);
}

TEST(Cli, Help)
{
    const CliRun r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify-product"), std::string::npos);
}

TEST(Cli, VerifyBw)
{
    const CliRun neg = run({"verify-bw", "--sign", "neg"});
    EXPECT_EQ(neg.code, 0) << neg.err;
    EXPECT_NE(neg.out.find("outward"), std::string::npos);
    const CliRun pos = run({"verify-bw", "--sign", "pos"});
    EXPECT_EQ(pos.code, 1);
    EXPECT_NE(pos.out.find("-1/2 (inward)"), std::string::npos);
    EXPECT_EQ(run({"verify-bw", "--sign", "pos", "--r-max", "1.4"}).code, 0);
    EXPECT_EQ(run({"verify-bw", "--sign", "neg", "--mutate", "bw-radial"}).code, 1);
}

TEST(Cli, VerifySumGolden)
{
    const CliRun r = run({"verify-sum", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, golden("verify_sum.json"));
    EXPECT_EQ(nlohmann::json::parse(r.out).size(), 4u);
}

TEST(Cli, VerifySumMutations)
{
    const CliRun psi = run({"verify-sum", "--mutate", "psi-sign"});
    EXPECT_EQ(psi.code, 1);
    EXPECT_NE(psi.err.find("psi^* alpha_{pi/2} = alpha_{pi/2}"), std::string::npos);
    const CliRun a0 = run({"verify-sum", "--mutate", "alpha0"});
    EXPECT_EQ(a0.code, 1);
    EXPECT_NE(a0.err.find("alpha0 in (v1, v2)"), std::string::npos);
}

TEST(Cli, InterpolantsTsv)
{
    const auto path = temp_file("interp.tsv");
    const CliRun r = run({"interpolants", "--epsilon", "0.25", "--grid", "2001", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("margin"), std::string::npos);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "t\tf\tg\twronskian");
    std::vector<std::array<double, 4>> rows;
    std::array<double, 4> row;
    while (in >> row[0] >> row[1] >> row[2] >> row[3]) rows.push_back(row);
    ASSERT_EQ(rows.size(), 2001u);
    EXPECT_EQ(rows[200][0], -1.0);
    EXPECT_EQ(rows[200][1], 1.0);
    EXPECT_EQ(rows[200][2], 1.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& mirror = rows[rows.size() - 1 - i];
        EXPECT_EQ(rows[i][0], -mirror[0]);
        EXPECT_EQ(rows[i][1], mirror[1]);
        EXPECT_EQ(rows[i][2], -mirror[2]);
        EXPECT_GT(rows[i][3], 0.0);
    }
    std::filesystem::remove(path);
}

TEST(Cli, InterpolantsErrors)
{
    const auto path = temp_file("interp_err.tsv");
    EXPECT_EQ(run({"interpolants", "--epsilon", "1.5", "--out", path.string()}).code, 2);
    EXPECT_EQ(run({"interpolants"}).code, 2);
    const CliRun coarse = run({"interpolants", "--grid", "3", "--out", path.string()});
    EXPECT_EQ(coarse.code, 1);
    EXPECT_NE(coarse.err.find("at t ="), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, ChernGolden)
{
    const CliRun r = run({"chern", "--max-d", "4"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, golden("chern_max_d_4.csv"));
}

TEST(Cli, ChernFifty)
{
    const CliRun r = run({"chern", "--max-d", "50", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rows"].size(), 49u);
    EXPECT_TRUE(j["gaps"].empty());
    EXPECT_EQ(j["odd_classes"].back(), 97);
}

TEST(Cli, OutFile)
{
    const auto path = temp_file("chern.csv");
    const CliRun r = run({"chern", "--max-d", "4", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), golden("chern_max_d_4.csv"));
    std::filesystem::remove(path);
}

TEST(Cli, LensAndSurgeryGolden)
{
    EXPECT_EQ(run({"lens", "--format", "json"}).out, golden("lens.jsonl"));
    EXPECT_EQ(run({"surgery", "--genus", "3", "--stabs", "20", "--format", "json"}).out, golden("surgery_g3_s20.jsonl"));
}
