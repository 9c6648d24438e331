#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include <ncsf/io.hpp>
#include <ncsf/products.hpp>

#include "cli_runner.hpp"
#include "golden.hpp"

using nlohmann::json;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        cache = std::filesystem::temp_directory_path() /
                (std::string("ncsf_cli_cache_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::remove_all(cache);
    }
    void TearDown() override { std::filesystem::remove_all(cache); }
    cli::Result run(const std::string& args) { return cli::run(args, cache); }
    std::filesystem::path cache;
};

}  // namespace

TEST_F(Cli, Stat) {
    EXPECT_EQ(run("stat 351274698 sc").out, "1,3,3,2\n");
    EXPECT_EQ(run("stat 123 sc").out, "1,1,1\n");
    EXPECT_EQ(run("stat 1243 octype").out, "1,1,2\n");
    EXPECT_EQ(run("stat 1243 ctype").out, "2,1,1\n");
    EXPECT_EQ(run("stat 132 inv").out, "1\n");
    auto j = json::parse(run("--format json stat 351274698 sc").out);
    EXPECT_EQ(j.at("value"), json({1, 3, 3, 2}));
}

TEST_F(Cli, Table) {
    auto m3 = run("table 3 M");
    EXPECT_EQ(m3.status, 0);
    EXPECT_EQ(m3.out.substr(0, m3.out.find('\n')), "3 12 21 111");
    EXPECT_EQ(run("table 2 U").out, "U_2 = F_2\nU_11 = F_11\n");
    EXPECT_EQ(run("table 1 M").out, "1\n1\n");
}

TEST_F(Cli, GoldenTables) {
    for (const auto& entry : std::filesystem::directory_iterator(NCSF_GOLDEN_DIR)) {
        const auto stem = entry.path().stem().string();
        const auto us = stem.rfind('_');
        const auto which = stem.substr(0, us);
        const auto n = stem.substr(us + 1);
        auto r = run("table " + n + " " + which);
        EXPECT_EQ(r.status, 0) << stem;
        EXPECT_EQ(r.out, golden::slurp(entry.path().filename().string())) << stem;
    }
}

TEST_F(Cli, MatrixJsonRoundTrip) {
    auto j = json::parse(run("--format json table 4 M").out);
    EXPECT_EQ(ncsf::matrix_from_json(j), ncsf::transition_matrix(4));
}

TEST_F(Cli, CacheIsWrittenAndReused) {
    run("table 4 M");
    EXPECT_TRUE(std::filesystem::exists(ncsf::cache_file(cache, 4)));
    auto again = run("table 4 M");
    EXPECT_EQ(again.status, 0);
    EXPECT_TRUE(again.err.empty());
    EXPECT_EQ(again.out, golden::slurp("M_4.txt"));
}

TEST_F(Cli, CorruptCacheWarnsAndRecomputes) {
    std::filesystem::create_directories(cache);
    std::ofstream(ncsf::cache_file(cache, 3)) << "garbage";
    auto r = run("table 3 M");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_EQ(r.out, golden::slurp("M_3.txt"));
}

TEST_F(Cli, NoCache) {
    run("--no-cache table 3 M");
    EXPECT_FALSE(std::filesystem::exists(ncsf::cache_file(cache, 3)));
}

TEST_F(Cli, Product) {
    EXPECT_EQ(run("product 1 1 --basis v").out, "V_2 + V_11\n");
    const auto printed = run("product 2 3,1 --basis vprime");
    EXPECT_EQ(printed.out, run("product 2 3,1 --basis vprime --oracle").out);
    EXPECT_NE(printed.out.find("6 V'_51"), std::string::npos);
    auto j = json::parse(run("--format json product 1,1,2,1 1,1,1 --basis v").out);
    EXPECT_EQ(ncsf::expansion_from_json(j), ncsf::v_product(ncsf::Composition{1, 1, 2, 1}, ncsf::Composition{1, 1, 1}));
}

TEST_F(Cli, QCoeff) {
    EXPECT_EQ(run("qcoeff 2,3,2").out, "q^17 + 3q^16 + 6q^15 + 9q^14 + 11q^13 + 12q^12 + 11q^11 + 9q^10 + 6q^9 + 3q^8 + q^7\n");
    EXPECT_EQ(run("qcoeff 1,1 --variant tilde").out, "1\n");
}

TEST_F(Cli, Classes) {
    auto r = run("classes 9 eq1 --sizes");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find(" 3360\n"), std::string::npos);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "classes 256");
    auto j = json::parse(run("--format json classes 5 mirror").out);
    EXPECT_EQ(j.at("count"), 16);
}

TEST_F(Cli, Insert) {
    EXPECT_EQ(run("insert 532498617 eq1").out, "P: 5(2(6 7 8 9(1)) 3 4)\nQ: 1(2 3(5(8) 6 7 9) 4)\n");
    auto j = json::parse(run("--format json insert 739465281 eq2").out);
    EXPECT_EQ(j.at("P").at("text"), "7(3(2(1) 4 5 6) 8 9)");
}

TEST_F(Cli, Errors) {
    auto bad = run("product 9 x");
    EXPECT_EQ(bad.status, 1);
    EXPECT_TRUE(bad.out.empty());
    EXPECT_NE(bad.err.find("error:"), std::string::npos);
    EXPECT_NE(run("table 9 M").status, 0);
    EXPECT_NE(run("stat 1123 sc").status, 0);
    EXPECT_NE(run("classes 4 eq9").status, 0);
}
