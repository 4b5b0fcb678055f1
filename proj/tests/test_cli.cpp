#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hfold/cli.hpp"
#include "hfold/corpus.hpp"
#include "hfold/io.hpp"

using namespace hfold;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST(Cli, StructureJsonMatchesFixture)
{
    const Result r = run_cli({"structure", "--set", "0,2,3", "--t", "1", "--format", "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = io::Json::parse(r.out);
    EXPECT_EQ(j["c_t"], 2);
    EXPECT_EQ(j["C_t"], io::Json::array({0}));
    EXPECT_EQ(j["d_t"], 0);
    EXPECT_EQ(j["D_t"], io::Json::array());
    EXPECT_EQ(j["h_t"], 7);
    EXPECT_EQ(j["c_prime_t"], 4);
    EXPECT_EQ(j["d_prime_t"], 6);
    EXPECT_EQ(j["verified_h"], io::Json::array({7, 11}));
    for (const char* key : {"set", "t", "h_t", "c_t", "d_t", "C_t", "D_t", "c_prime_t", "d_prime_t", "verified_h"})
        EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cli, FrobeniusText)
{
    const Result r = run_cli({"frobenius", "--set", "0,2,3", "--t", "2"});
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("FN_1 = 1, FN_2 = 7\n"), std::string::npos) << r.out;
}

TEST(Cli, FrobeniusOfRawSetEchoesNormalization)
{
    const Result r = run_cli({"frobenius", "--set", "13, 4, 10, 4", "--t", "2"});
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("normalized set: {0,2,3} (offset 4, scale 3)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("FN_1 = 1, FN_2 = 7"), std::string::npos);
    EXPECT_NE(r.err.find("removed 1 duplicate"), std::string::npos);
}

TEST(Cli, PairWithLargeThresholdRendersInsteadOfFailing)
{
    const Result r = run_cli({"frobenius", "--set", "0,1", "--t", "2"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("FN_1 = -1, FN_2 = none"), std::string::npos) << r.out;

    const Result s = run_cli({"structure", "--set", "3,5", "--t", "2", "--format", "json"});
    ASSERT_EQ(s.status, 0);
    const auto j = io::Json::parse(s.out);
    EXPECT_TRUE(j["c_t"].is_null());
    EXPECT_EQ(j["empty_for_all_h"], true);
}

TEST(Cli, VerifySweepSucceeds)
{
    const Result r = run_cli({"verify", "--seed", "42", "--k-max", "3", "--a-max", "8", "--t-max", "2", "--count", "8"});
    EXPECT_EQ(r.status, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_NE(r.out.find("fringe_decomposition: "), std::string::npos);
    EXPECT_EQ(r.out.find(" 0 checks"), std::string::npos) << r.out;
}

TEST(Cli, ReprFormats)
{
    const Result csv = run_cli({"repr", "--set", "0,1,2", "--h", "2", "--cap", "exact", "--format", "csv"});
    ASSERT_EQ(csv.status, 0);
    EXPECT_EQ(csv.out, "n,count\n0,1\n1,1\n2,2\n3,1\n4,1\n");

    const Result capped = run_cli({"repr", "--set", "0,1,2", "--h", "2", "--cap", "1"});
    ASSERT_EQ(capped.status, 0);
    EXPECT_NE(capped.out.find("\n2 1+\n"), std::string::npos) << capped.out;

    const Result capped_csv = run_cli({"repr", "--set", "0,1,2", "--h", "2", "--cap", "1", "--format", "csv"});
    EXPECT_EQ(capped_csv.out, "n,count\n0,1\n1,1\n2,1\n3,1\n4,1\n");

    const Result j = run_cli({"repr", "--set", "0,1,2", "--h", "2", "--cap", "exact", "--format", "json"});
    EXPECT_EQ(io::Json::parse(j.out)["counts"], io::Json::array({1, 1, 2, 1, 1}));
}

TEST(Cli, SumsetDenormalizes)
{
    const Result r = run_cli({"sumset", "--set", "4,10,13", "--h", "2", "--format", "json"});
    ASSERT_EQ(r.status, 0);
    const auto j = io::Json::parse(r.out);
    EXPECT_EQ(j["members"], io::Json::array({0, 2, 3, 4, 5, 6}));
    EXPECT_EQ(j["original"], io::Json::array({8, 14, 17, 20, 23, 26}));
}

TEST(Cli, DualAndWitness)
{
    const Result d = run_cli({"dual", "--set", "0,2,3", "--format", "json"});
    ASSERT_EQ(d.status, 0);
    const auto j = io::Json::parse(d.out);
    EXPECT_EQ(j["dual_set"], io::Json::array({0, 1, 3}));
    EXPECT_EQ(j["dual_fringe"]["d_t"], 2);
    EXPECT_EQ(j["swap_matches_direct_extraction"], true);

    const Result w = run_cli({"witness", "--set", "0,2,3", "--t", "1", "--h", "4", "--n", "4", "--format", "json"});
    ASSERT_EQ(w.status, 0);
    EXPECT_EQ(io::Json::parse(w.out)["witnesses"][0]["multiplicities"], io::Json::array({2, 0}));
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run_cli({}).status, 2);
    EXPECT_EQ(run_cli({"bogus"}).status, 2);
    EXPECT_EQ(run_cli({"structure"}).status, 2);
    EXPECT_EQ(run_cli({"structure", "--set", "0,2,x"}).status, 2);
    EXPECT_EQ(run_cli({"structure", "--set", "5"}).status, 2);
    EXPECT_EQ(run_cli({"repr", "--set", "0,2,3", "--h", "2", "--cap", "zero"}).status, 2);
    EXPECT_EQ(run_cli({"sumset", "--set", "0,2,3", "--h", "2", "--format", "xml"}).status, 2);
    EXPECT_EQ(run_cli({"sumset", "--set", "0,2,3", "--h", "2", "--t", "0"}).status, 2);
    EXPECT_EQ(run_cli({"witness", "--set", "0,2,3", "--h", "7", "--n", "3"}).status, 2);

    const Result big = run_cli({"sumset", "--set", "0,1,1000", "--h", "3000000"});
    EXPECT_EQ(big.status, 2);
    EXPECT_NE(big.err.find("2^31"), std::string::npos);
}

TEST(Cli, DeterministicOutput)
{
    const std::vector<std::string> args{"verify", "--seed", "7", "--count", "5", "--k-max", "3", "--a-max", "6",
                                        "--t-max", "2", "--format", "json"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
    const std::vector<std::string> s{"structure", "--set", "0,3,5", "--t", "2", "--format", "json"};
    EXPECT_EQ(run_cli(s).out, run_cli(s).out);
}

TEST(Cli, WritesOutputFile)
{
    const std::string path = ::testing::TempDir() + "hfold_cli_output.json";
    const Result r = run_cli({"structure", "--set", "0,2,3", "--format", "json", "--output", path});
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    EXPECT_EQ(io::Json::parse(in)["c_t"], 2);
    std::remove(path.c_str());
}

TEST(Json, CertificateRoundTrip)
{
    for (const auto& set : generate_corpus({3, 10, 3, 7})) {
        for (std::uint32_t t = 1; t <= 2; ++t) {
            const FringeStructure f = extract_fringes(set, t);
            const StructureCertificate cert{f, f.h_t, f.h_t + 2};
            const io::Json j = io::to_json(cert);
            EXPECT_EQ(io::certificate_from_json(j), cert);
            EXPECT_EQ(io::Json::parse(j.dump()).dump(), j.dump());
        }
    }
    const FringeStructure empty = extract_fringes(NormalizedSet({0, 1}), 2);
    const StructureCertificate cert{empty, 1, 3};
    EXPECT_EQ(io::certificate_from_json(io::to_json(cert)), cert);
    EXPECT_THROW(io::certificate_from_json(io::Json::parse(R"({"set": [0, 2]})")), InvalidSetError);
}

TEST(Corpus, DeterministicAndValid)
{
    const CorpusOptions opts{42, 50, 4, 10};
    const auto a = generate_corpus(opts);
    EXPECT_EQ(a, generate_corpus(opts));
    EXPECT_EQ(a.size(), 50u);
    for (const auto& s : a) {
        EXPECT_GE(s.k(), 2u);
        EXPECT_LE(s.k(), 4u);
        EXPECT_LE(s.a_max(), 10);
    }
    EXPECT_NE(a, generate_corpus({43, 50, 4, 10}));
    // Only {0,1,2}, {0,1,3}, {0,2,3}, {0,1,2,3} exist for a_max = 3.
    EXPECT_EQ(generate_corpus({1, 50, 4, 3}).size(), 4u);
}
