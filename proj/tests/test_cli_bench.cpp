/*
 * Copyright (C) 2026 The ecc160 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ecc160/cli.hpp"

#include <gtest/gtest.h>
#include <openssl/sha.h>

#include <filesystem>

using namespace ecc160;
namespace fs = std::filesystem;

TEST(Sha1, Vectors) {
    EXPECT_EQ(bytes_to_hex(sha1_digest("")), "da39a3ee5e6b4b0d3255bfef95601890afd80709");
    EXPECT_EQ(bytes_to_hex(sha1_digest("abc")), "a9993e364706816aba3e25717850c26c9cd0d89d");
    Sha1 h;
    const std::string chunk(1000, 'a');
    for (int i = 0; i < 1000; ++i)
        h.update(chunk);
    EXPECT_EQ(bytes_to_hex(h.finish()), "34aa973cd4c4daa4f61eeb2bdbad27316534016f");
    EXPECT_EQ(bytes_to_hex(sha1_digest("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq")),
              "84983e441c3bd26ebaae4aa1f95129e5e54670f1");
}

TEST(Sha1, MatchesOpenSsl) {
    std::mt19937_64 rng(1);
    for (std::size_t len = 0; len < 300; ++len) {
        std::vector<std::uint8_t> msg(len);
        for (auto& b : msg)
            b = static_cast<std::uint8_t>(rng());
        unsigned char expect[SHA_DIGEST_LENGTH];
        SHA1(msg.data(), msg.size(), expect);
        auto got = sha1_digest(msg);
        ASSERT_TRUE(std::equal(got.begin(), got.end(), expect)) << len;

        // split the same message into two updates
        Sha1 h;
        h.update(std::span(msg).first(len / 3));
        h.update(std::span(msg).subspan(len / 3));
        ASSERT_EQ(h.finish(), got);
    }
}

TEST(CostModel, Table) {
    CostTable t;
    EXPECT_EQ(t.field_add, 315u);
    EXPECT_EQ(t.field_sub, 357u);
    EXPECT_EQ(t.mont_mul, 2860u);
    EXPECT_EQ(t.point_add, 33049u);
    EXPECT_EQ(t.point_double, 40737u);
    EXPECT_EQ(t.scalar_mult, 10148863u);
    EXPECT_DOUBLE_EQ(t.clock_hz, 160e6);
    EXPECT_FALSE(t.cycles_for("to_mont"));
    EXPECT_EQ(t.cycles_for("mont_mul"), 2860u);
}

TEST(CostModel, PredictScalarCycles) {
    CostTable t;
    EXPECT_EQ(predict_scalar_cycles(t, 160, 80), 9161840u);
    EXPECT_EQ(predict_scalar_cycles(t, 0, 0), 0u);
    EXPECT_EQ(predict_scalar_cycles(t, 1, 1), 73786u);
    EXPECT_THROW(predict_scalar_cycles(t, 3, 4), Error);
    const double err = relative_error(9161840.0, 10148863.0);
    EXPECT_NEAR(err, 0.0973, 1e-4);
    EXPECT_NEAR(t.seconds(9161840) * 1e3, 57.26, 0.01);
    EXPECT_NEAR(t.seconds(t.scalar_mult) * 1e3, 63.43, 0.01);
}

TEST(CostModel, FieldPricing) {
    CostTable t;
    OpCounters c;
    c.mont_muls = kDoubleCost.mont_muls;
    c.field_adds = kDoubleCost.field_adds;
    c.field_subs = kDoubleCost.field_subs;
    EXPECT_EQ(predict_field_cycles(t, c), 10u * 2860 + 9u * 315 + 4u * 357);
}

TEST(Bench, ScalarMultRow) {
    const auto& c = registry_get("secp160r1");
    BenchOptions opt;
    opt.cross_check = true;
    BenchReport r = bench_run(c, "scalar_mult", 8, opt);
    EXPECT_EQ(r.iters, 8u);
    EXPECT_EQ(r.oracle_mismatches, 0u);
    EXPECT_EQ(r.paper_cycles, 10148863u);
    ASSERT_TRUE(r.predicted_paper_cycles);
    ASSERT_TRUE(r.rel_error);
    EXPECT_LE(*r.rel_error, 0.20);
    EXPECT_GT(r.ns_per_op, 0.0);
    // the ladder starts at infinity, so the first double and add are free;
    // the final conversion costs 4 products besides its inversion
    EXPECT_EQ(r.counters.mont_muls, (r.counters.point_doubles - 8) * 10 + (r.counters.point_adds - 8) * 16 + 8 * 4);
    EXPECT_EQ(r.counters.inversions, 8u);
    std::string row = bench_csv_row(r);
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 6);
    EXPECT_TRUE(row.starts_with("scalar_mult,8,"));
}

TEST(Bench, DeterministicUnderSeed) {
    const auto& c = registry_get("secp160r1");
    for (auto op : kBenchOps) {
        BenchReport a = bench_run(c, op, 4), b = bench_run(c, op, 4);
        EXPECT_EQ(a.counters, b.counters) << op;
        EXPECT_EQ(a.predicted_paper_cycles, b.predicted_paper_cycles) << op;
    }
}

TEST(Bench, PointOpsPricedFromCounters) {
    const auto& c = registry_get("secp160r1");
    BenchReport d = bench_run(c, "point_double", 10);
    BenchReport a = bench_run(c, "point_add", 10);
    EXPECT_EQ(d.counters.mont_muls, 100u);
    EXPECT_EQ(a.counters.mont_muls, 160u);
    EXPECT_EQ(d.predicted_paper_cycles, 10u * 2860 + 9u * 315 + 4u * 357);
    EXPECT_EQ(a.predicted_paper_cycles, 16u * 2860 + 1u * 315 + 6u * 357);
    BenchReport m = bench_run(c, "to_mont", 3);
    EXPECT_FALSE(m.predicted_paper_cycles);
    EXPECT_EQ(bench_csv_row(m).substr(bench_csv_row(m).size() - 3), ",,,");
}

TEST(Bench, UnknownOp) {
    try {
        bench_run(registry_get("toy-e17"), "nope", 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unknown_op);
    }
}

TEST(Bench, Header) {
    EXPECT_EQ(bench_csv_header(), "op,iters,ns_per_op,mont_muls_per_op,predicted_paper_cycles,paper_cycles,rel_error");
}

// --- command line ----------------------------------------------------

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("ecc160_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& body) const {
        std::ofstream(path(name), std::ios::binary) << body;
    }

    int run(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return cli::cli_main(args, out_, err_);
    }
    std::string out() const {
        std::string s = out_.str();
        while (!s.empty() && s.back() == '\n')
            s.pop_back();
        return s;
    }

    fs::path dir_;
    std::ostringstream out_, err_;
};

}  // namespace

TEST_F(Cli, VerifyToyVector) {
    write("m", std::string(1, '\x06'));
    EXPECT_EQ(run({"verify", "--curve", "toy-e17", "--pub", "040603", "--msg", path("m"), "--sig", "0a0f", "--digest",
                   "identity"}),
              0);
    EXPECT_EQ(out(), "OK");
    write("m7", std::string(1, '\x07'));
    EXPECT_EQ(run({"verify", "--curve", "toy-e17", "--pub", "040603", "--msg", path("m7"), "--sig", "0a0f", "--digest",
                   "identity"}),
              1);
    EXPECT_EQ(out(), "FAIL");
}

TEST_F(Cli, SignWithExplicitNonce) {
    write("k", "d=02\nQ=040603\n");
    write("m", std::string(1, '\x06'));
    EXPECT_EQ(run({"sign", "--curve", "toy-e17", "--priv", path("k"), "--msg", path("m"), "--nonce", "03", "--digest",
                   "identity"}),
              0);
    EXPECT_EQ(out(), "0a0f");
}

TEST_F(Cli, KeygenSignVerify) {
    ASSERT_EQ(run({"keygen", "--curve", "secp160r1", "--seed", "7", "--out", path("alice")}), 0);
    const std::string pub = out();
    EXPECT_EQ(pub.size(), 82u);
    EXPECT_TRUE(pub.starts_with("04"));
    write("m", "hello world");
    ASSERT_EQ(run({"sign", "--curve", "secp160r1", "--priv", path("alice"), "--msg", path("m"), "--seed", "1"}), 0);
    const std::string sig = out();
    EXPECT_EQ(sig.size(), 84u);
    EXPECT_EQ(run({"verify", "--curve", "secp160r1", "--pub", pub, "--msg", path("m"), "--sig", sig}), 0);
    write("m2", "hello worle");
    EXPECT_EQ(run({"verify", "--curve", "secp160r1", "--pub", pub, "--msg", path("m2"), "--sig", sig}), 1);
    // same seed, same key
    ASSERT_EQ(run({"keygen", "--curve", "secp160r1", "--seed", "7", "--out", path("again")}), 0);
    EXPECT_EQ(out(), pub);
}

TEST_F(Cli, EcdhAndMqv) {
    write("a", "d=02\nQ=040603\n");
    write("b", "d=03\nQ=040a06\n");
    ASSERT_EQ(run({"ecdh", "--curve", "toy-e17", "--priv", path("a"), "--peer", "040a06"}), 0);
    EXPECT_EQ(out(), "10");
    ASSERT_EQ(run({"ecdh", "--curve", "toy-e17", "--priv", path("b"), "--peer", "040603"}), 0);
    EXPECT_EQ(out(), "10");
    EXPECT_EQ(run({"ecdh", "--curve", "toy-e17", "--priv", path("a"), "--peer", "040502"}), 1);
    EXPECT_EQ(run({"ecdh", "--curve", "toy-e17", "--priv", path("a"), "--peer", "00"}), 1);

    // Alice (2, 3), Bob (4, 5)
    KeyPair as = keypair_from_private(registry_get("toy-e17"), Nat::from_u64(2, 1, 16));
    KeyPair bs = keypair_from_private(registry_get("toy-e17"), Nat::from_u64(4, 1, 16));
    KeyPair be = keypair_from_private(registry_get("toy-e17"), Nat::from_u64(5, 1, 16));
    write("bs", cli::keyfile_text(registry_get("toy-e17"), bs));
    write("be", cli::keyfile_text(registry_get("toy-e17"), be));
    ASSERT_EQ(run({"mqv", "--curve", "toy-e17", "--static", path("a"), "--eph", path("b"), "--peer-static",
                   point_to_hex(registry_get("toy-e17"), bs.Q), "--peer-eph", point_to_hex(registry_get("toy-e17"), be.Q)}),
              0);
    const std::string alice = out();
    ASSERT_EQ(run({"mqv", "--curve", "toy-e17", "--static", path("bs"), "--eph", path("be"), "--peer-static",
                   point_to_hex(registry_get("toy-e17"), as.Q), "--peer-eph", "040a06"}),
              0);
    EXPECT_EQ(out(), alice);
    EXPECT_EQ(alice, "00");
}

TEST_F(Cli, KeyFileMismatch) {
    write("bad", "d=02\nQ=040a06\n");
    write("m", "x");
    EXPECT_EQ(run({"sign", "--curve", "toy-e17", "--priv", path("bad"), "--msg", path("m")}), 1);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({"validate"}), 2);
    EXPECT_EQ(run({"validate", "--curve", "nosuch"}), 2);
    EXPECT_EQ(run({"bench", "--curve", "toy-e17", "--op", "nope"}), 2);
    EXPECT_EQ(run({}), 2);
    EXPECT_EQ(run({"frobnicate"}), 2);
    write("m", "x");
    EXPECT_EQ(run({"verify", "--curve", "toy-e17", "--pub", "040603", "--msg", path("m"), "--sig", "0a0f", "--digest",
                   "md5"}),
              2);
}

TEST_F(Cli, Validate) {
    EXPECT_EQ(run({"validate", "--curve", "toy-e17"}), 0);
    EXPECT_NE(out().find("p=11\n"), std::string::npos);
    for (auto name : {kCheckPrimeP, kCheckNonsingular, kCheckGOnCurve, kCheckOrder, kCheckPrimeN})
        EXPECT_NE(out().find("PASS " + std::string(name)), std::string::npos) << name;
}

TEST_F(Cli, BenchCsv) {
    ASSERT_EQ(run({"bench", "--curve", "toy-e17", "--iters", "3", "--csv", path("b.csv"), "--check"}), 0);
    std::istringstream lines(out());
    std::string first, header;
    std::getline(lines, first);
    std::getline(lines, header);
    EXPECT_TRUE(first.starts_with("# toy-e17: jacobian double = 10 mont_mul"));
    EXPECT_EQ(header, bench_csv_header());
    int rows = 0;
    for (std::string l; std::getline(lines, l);)
        ++rows;
    EXPECT_EQ(rows, static_cast<int>(kBenchOps.size()));
    std::string csv = cli::read_file(path("b.csv"));
    EXPECT_TRUE(csv.starts_with(bench_csv_header() + "\n"));
}
