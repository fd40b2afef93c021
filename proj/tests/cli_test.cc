// Copyright 2026 The symf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "symf/hadamard.h"
#include "symf/matrix_io.h"

using namespace symf;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "symf");
    std::vector<const char *> argv;
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) {
    return std::string(SYMF_TEST_DATA) + "/" + name;
}

std::string temp(const std::string &name) {
    return ::testing::TempDir() + "/symf_cli_" + name;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, VerifyEtf) {
    CliRun r = run({"verify", "etf", data("conf_c.txt"), "--dim", "4"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("mu=1 c=1.7320508"), std::string::npos) << r.out;

    r = run({"verify", "etf", data("conf_k.txt"), "--dim", "2"});
    EXPECT_EQ(r.code, kExitOk);
    r = run({"verify", "etf", data("conf_k.txt"), "--dim", "4"});
    EXPECT_EQ(r.code, kExitDomainFailure);
    r = run({"verify", "etf", data("conf_c.txt"), "--dim", "3"});
    EXPECT_EQ(r.code, kExitUsage);
    r = run({"verify", "etf", data("conf_c.txt")});
    EXPECT_EQ(r.code, kExitUsage);
}

TEST(Cli, VerifyOtherKinds) {
    EXPECT_EQ(run({"verify", "hadamard", data("ones4.txt")}).code, kExitDomainFailure);
    EXPECT_EQ(run({"verify", "conference", data("conf_c.txt")}).code, kExitOk);
    EXPECT_EQ(run({"verify", "conference", data("conf_k.txt")}).code, kExitDomainFailure);
    EXPECT_EQ(run({"verify", "doubly-regular", data("conf_k.txt")}).code, kExitOk);
    EXPECT_EQ(run({"verify", "frame", data("basic_phi.txt")}).code, kExitOk);
    CliRun r = run({"verify", "tight", data("tight_g.txt"), "--dim", "2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("c=1"), std::string::npos);
    EXPECT_EQ(run({"verify", "bogus", data("conf_c.txt")}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "etf", "/nonexistent.txt", "--dim", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "etf", data("conf_c.txt"), "--dim", "4", "--tol", "2"}).code, kExitUsage);
}

TEST(Cli, FactorWritesFrame) {
    std::string out = temp("factor.txt");
    CliRun r = run({"factor", data("tight_g.txt"), "--out", out});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    MatrixFile f = read_matrix_file(out);
    EXPECT_EQ(f.rows(), 2);
    EXPECT_EQ(f.cols(), 3);
    EXPECT_NE(r.out.find("residual="), std::string::npos);

    r = run({"factor", data("conf_k.txt"), "--out", out});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(read_matrix_file(out).rows(), 2);
    EXPECT_EQ(run({"factor", data("zero3.txt")}).code, kExitDomainFailure);
    EXPECT_EQ(run({"factor", data("conf_k.txt"), "--dim", "4"}).code, kExitDomainFailure);
}

TEST(Cli, FactorWithoutOutWritesMatrixToStdout) {
    CliRun r = run({"factor", data("tight_g.txt")});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out.rfind("symf real 2 3", 0), 0u);
    EXPECT_NE(r.err.find("residual="), std::string::npos);
}

TEST(Cli, ConvertPairs) {
    std::string h4 = temp("h4.txt");
    ASSERT_EQ(run({"convert", "--from", "etf-core", "--to", "hadamard", data("conf_k.txt"), "--out", h4}).code, kExitOk);
    EXPECT_TRUE(is_skew_hadamard(read_matrix_file(h4).as_int()));

    std::string h8 = temp("h8.txt");
    ASSERT_EQ(run({"gen", "--hadamard-order", "8", "--out", h8}).code, kExitOk);
    std::string core = temp("core7.txt");
    CliRun r = run({"convert", "--from", "hadamard", "--to", "etf-core", h8, "--out", core});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("d=6 n=7"), std::string::npos);

    std::string sig = temp("sig.txt");
    ASSERT_EQ(run({"convert", "--from", "etf-square", "--to", "complex-signature", data("conf_c.txt"), "--out", sig}).code,
              kExitOk);
    MatrixFile q = read_matrix_file(sig);
    ASSERT_EQ(q.kind, MatrixFile::Kind::Complex);
    for (Eigen::Index k = 0; k < q.complex.size(); ++k) {
        EXPECT_EQ(q.complex(k).real(), 0.0);
        EXPECT_TRUE(q.complex(k).imag() == 0.0 || std::abs(q.complex(k).imag()) == 1.0);
    }
    EXPECT_EQ(run({"verify", "signature", sig, "--dim", "4"}).code, kExitOk);

    EXPECT_EQ(run({"convert", "--from", "hadamard", "--to", "hadamard", h8}).code, kExitUsage);
    EXPECT_EQ(run({"convert", "--from", "etf-square", "--to", "hadamard", data("conf_k.txt")}).code,
              kExitDomainFailure);
}

TEST(Cli, DoubleAndDiamonds) {
    std::string h4 = temp("d_h4.txt"), h8 = temp("d_h8.txt"), core = temp("d_core.txt");
    ASSERT_EQ(run({"gen", "--hadamard-order", "4", "--out", h4}).code, kExitOk);
    ASSERT_EQ(run({"double", "--level", "hadamard", h4, "--out", h8}).code, kExitOk);
    EXPECT_EQ(read_matrix_file(h8).rows(), 8);
    ASSERT_EQ(run({"convert", "--from", "hadamard", "--to", "etf-core", h8, "--out", core}).code, kExitOk);

    CliRun r = run({"diamonds", core});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "delta=14 bound=14 saturated=true\n");
    EXPECT_EQ(run({"diamonds", core, "--method", "brute"}).out, "delta=14 bound=14 saturated=true\n");
    EXPECT_EQ(run({"diamonds", data("conf_c.txt"), "--method", "formula"}).out, "delta=1\n");

    std::string frame = temp("frame.txt"), doubled = temp("doubled.txt");
    std::ofstream(frame) << "symf real 2 2\n1 0\n0 1\n";
    ASSERT_EQ(run({"double", "--level", "frame", frame, "--out", doubled}).code, kExitOk);
    EXPECT_EQ(read_matrix_file(doubled).rows(), 4);
    EXPECT_EQ(run({"double", "--level", "frame", data("basic_phi.txt")}).code, kExitDomainFailure);
}

TEST(Cli, SearchAndGen) {
    std::string out = temp("search8.txt");
    CliRun r = run({"search", "--mode", "discrete", "--n", "8", "--seed", "7", "--restarts", "8", "--out", out});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(is_skew_conference(read_matrix_file(out).as_int()));

    r = run({"search", "--mode", "continuous", "--n", "3", "--dim", "2", "--seed", "1", "--restarts", "4", "--out", out});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("success=true"), std::string::npos);
    EXPECT_EQ(run({"search", "--mode", "continuous", "--n", "5", "--dim", "4", "--restarts", "2"}).code,
              kExitDomainFailure);
    EXPECT_EQ(run({"search", "--mode", "continuous", "--n", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "--mode", "discrete", "--n", "8", "--restarts", "0"}).code, kExitUsage);

    EXPECT_EQ(run({"gen", "--hadamard-order", "12"}).code, kExitDomainFailure);
    r = run({"gen", "--hadamard-order", "2"});
    EXPECT_EQ(r.out, "symf int 2 2\n1 1\n-1 1\n");
}

TEST(Cli, WritesAreReReadable) {
    std::string a = temp("rt_a.txt"), b = temp("rt_b.txt");
    ASSERT_EQ(run({"factor", data("tight_g.txt"), "--out", a}).code, kExitOk);
    write_matrix_file(b, read_matrix_file(a));
    EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}
