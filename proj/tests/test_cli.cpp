/*
Copyright 2026 The gvmhom Authors

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

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gvm/cli.hpp"

using namespace gvm;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, OrbitDotSucceeds) {
    const auto r = run({"orbit", "--k", "2", "--n", "7", "--emit", "dot"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("digraph orbit {", 0), 0U);
}

TEST(Cli, EvenNIsUsageError) {
    const auto r = run({"orbit", "--k", "2", "--n", "4"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("odd"), std::string::npos);
}

TEST(Cli, MissingArgumentsAreUsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"orbit", "--k", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"orbit", "--k", "2", "--n", "7", "--emit", "svg"}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--grid", "2:x"}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("orbit"), std::string::npos);
}

TEST(Cli, RankAboveLimitRefused) {
    EXPECT_EQ(run({"orbit", "--k", "4", "--n", "9"}).code, kExitUsage);
    EXPECT_EQ(run({"orbit", "--k", "2", "--n", "7", "--max-rank", "4"}).code, kExitUsage);
    EXPECT_EQ(run({"hasse", "--k", "3", "--n", "7"}).code, kExitUsage);
}

TEST(Cli, HalfRankWarnsButSucceeds) {
    const auto r = run({"orbit", "--k", "2", "--n", "5", "--emit", "json"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, OrbitWithOracle) {
    const auto r = run({"orbit", "--k", "3", "--n", "5", "--oracle"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST(Cli, SkAndHasse) {
    const auto sk = run({"sk", "--k", "3", "--n", "3", "--emit", "dot"});
    EXPECT_EQ(sk.code, kExitOk);
    EXPECT_EQ(sk.out.rfind("digraph sk {", 0), 0U);
    const auto hasse = run({"hasse", "--k", "2", "--n", "5", "--emit", "json", "--oracle"});
    EXPECT_EQ(hasse.code, kExitOk) << hasse.err;
    EXPECT_NE(hasse.out.find("\"arrows\""), std::string::npos);
}

TEST(Cli, VerifyDefaultGridWithOracle) {
    const auto r = run({"verify", "--grid", "default", "--oracle"});
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyExtendedGridFlagsHalfRank) {
    const auto r = run({"verify", "--grid", "extended"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("FLAG"), std::string::npos);
}

TEST(Cli, WritesOutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "gvmhom_cli_test.dot";
    const auto r = run({"orbit", "--k", "2", "--n", "7", "--emit", "dot", "-o", path.string()});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(read_file(path), read_file(std::filesystem::path(GOLDEN_DIR) / "orbit_k2_n7.dot"));
    std::filesystem::remove(path);
}

TEST(Golden, OrbitTwoSeven) {
    EXPECT_EQ(run({"orbit", "--k", "2", "--n", "7", "--emit", "dot"}).out,
              read_file(std::filesystem::path(GOLDEN_DIR) / "orbit_k2_n7.dot"));
    EXPECT_EQ(run({"orbit", "--k", "2", "--n", "7", "--emit", "json"}).out,
              read_file(std::filesystem::path(GOLDEN_DIR) / "orbit_k2_n7.json"));
}

TEST(Golden, OrbitHalfRank) {
    EXPECT_EQ(run({"orbit", "--k", "2", "--n", "5", "--emit", "dot"}).out,
              read_file(std::filesystem::path(GOLDEN_DIR) / "orbit_k2_n5.dot"));
}

TEST(Golden, SkThree) {
    EXPECT_EQ(run({"sk", "--k", "3", "--n", "7", "--emit", "dot"}).out,
              read_file(std::filesystem::path(GOLDEN_DIR) / "sk_k3_n7.dot"));
}

TEST(Golden, HasseOneThree) {
    EXPECT_EQ(run({"hasse", "--k", "1", "--n", "3", "--emit", "dot"}).out,
              read_file(std::filesystem::path(GOLDEN_DIR) / "hasse_k1_n3.dot"));
}

TEST(Binary, ExitCodesFromProcess) {
    const std::string exe = GVMHOM_EXE;
    auto status = [&](const std::string& args) {
        const std::string cmd = "\"" + exe + "\" " + args + " >/dev/null 2>&1";
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("orbit --k 2 --n 7 --emit dot"), 0);
    EXPECT_EQ(status("orbit --k 2 --n 4"), 2);
}

TEST(Binary, StdoutMatchesGolden) {
    const std::string cmd = "\"" + std::string(GVMHOM_EXE) + "\" orbit --k 2 --n 7 --emit dot";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) {
        out.append(buf, got);
    }
    EXPECT_EQ(pclose(pipe), 0);
    EXPECT_EQ(out, read_file(std::filesystem::path(GOLDEN_DIR) / "orbit_k2_n7.dot"));
}
