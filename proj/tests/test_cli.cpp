// Copyright 2026 The sparsekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "sparsekit/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const fs::path log = fs::temp_directory_path() / "sparsekit_cli_test.log";
  const std::string cmd =
      std::string("\"") + SPARSEKIT_CLI_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(log);
  std::ostringstream s;
  s << in.rdbuf();
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, s.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("sparsekit_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, HelpExitsZero) {
  const auto r = cli("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("phase"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(cli("solve --bogus 3").code, 1);
  EXPECT_EQ(cli("solve --algo lars").code, 1);
  EXPECT_EQ(cli("solve --n notanumber").code, 1);
  EXPECT_EQ(cli("frobnicate").code, 1);
}

TEST(Cli, RuntimeErrorsExitTwo) {
  const auto r = cli("solve --n 10 --l 20 --k 30");
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_NE(r.out.find("error:"), std::string::npos);
  EXPECT_EQ(cli("diag --matrix /nonexistent/m.csv").code, 2);
}

TEST(Cli, SolveWritesCoefficientsWithConfigEcho) {
  const auto dir = scratch("solve");
  const auto path = (dir / "coef.csv").string();
  const auto r = cli("solve --algo omp --n 20 --l 50 --k 3 --seed 9 --out " + path);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\"success\": true"), std::string::npos) << r.out;
  const auto t = sparsekit::read_csv(path);
  EXPECT_EQ(t.rows.size(), 50u);
  bool seed = false, algo = false;
  for (const auto& [k, v] : t.meta) {
    seed |= k == "seed" && v == "9";
    algo |= k == "algo" && v == "omp";
  }
  EXPECT_TRUE(seed);
  EXPECT_TRUE(algo);
}

TEST(Cli, DiagPrintsSparkAndCoherence) {
  const auto r = cli("diag --ensemble bernoulli --n 6 --l 10 --seed 4 --rip 2");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("coherence="), std::string::npos);
  EXPECT_NE(r.out.find("welch_bound="), std::string::npos);
  EXPECT_NE(r.out.find("spark="), std::string::npos);
  EXPECT_NE(r.out.find("rip_delta_2="), std::string::npos);
}
