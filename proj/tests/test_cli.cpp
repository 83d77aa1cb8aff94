// Copyright 2026 The jtcsim Authors
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

// Drives the installed binary through the shell.

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

const std::string kCli = JTCSIM_CLI_PATH;
const std::string kConfigs = JTCSIM_CONFIG_DIR;

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" + kCli + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("jtcsim_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(Cli, SimulateReferenceConfig) {
  const fs::path a = dir_ / "a.csv";
  const fs::path b = dir_ / "b.csv";
  ASSERT_EQ(run("simulate --config '" + kConfigs + "/reference.toml' --out '" + a.string() + "'"), 0);
  ASSERT_EQ(run("simulate --config '" + kConfigs + "/reference.toml' --out '" + b.string() + "'"), 0);
  const std::string sa = slurp(a);
  EXPECT_EQ(count_lines(sa), 2002u);
  EXPECT_EQ(sa, slurp(b));
  EXPECT_EQ(sa.substr(0, 5), "t_ns,");
}

TEST_F(Cli, OutputPrecedence) {
  const fs::path env = dir_ / "env.csv";
  const fs::path flag = dir_ / "flag.csv";
  ASSERT_EQ(run("free --steps 4", "JTCSIM_OUT='" + env.string() + "'"), 0);
  EXPECT_TRUE(fs::exists(env));
  ASSERT_EQ(run("free --steps 4 --out '" + flag.string() + "'", "JTCSIM_OUT='" + (dir_ / "no.csv").string() + "'"),
            0);
  EXPECT_TRUE(fs::exists(flag));
  EXPECT_FALSE(fs::exists(dir_ / "no.csv"));
  EXPECT_EQ(count_lines(slurp(flag)), 6u);
}

TEST_F(Cli, ReinsertWritesRows) {
  const fs::path out = dir_ / "r.csv";
  ASSERT_EQ(run("reinsert --scenario psi+ --frame rot --t-end 2 --steps 4 --out '" + out.string() + "'"), 0);
  const std::string s = slurp(out);
  EXPECT_EQ(s.substr(0, s.find('\n')), "t_ns,branch,p_branch,pt_pp,pt_mp,pt_pm,pt_mm,F2_pp,F2_mp,F2_pm,F2_mm,identity_residual");
  EXPECT_EQ(count_lines(s), 1u + 1u + 4u * 4u);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("simulate --scenario phi-"), 2);
  EXPECT_EQ(run("simulate --steps 1"), 2);
  EXPECT_EQ(run("simulate --bogus"), 2);
  EXPECT_EQ(run("free --frame rot"), 2);
  EXPECT_EQ(run("simulate --config '" + (dir_ / "missing.toml").string() + "'"), 2);
  EXPECT_EQ(run("free --out '" + (dir_ / "nodir" / "x.csv").string() + "'"), 3);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(Cli, ValidateReport) {
  const fs::path out = dir_ / "v.json";
  const int code = run("validate --steps 200 --out '" + out.string() + "'");
  const auto j = nlohmann::json::parse(slurp(out));
  ASSERT_EQ(j["criteria"].size(), 10u);
  EXPECT_TRUE(j["basis_order"]["passed"].get<bool>());
  EXPECT_EQ(code, j["all_passed"].get<bool>() ? 0 : 1);
  for (std::size_t k = 0; k < 10; ++k) EXPECT_EQ(j["criteria"][k]["id"].get<int>(), static_cast<int>(k + 1));
  EXPECT_TRUE(j.contains("evaluated_convention"));
}

}  // namespace
