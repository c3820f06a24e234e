// Copyright 2026 The pvarlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs the command-line binary and checks outputs and exit codes.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef PVARLAB_CLI_PATH
#error "PVARLAB_CLI_PATH must name the CLI binary"
#endif

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// stdout only; stderr goes to /dev/null unless the command redirects it
Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" PVARLAB_CLI_PATH "\" " + args;
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("zigzag pvar row") {
  const auto r = run("pvar --function zigzag:5 --p 1 --n 4 2>/dev/null");
  CHECK(r.code == 0);
  CHECK(r.out == "n,value\n4,4.0\n");
  const auto j = run("pvar --values 0,1,0,1,0 --p 2 --n 3 --format json 2>/dev/null");
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["selection"].size() == 3);
}

TEST_CASE("exit codes") {
  CHECK(run("kfunc --t 1.5 --function zigzag:5 --p 1 2>/dev/null").code == 2);
  CHECK(run("pvar --values 0,1 --p 0.5 --n 1 2>/dev/null").code == 2);
  CHECK(run("pvar --values 0,1 --p 1 2>/dev/null").code == 2);   // --n missing
  CHECK(run("frobnicate 2>/dev/null").code == 2);
  CHECK(run("pvar --bogus 1 2>/dev/null").code == 2);
  CHECK(run("pvar --values 0,1 --p 1 --n 1 --format xml 2>/dev/null").code == 2);
  // computation errors
  CHECK(run("embed --q 2 --nu sqrt --p 1 --witness 2>/dev/null").code == 1);
  CHECK(run("pvar --function file:/nonexistent/f.csv --p 1 --n 1 2>/dev/null").code == 2);
  CHECK(run("pvar --function zigzag:5 --p 1 --n 1 --out /nonexistent/dir/x.csv 2>/dev/null").code == 1);
  CHECK(run("verify --seed 3 2>/dev/null").code == 0);
}

TEST_CASE("every violation reported") {
  const auto r = run("kfunc --t 0,2 --p 0.1 --jobs 0 2>&1");
  CHECK(r.code == 2);
  CHECK(r.out.find("--t") != std::string::npos);
  CHECK(r.out.find("--p") != std::string::npos);
  CHECK(r.out.find("--jobs") != std::string::npos);
  CHECK(r.out.find("--function") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
  const std::string a = run("verify --seed 11 2>/dev/null").out;
  const std::string b = run("verify --seed 11 2>/dev/null").out;
  CHECK(!a.empty());
  CHECK(a == b);
  const std::string ja = run("verify --seed 11 --format json --jobs 2 2>/dev/null").out;
  const std::string jb = run("verify --seed 11 --format json --jobs 1 2>/dev/null").out;
  CHECK(ja == jb);
  const std::string k1 = run("kfunc --function random:50 --seed 4 --p 2 --t 0.1,0.3,0.7 --jobs 3 2>/dev/null").out;
  const std::string k2 = run("kfunc --function random:50 --seed 4 --p 2 --t 0.1,0.3,0.7 2>/dev/null").out;
  CHECK(k1 == k2);
}

TEST_CASE("config files") {
  const auto cfg = temp_path("pvarlab_cli_cfg.json");
  {
    std::ofstream f(cfg);
    f << R"({"subcommand":"fourier","nu":"log","omega":"power:1","p":1,"n-min":8,"n-max":512})";
  }
  const auto r = run("--config " + cfg + " 2>/dev/null");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 505);
  // flags override the file
  const auto sub = temp_path("pvarlab_cli_sub.json");
  {
    std::ofstream f(sub);
    f << R"({"function":"zigzag:5","p":1,"n":2})";
  }
  const auto s = run("pvar --config " + sub + " --n 4 2>/dev/null");
  CHECK(s.out == "n,value\n4,4.0\n");
  const auto bad = temp_path("pvarlab_cli_bad.json");
  {
    std::ofstream f(bad);
    f << R"({"subcommand":"kfunc","function":"zigzag:5","p":1,"t":1.5})";
  }
  CHECK(run("--config " + bad + " 2>/dev/null").code == 2);
  std::filesystem::remove(cfg);
  std::filesystem::remove(sub);
  std::filesystem::remove(bad);
}

TEST_CASE("output file and plot export") {
  const auto path = temp_path("pvarlab_cli_partial.csv");
  const auto r = run("fourier --report partial --function square:64 --n 9 --out " + path + " 2>/dev/null");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto text = slurp(path);
  CHECK(text.rfind("x,y\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 65);
  std::filesystem::remove(path);
}

TEST_CASE("logging levels") {
  const auto quiet = run("pvar --function zigzag:5 --p 1 --n 4 2>&1", "PVARLAB_LOG=error");
  CHECK(quiet.out == "n,value\n4,4.0\n");
  const auto info = run("pvar --function zigzag:5 --p 1 --n 4 2>&1 >/dev/null", "PVARLAB_LOG=info");
  CHECK(info.out.find("[info]") != std::string::npos);
  CHECK(info.out.find("[debug]") == std::string::npos);
  const auto debug = run("pvar --function zigzag:5 --p 1 --n 4 2>&1 >/dev/null", "PVARLAB_LOG=debug");
  CHECK(debug.out.find("[debug]") != std::string::npos);
  const auto junk = run("pvar --function zigzag:5 --p 1 --n 4 2>&1 >/dev/null", "PVARLAB_LOG=loud");
  CHECK(junk.out.find("PVARLAB_LOG") != std::string::npos);
  CHECK(run("pvar --function zigzag:5 --p 1 --n 4 2>/dev/null", "PVARLAB_LOG=loud").code == 0);
}

TEST_CASE("embed witness json") {
  const auto r = run("embed --q 2 --nu log --p 1 --witness --k-max 2 --format json 2>/dev/null");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "fails");
  CHECK(j["witness"]["certificates"]["a"] == true);
  CHECK(j["witness"]["certificates"]["var_phi_bound"].get<double>() <= 2.0);
}
