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


// pvarlab command-line front end. All numerical work goes through the C API.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pvarlab/pvarlab.h"

namespace {

using nlohmann::json;

enum class Level { Error = 0, Info = 1, Debug = 2 };

Level g_level = Level::Error;

void log(Level lvl, const std::string& msg) {
  if (lvl > g_level) return;
  static const char* names[] = {"error", "info", "debug"};
  std::cerr << "pvarlab [" << names[static_cast<int>(lvl)] << "] " << msg << "\n";
}

void init_logging() {
  const char* env = std::getenv("PVARLAB_LOG");
  if (!env || !*env) return;
  const std::string v = env;
  if (v == "error") g_level = Level::Error;
  else if (v == "info") g_level = Level::Info;
  else if (v == "debug") g_level = Level::Debug;
  else std::cerr << "pvarlab [warning] PVARLAB_LOG='" << v << "' is not error, info or debug; using error\n";
}

struct Sub {
  std::string name;
  std::string help;
  std::vector<std::string> options;
  std::vector<std::string> flags;
};

const std::vector<Sub>& subcommands() {
  static const std::vector<Sub> subs{
      {"pvar", "modulus of p-variation of sampled data",
       {"values", "function", "seed", "p", "n", "n-max", "nu", "method"}, {}},
      {"kfunc", "K-functional bounds between BV_p and its Lipschitz subspace",
       {"values", "function", "seed", "p", "t", "jobs"}, {}},
      {"fourier", "Fourier diagnostics (--report sequences|decay|unif2|coeffs|partial|fejer|nikolskii|contraction|kernel)",
       {"report", "values", "function", "seed", "nu", "omega", "p", "n", "n-min", "n-max", "horizon"}, {}},
      {"embed", "embedding criterion into Phi-variation classes, witnesses, Var_Phi and the Wu bound",
       {"report", "phi", "q", "nu", "p", "horizon", "corollary", "orlicz", "lambda", "growth-factor",
        "reference-fraction", "fail-slope", "k-max", "budget", "jobs", "values", "function", "seed", "n"},
       {"witness", "heuristic"}},
      {"seqnorm", "symmetric sequence space norms and fundamental sequences",
       {"values", "space", "nu", "p", "weight", "q", "orlicz", "phi", "n-max", "horizon"}, {}},
      {"verify", "run the invariant battery", {"seed", "jobs"}, {}},
  };
  return subs;
}

struct Run {
  std::string config;
  std::string out;
  std::string format;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
};

json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("--config: cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("--config: " + std::string(e.what()));
  }
  if (!j.is_object()) throw std::runtime_error("--config: top level must be an object");
  return j;
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return std::cout ? 0 : 1;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.close();
  if (!f) {
    log(Level::Error, "cannot write " + path);
    return 1;
  }
  log(Level::Info, "wrote " + path);
  return 0;
}

int execute(const std::string& sub, json params, std::string format, std::string out) {
  if (params.contains("subcommand")) {
    if (params["subcommand"] != sub) {
      log(Level::Error, "config subcommand " + params["subcommand"].dump() + " does not match " + sub);
      return 2;
    }
    params.erase("subcommand");
  }
  if (params.contains("params")) {
    auto inner = params["params"];
    params.erase("params");
    if (!inner.is_object()) {
      log(Level::Error, "config 'params' must be an object");
      return 2;
    }
    for (auto& [k, v] : inner.items())
      if (!params.contains(k)) params[k] = v;
  }
  for (const char* key : {"format", "out"}) {
    if (!params.contains(key)) continue;
    const auto v = params[key];
    params.erase(key);
    if (!v.is_string()) {
      log(Level::Error, std::string("config '") + key + "' must be a string");
      return 2;
    }
    std::string& dst = std::string(key) == "format" ? format : out;
    if (dst.empty()) dst = v.get<std::string>();
  }
  if (format.empty()) format = "csv";
  if (format != "csv" && format != "json") {
    log(Level::Error, "--format: must be csv or json, got '" + format + "'");
    return 2;
  }
  const std::string text = params.dump();
  log(Level::Debug, sub + " params " + text);

  char* problems = nullptr;
  if (pvl_report_validate(sub.c_str(), text.c_str(), &problems) != PVL_OK) {
    log(Level::Error, sub + ": " + pvl_last_error());
    return 2;
  }
  const std::string msg = problems;
  pvl_string_free(problems);
  if (!msg.empty()) {
    std::istringstream lines(msg);
    for (std::string line; std::getline(lines, line);) log(Level::Error, sub + ": " + line);
    return 2;
  }

  log(Level::Info, "running " + sub);
  const auto t0 = std::chrono::steady_clock::now();
  char* report = nullptr;
  int status = 0;
  const pvl_status st = pvl_report_run(sub.c_str(), text.c_str(), format.c_str(), &report, &status);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (st != PVL_OK) {
    log(Level::Error, sub + ": " + pvl_status_name(st) + ": " + pvl_last_error());
    return st == PVL_INVALID_ARGUMENT ? 2 : 1;
  }
  log(Level::Info, sub + " finished in " + std::to_string(secs) + " s");
  const std::string body = report;
  pvl_string_free(report);
  if (emit(body, out) != 0) return 1;
  if (status != 0) {
    log(Level::Error, sub + ": reported failures");
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  init_logging();
  CLI::App app{"pvarlab: p-variation, K-functionals, Fourier convergence tests and embeddings"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string(pvl_version()));

  Run top;
  app.add_option("--config", top.config, "JSON config with a 'subcommand' key and flag-named fields");
  app.add_option("--out", top.out, "output path (default stdout)");
  app.add_option("--format", top.format, "csv or json");

  std::vector<Run> runs(subcommands().size());
  std::vector<CLI::App*> apps;
  for (std::size_t i = 0; i < subcommands().size(); ++i) {
    const auto& s = subcommands()[i];
    auto* sc = app.add_subcommand(s.name, s.help);
    auto& r = runs[i];
    sc->add_option("--config", r.config, "JSON file of flag-named fields");
    sc->add_option("--out", r.out, "output path (default stdout)");
    sc->add_option("--format", r.format, "csv or json");
    for (const auto& o : s.options) sc->add_option("--" + o, r.values[o]);
    for (const auto& f : s.flags) sc->add_flag("--" + f, r.flags[f]);
    apps.push_back(sc);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (std::size_t i = 0; i < apps.size(); ++i) {
      if (!apps[i]->parsed()) continue;
      const auto& s = subcommands()[i];
      auto& r = runs[i];
      json params = json::object();
      if (!top.config.empty()) params = read_config(top.config);
      if (!r.config.empty()) {
        const json own = read_config(r.config);
        for (const auto& [k, v] : own.items()) params[k] = v;
      }
      for (const auto& o : s.options)
        if (apps[i]->count("--" + o)) params[o] = r.values[o];
      for (const auto& f : s.flags)
        if (apps[i]->count("--" + f)) params[f] = r.flags[f];
      const std::string format = !r.format.empty() ? r.format : top.format;
      const std::string out = !r.out.empty() ? r.out : top.out;
      return execute(s.name, std::move(params), format, out);
    }
    if (top.config.empty()) {
      std::cerr << app.help();
      return 2;
    }
    json params = read_config(top.config);
    if (!params.contains("subcommand") || !params["subcommand"].is_string()) {
      log(Level::Error, "--config: missing 'subcommand'");
      return 2;
    }
    const std::string sub = params["subcommand"];
    bool known = false;
    for (const auto& s : subcommands()) known = known || s.name == sub;
    if (!known) {
      log(Level::Error, "unknown subcommand '" + sub + "'");
      return 2;
    }
    return execute(sub, std::move(params), top.format, top.out);
  } catch (const std::exception& e) {
    log(Level::Error, e.what());
    return 2;
  }
}
