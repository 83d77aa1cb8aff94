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

// jtcsim: command-line front end.
//
//   jtcsim simulate --config configs/reference.toml --out run.csv
//   jtcsim reinsert --scenario psi+ --frame rot
//   jtcsim free --scenario phi+ --steps 400
//   jtcsim validate --out report.json

#include "jtcsim/jtcsim.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Flags {
  std::string config;
  std::optional<std::string> scenario;
  std::optional<std::string> frame;
  std::optional<std::string> convention;
  std::optional<double> t_start;
  std::optional<double> t_end;
  std::optional<int> steps;
  std::optional<std::string> out;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "Run configuration file (key = value)");
  cmd->add_option("--scenario", f.scenario, "phi+ or psi+");
  cmd->add_option("--frame", f.frame, "lab, rot or rot-ext");
  cmd->add_option("--convention", f.convention, "cyclic, angular or mixed");
  cmd->add_option("--t-start", f.t_start, "First time point [ns]");
  cmd->add_option("--t-end", f.t_end, "Last time point [ns]");
  cmd->add_option("--steps", f.steps, "Number of grid intervals");
  cmd->add_option("--out", f.out, "Output path (default: stdout)");
}

// Defaults, then the config file, then flags. The output path may also come
// from JTCSIM_OUT, which sits between the config file and --out.
jtcsim::RunConfig resolve(const Flags& f) {
  jtcsim::RunConfig c;
  if (!f.config.empty()) c = jtcsim::load_config(f.config);
  if (f.scenario) c.scenario = jtcsim::parse_scenario(*f.scenario);
  if (f.frame) c.frame = jtcsim::parse_frame(*f.frame);
  if (f.convention) c.convention = jtcsim::parse_convention(*f.convention);
  if (f.t_start) c.grid.start = *f.t_start;
  if (f.t_end) c.grid.end = *f.t_end;
  if (f.steps) c.grid.steps = *f.steps;
  if (const char* env = std::getenv("JTCSIM_OUT"); env != nullptr && *env != '\0') c.out = env;
  if (f.out) c.out = *f.out;
  c.validate();
  return c;
}

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  write(os);
  os.flush();
  if (!os) throw IoError("write to '" + path + "' failed");
}

int cmd_simulate(const Flags& f) {
  const jtcsim::RunConfig c = resolve(f);
  const auto rows = jtcsim::simulate(c);
  emit(c.out, [&](std::ostream& os) { jtcsim::write_simulate_csv(os, rows, c.outputs); });
  return 0;
}

int cmd_reinsert(const Flags& f) {
  const jtcsim::RunConfig c = resolve(f);
  const jtcsim::SubspacePropagator prop(c.params());
  emit(c.out, [&](std::ostream& os) { jtcsim::write_reinsert_csv(os, prop, c.scenario, c.frame, c.grid); });
  return 0;
}

int cmd_free(const Flags& f) {
  const jtcsim::RunConfig c = resolve(f);
  if (c.frame != jtcsim::Frame::lab) {
    throw std::invalid_argument("free: closed forms are provided in the lab frame only");
  }
  emit(c.out, [&](std::ostream& os) { jtcsim::write_free_csv(os, c.params(), c.scenario, c.grid); });
  return 0;
}

int cmd_validate(const Flags& f) {
  const jtcsim::RunConfig c = resolve(f);
  jtcsim::ValidationOptions o;
  o.frequencies = c.frequencies;
  o.grid = c.grid;

  nlohmann::ordered_json report;
  bool basis_ok = true;
  std::string basis_detail = "index sets derived from basis labels match";
  try {
    jtcsim::derive_index_sets(jtcsim::excitation_basis(2));
  } catch (const jtcsim::BasisOrderError& e) {
    basis_ok = false;
    basis_detail = e.what();
  }
  report["basis_order"] = {{"passed", basis_ok}, {"detail", basis_detail}};

  const jtcsim::ValidationReport rep = jtcsim::validate_all(o);
  report["passing_convention"] =
      rep.passing_convention ? nlohmann::json(std::string(jtcsim::to_string(*rep.passing_convention)))
                             : nlohmann::json(nullptr);
  report["evaluated_convention"] = std::string(jtcsim::to_string(rep.evaluated_convention));
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& r : rep.criteria) {
    list.push_back({{"id", r.id},
                    {"name", r.name},
                    {"passed", r.passed},
                    {"measured", r.measured},
                    {"threshold", r.threshold},
                    {"detail", r.detail}});
  }
  report["criteria"] = list;
  const bool ok = basis_ok && rep.all_passed();
  report["all_passed"] = ok;
  emit(c.out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled qubit-resonator stabilizer simulator"};
  app.require_subcommand(1);
  Flags flags;
  CLI::App* simulate = app.add_subcommand("simulate", "Syndrome probabilities, fidelities and re-insertion CSV");
  CLI::App* validate = app.add_subcommand("validate", "Run the acceptance checks and print a JSON report");
  CLI::App* reinsert = app.add_subcommand("reinsert", "Per-branch re-insertion probabilities and identities CSV");
  CLI::App* free = app.add_subcommand("free", "Uncoupled closed forms CSV");
  for (CLI::App* cmd : {simulate, validate, reinsert, free}) add_flags(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(flags);
    if (validate->parsed()) return cmd_validate(flags);
    if (reinsert->parsed()) return cmd_reinsert(flags);
    if (free->parsed()) return cmd_free(flags);
  } catch (const IoError& e) {
    std::cerr << "jtcsim: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "jtcsim: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
