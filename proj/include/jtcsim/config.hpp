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

// config.hpp: flat `key = value` run configuration.
//
//   # frequencies in GHz
//   f1 = 8.14
//   convention = "cyclic"
//   scenario = "phi+"
//   outputs = "probabilities,fidelities"
//
// Blank lines, `#` comments and `[section]` headers are ignored.

#pragma once

#include "jtcsim/evolution.hpp"
#include "jtcsim/frames.hpp"
#include "jtcsim/model.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jtcsim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Evolution { full, free };

inline Evolution parse_evolution(std::string_view s) {
  if (s == "full") return Evolution::full;
  if (s == "free") return Evolution::free;
  throw std::invalid_argument("unknown evolution '" + std::string(s) + "' (expected full or free)");
}

// Bit set of CSV column groups.
struct Outputs {
  bool probabilities = true;
  bool fidelities = true;
  bool reinsertion = true;

  static Outputs none() { return {false, false, false}; }
};

inline Outputs parse_outputs(std::string_view s) {
  Outputs o = Outputs::none();
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    std::string_view item = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item == "all") {
      o = Outputs{};
    } else if (item == "probabilities") {
      o.probabilities = true;
    } else if (item == "fidelities") {
      o.fidelities = true;
    } else if (item == "reinsertion") {
      o.reinsertion = true;
    } else {
      throw std::invalid_argument("unknown output group '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return o;
}

struct RunConfig {
  FrequenciesGHz frequencies = reference_frequencies_ghz();
  FrequencyConvention convention = FrequencyConvention::cyclic;
  Scenario scenario = Scenario::phi_plus;
  Frame frame = Frame::lab;
  Evolution evolution = Evolution::full;
  TimeGrid grid;
  Outputs outputs;
  std::string out;

  // Free evolution runs the same numeric pipeline with every coupling set to zero.
  SystemParams params() const {
    SystemParams p = from_frequencies_ghz(frequencies, convention);
    if (evolution == Evolution::free) p.g = Couplings{};
    return p;
  }

  void validate() const {
    grid.validate();
    params();
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline double parse_double(std::string_view v, std::string_view key) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("config: '" + std::string(key) + "' expects a number, got '" + std::string(v) + "'");
  }
  return x;
}

inline int parse_int(std::string_view v, std::string_view key) {
  int x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("config: '" + std::string(key) + "' expects an integer, got '" + std::string(v) + "'");
  }
  return x;
}

inline void assign(RunConfig& c, std::string_view key, std::string_view v) {
  auto num = [&] { return parse_double(v, key); };
  FrequenciesGHz& f = c.frequencies;
  if (key.size() == 2 && key[0] == 'f' && key[1] >= '1' && key[1] <= '4') {
    f.resonator[static_cast<std::size_t>(key[1] - '1')] = num();
  } else if (key == "fp1") { f.data1 = num();
  } else if (key == "fp2") { f.data2 = num();
  } else if (key == "fa") { f.ancilla_a = num();
  } else if (key == "fb") { f.ancilla_b = num();
  } else if (key == "g11") { f.g.g11 = num();
  } else if (key == "g1a") { f.g.g1a = num();
  } else if (key == "g2a") { f.g.g2a = num();
  } else if (key == "g22") { f.g.g22 = num();
  } else if (key == "g42") { f.g.g42 = num();
  } else if (key == "g4b") { f.g.g4b = num();
  } else if (key == "g3b") { f.g.g3b = num();
  } else if (key == "g31") { f.g.g31 = num();
  } else if (key == "convention") { c.convention = parse_convention(v);
  } else if (key == "scenario") { c.scenario = parse_scenario(v);
  } else if (key == "frame") { c.frame = parse_frame(v);
  } else if (key == "evolution") { c.evolution = parse_evolution(v);
  } else if (key == "t_start") { c.grid.start = num();
  } else if (key == "t_end") { c.grid.end = num();
  } else if (key == "steps") { c.grid.steps = parse_int(v, key);
  } else if (key == "outputs") { c.outputs = parse_outputs(v);
  } else if (key == "out") { c.out = std::string(v);
  } else {
    throw ConfigError("config: unknown key '" + std::string(key) + "'");
  }
}

}  // namespace detail

inline RunConfig parse_config(std::istream& in, RunConfig c = {}) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '"') quoted = !quoted;
      if (s[i] == '#' && !quoted) {
        s = s.substr(0, i);
        break;
      }
    }
    s = detail::trim(s);
    if (s.empty() || s.front() == '[') continue;
    const std::size_t eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string_view key = detail::trim(s.substr(0, eq));
    std::string_view value = detail::trim(s.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    try {
      detail::assign(c, key, value);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return c;
}

inline RunConfig parse_config(std::string_view text, RunConfig c = {}) {
  std::istringstream in{std::string(text)};
  return parse_config(in, c);
}

inline RunConfig load_config(const std::string& path, RunConfig c = {}) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  return parse_config(in, c);
}

}  // namespace jtcsim
