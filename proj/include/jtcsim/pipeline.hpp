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

// pipeline.hpp: per-time-point analysis of a scenario and the CSV writers.

#pragma once

#include "jtcsim/config.hpp"
#include "jtcsim/density.hpp"
#include "jtcsim/evolution.hpp"
#include "jtcsim/frames.hpp"
#include "jtcsim/reinsertion.hpp"
#include "jtcsim/syndrome.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace jtcsim {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct BranchAnalysis {
  Syndrome syndrome = kSyndromePP;
  double probability = 0.0;
  std::optional<QubitDensityMatrix> rho;  // empty below the probability floor
  double corrected_fidelity = kNaN;
  std::optional<ReinsertionReport> reinsertion;
};

struct PointAnalysis {
  double t = 0.0;
  std::array<BranchAnalysis, 4> branches;  // (pp, mp, pm, mm)

  const BranchAnalysis& operator[](Syndrome s) const { return branches[s.slot()]; }
};

inline PointAnalysis analyze_point(const SubspacePropagator& prop, Scenario scenario, const FrameSpec& frame,
                                   double t) {
  const SystemState state = to_rotating_frame(evolve_scenario(scenario, prop, t), frame, t);
  PointAnalysis a;
  a.t = t;
  for (Syndrome s : kSyndromes) {
    BranchAnalysis& b = a.branches[s.slot()];
    b.syndrome = s;
    const MeasurementResult m = measure(state, s);
    b.probability = m.probability;
    if (!m.post) continue;
    const DataResonatorState post = strip_ancillas(*m.post, s);
    b.rho = reduce(post);
    b.corrected_fidelity = corrected_fidelity(scenario, s, *b.rho);
    ReinsertionReport r;
    r.t = t;
    r.branch = s;
    r.branch_probability = m.probability;
    r.p_tilde = reinsert(post);
    r.f_squared = bell_fidelities_squared(*b.rho);
    r.residual = verify_identity(r);
    b.reinsertion = r;
  }
  return a;
}

// One CSV row. Corrected fidelities are indexed by absolute syndrome; the
// no-error slot holds the uncorrected fidelity.
struct SimulationRow {
  double t = 0.0;
  std::array<double, 4> p{};
  double f_noerr = kNaN;
  std::array<double, 4> f_corr{kNaN, kNaN, kNaN, kNaN};
  std::array<double, 4> p_tilde{kNaN, kNaN, kNaN, kNaN};  // no-error branch re-inserted
  double identity_residual = kNaN;                          // max over populated branches
};

inline SimulationRow summarize(const PointAnalysis& a, Scenario scenario) {
  SimulationRow row;
  row.t = a.t;
  double residual = -1.0;
  for (const BranchAnalysis& b : a.branches) {
    row.p[b.syndrome.slot()] = b.probability;
    row.f_corr[b.syndrome.slot()] = b.corrected_fidelity;
    if (b.reinsertion) residual = std::max(residual, b.reinsertion->residual);
  }
  if (residual >= 0.0) row.identity_residual = residual;
  const BranchAnalysis& ok = a[no_error_syndrome(scenario)];
  row.f_noerr = ok.corrected_fidelity;
  if (ok.reinsertion) row.p_tilde = ok.reinsertion->p_tilde;
  return row;
}

inline std::vector<SimulationRow> simulate(const SubspacePropagator& prop, Scenario scenario, Frame frame,
                                           const TimeGrid& grid) {
  const FrameSpec spec = FrameSpec::from(prop.params(), frame);
  std::vector<SimulationRow> rows;
  for (double t : grid.points()) rows.push_back(summarize(analyze_point(prop, scenario, spec, t), scenario));
  return rows;
}

inline std::vector<SimulationRow> simulate(const RunConfig& c) {
  c.validate();
  return simulate(SubspacePropagator(c.params()), c.scenario, c.frame, c.grid);
}

// ---------------------------------------------------------------------------
// CSV

inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline const char* simulate_csv_header() {
  return "t_ns,p_pp,p_mp,p_pm,p_mm,F_noerr,F_corr_mp,F_corr_pm,F_corr_mm,pt_pp,pt_mp,pt_pm,pt_mm,identity_residual";
}

// Column groups left out of `outputs` are written as nan.
inline void write_simulate_csv(std::ostream& os, const std::vector<SimulationRow>& rows, const Outputs& outputs = {}) {
  os << simulate_csv_header() << '\n';
  auto put = [&os](double x, bool on) { os << ',' << format_double(on ? x : kNaN); };
  for (const SimulationRow& r : rows) {
    os << format_double(r.t);
    for (double p : r.p) put(p, outputs.probabilities);
    put(r.f_noerr, outputs.fidelities);
    put(r.f_corr[kSyndromeMP.slot()], outputs.fidelities);
    put(r.f_corr[kSyndromePM.slot()], outputs.fidelities);
    put(r.f_corr[kSyndromeMM.slot()], outputs.fidelities);
    for (double p : r.p_tilde) put(p, outputs.reinsertion);
    put(r.identity_residual, outputs.reinsertion);
    os << '\n';
  }
}

inline const char* reinsert_csv_header() {
  return "t_ns,branch,p_branch,pt_pp,pt_mp,pt_pm,pt_mm,F2_pp,F2_mp,F2_pm,F2_mm,identity_residual";
}

// One row per (t, branch) with probability above the floor.
inline void write_reinsert_csv(std::ostream& os, const SubspacePropagator& prop, Scenario scenario, Frame frame,
                               const TimeGrid& grid) {
  const FrameSpec spec = FrameSpec::from(prop.params(), frame);
  os << reinsert_csv_header() << '\n';
  for (double t : grid.points()) {
    const PointAnalysis a = analyze_point(prop, scenario, spec, t);
    for (const BranchAnalysis& b : a.branches) {
      if (!b.reinsertion) continue;
      const ReinsertionReport& r = *b.reinsertion;
      os << format_double(t) << ',' << b.syndrome.tag() << ',' << format_double(r.branch_probability);
      for (double p : r.p_tilde) os << ',' << format_double(p);
      for (double f : r.f_squared) os << ',' << format_double(f);
      os << ',' << format_double(r.residual) << '\n';
    }
  }
}

inline const char* free_csv_header() { return "t_ns,F_noerr,pt_pp,pt_mp,pt_pm,pt_mm"; }

// Lab-frame closed forms only.
inline void write_free_csv(std::ostream& os, const SystemParams& p, Scenario scenario, const TimeGrid& grid) {
  os << free_csv_header() << '\n';
  for (double t : grid.points()) {
    os << format_double(t) << ',' << format_double(free_fidelity(scenario, p, t));
    for (double x : free_reinsertion(scenario, p, t)) os << ',' << format_double(x);
    os << '\n';
  }
}

}  // namespace jtcsim
