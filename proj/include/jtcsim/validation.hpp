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

// validation.hpp: acceptance checks with measured values.

#pragma once

#include "jtcsim/density.hpp"
#include "jtcsim/frames.hpp"
#include "jtcsim/model.hpp"
#include "jtcsim/oracle.hpp"
#include "jtcsim/pipeline.hpp"
#include "jtcsim/syndrome.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace jtcsim {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;   // headline value compared against `threshold`
  double threshold = 0.0;
  std::string detail;
};

struct ValidationOptions {
  FrequenciesGHz frequencies = reference_frequencies_ghz();
  TimeGrid grid{0.0, 50.0, 2000};
  int random_times = 50;
  std::uint64_t seed = 20261015;
  std::vector<double> oracle_times{0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  std::vector<double> kraus_times{0.5, 5.0, 12.5, 33.0};
};

struct ValidationReport {
  std::vector<CriterionResult> criteria;
  std::optional<FrequencyConvention> passing_convention;  // from the capture-probability band
  FrequencyConvention evaluated_convention = FrequencyConvention::cyclic;

  bool all_passed() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed; });
  }
};

namespace detail {

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

struct Sweep {
  std::vector<PointAnalysis> points;
  std::vector<SimulationRow> rows;
};

inline Sweep run_sweep(const SubspacePropagator& prop, Scenario s, Frame frame, const std::vector<double>& times) {
  const FrameSpec spec = FrameSpec::from(prop.params(), frame);
  Sweep out;
  for (double t : times) {
    out.points.push_back(analyze_point(prop, s, spec, t));
    out.rows.push_back(summarize(out.points.back(), s));
  }
  return out;
}

template <typename F>
double max_over(const std::vector<SimulationRow>& rows, F f) {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& r : rows) {
    const double v = f(r);
    if (!std::isnan(v)) m = std::max(m, v);
  }
  return m;
}

template <typename F>
double min_over(const std::vector<SimulationRow>& rows, F f) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) {
    const double v = f(r);
    if (!std::isnan(v)) m = std::min(m, v);
  }
  return m;
}

inline std::vector<double> random_times(const ValidationOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> u(o.grid.start, o.grid.end);
  std::vector<double> t(static_cast<std::size_t>(o.random_times));
  for (double& x : t) x = u(rng);
  return t;
}

inline constexpr std::array<Scenario, 2> kScenarios{Scenario::phi_plus, Scenario::psi_plus};
inline constexpr std::array<Frame, 3> kFrames{Frame::lab, Frame::rotating_qubits, Frame::rotating_qubits_ancillas};
inline constexpr std::array<FrequencyConvention, 3> kConventions{
    FrequencyConvention::cyclic, FrequencyConvention::angular, FrequencyConvention::mixed};

// Distance of a value from the closed interval [lo, hi].
inline double band_distance(double x, double lo, double hi) { return x < lo ? lo - x : x > hi ? x - hi : 0.0; }

}  // namespace detail

// Subspace amplitudes against the dense full-space propagator.
inline CriterionResult check_oracle_equivalence(const ValidationOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  double err = 0.0;
  double leak = 0.0;
  for (FrequencyConvention c : detail::kConventions) {
    const SystemParams p = from_frequencies_ghz(o.frequencies, c);
    const SubspacePropagator sub(p);
    const oracle::FullSpacePropagator full(p);
    for (Scenario s : detail::kScenarios) {
      const oracle::FullVector psi0 = oracle::embed(initial_state(s));
      for (double t : o.oracle_times) {
        const auto [ref, outside] = oracle::extract(full.propagate(psi0, t));
        const SystemState mine = evolve_scenario(s, sub, t);
        leak = std::max(leak, outside);
        err = std::max(err, std::abs(mine.ground - ref.ground));
        err = std::max(err, max_abs(mine.level1 - ref.level1));
        err = std::max(err, max_abs(mine.level2 - ref.level2));
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double worst = std::max(err, leak);
  return {1, "oracle equivalence", worst < 1e-8 && secs < 60.0, worst, 1e-8,
          "max amplitude error " + detail::fmt(err) + ", weight outside subspace " + detail::fmt(leak) +
              ", runtime " + detail::fmt(secs) + " s"};
}

inline CriterionResult check_block_equivalence(const ValidationOptions& o) {
  double block = 0.0;
  double comm = 0.0;
  for (FrequencyConvention c : detail::kConventions) {
    const SystemParams p = from_frequencies_ghz(o.frequencies, c);
    const Eigen::MatrixXd h = oracle::build_full_h(p);
    block = std::max(block, max_abs(oracle::extract_block(h, excitation_basis(1)) - build_h1(p).matrix()));
    block = std::max(block, max_abs(oracle::extract_block(h, excitation_basis(2)) - build_h2(p).matrix()));
    comm = std::max(comm, oracle::excitation_commutator_norm(h));
  }
  const double worst = std::max(block, comm);
  return {2, "block equivalence", worst < 1e-12, worst, 1e-12,
          "max block difference " + detail::fmt(block) + ", ||[N,H]||_max " + detail::fmt(comm)};
}

// Criteria 3 through 10 on shared sweeps.
inline ValidationReport validate_core(const ValidationOptions& o) {
  ValidationReport rep;
  const std::vector<double> grid = o.grid.points();

  // 3: capture-probability band, per convention. Later criteria use the
  // passing convention, or the one closest to the band when none passes.
  std::map<FrequencyConvention, std::map<Scenario, detail::Sweep>> lab;
  std::string band_detail;
  FrequencyConvention nearest = detail::kConventions.front();
  double nearest_gap = std::numeric_limits<double>::infinity();
  double nearest_min = 0.0;
  for (FrequencyConvention c : detail::kConventions) {
    const SubspacePropagator prop(from_frequencies_ghz(o.frequencies, c));
    for (Scenario s : detail::kScenarios) lab[c][s] = detail::run_sweep(prop, s, Frame::lab, grid);
    const auto& rows = lab[c][Scenario::phi_plus].rows;
    const double lo = detail::min_over(rows, [](const SimulationRow& r) { return r.p[kSyndromePP.slot()]; });
    const double hi = detail::max_over(rows, [](const SimulationRow& r) { return r.p[kSyndromePP.slot()]; });
    const double psi_lo = detail::min_over(lab[c][Scenario::psi_plus].rows,
                                           [](const SimulationRow& r) { return r.p[kSyndromePM.slot()]; });
    const bool ok = lo >= 0.990 && lo <= 0.9995 && hi >= 0.9995;
    band_detail += std::string(to_string(c)) + ": phi+ min p(1,1) " + detail::fmt(lo) + ", max " + detail::fmt(hi) +
                   (ok ? " (pass)" : " (fail)") + ", psi+ min p(1,-1) " + detail::fmt(psi_lo) + "; ";
    const double gap = detail::band_distance(lo, 0.990, 0.9995);
    if (ok && !rep.passing_convention) rep.passing_convention = c;
    if (gap < nearest_gap) {
      nearest_gap = gap;
      nearest = c;
      nearest_min = lo;
    }
  }
  const FrequencyConvention conv = rep.passing_convention.value_or(nearest);
  rep.criteria.push_back({3, "capture probability band", rep.passing_convention.has_value(), nearest_min, 0.9995,
                          band_detail + "passing convention: " +
                              (rep.passing_convention ? std::string(to_string(*rep.passing_convention))
                                                      : "none; criteria 4-10 use nearest (" +
                                                            std::string(to_string(conv)) + ")")});
  rep.evaluated_convention = conv;

  const SystemParams params = from_frequencies_ghz(o.frequencies, conv);
  const SubspacePropagator prop(params);
  const auto& phi = lab[conv][Scenario::phi_plus].rows;
  const auto& psi = lab[conv][Scenario::psi_plus].rows;

  // 4: small-probability bounds.
  {
    struct Bound {
      const char* what;
      double value;
      double limit;
    };
    const std::array<Bound, 5> bounds{{
        {"phi+ p(1,-1)", detail::max_over(phi, [](const SimulationRow& r) { return r.p[kSyndromePM.slot()]; }), 1e-4},
        {"phi+ p(-1,-1)", detail::max_over(phi, [](const SimulationRow& r) { return r.p[kSyndromeMM.slot()]; }), 1e-7},
        {"psi+ p(-1,1)", detail::max_over(psi, [](const SimulationRow& r) { return r.p[kSyndromeMP.slot()]; }), 1e-5},
        {"psi+ p(-1,-1)", detail::max_over(psi, [](const SimulationRow& r) { return r.p[kSyndromeMM.slot()]; }), 1e-3},
        {"psi+ corrected F(1,1)",
         detail::max_over(psi, [](const SimulationRow& r) { return r.f_corr[kSyndromePP.slot()]; }), 0.0035},
    }};
    bool ok = true;
    double worst_ratio = 0.0;
    std::string d;
    for (const Bound& b : bounds) {
      ok = ok && b.value < b.limit;
      worst_ratio = std::max(worst_ratio, b.value / b.limit);
      d += std::string(b.what) + " max " + detail::fmt(b.value) + ", limit " + detail::fmt(b.limit) +
           (b.value < b.limit ? " (ok); " : " (exceeds); ");
    }
    rep.criteria.push_back({4, "probability bounds", ok, worst_ratio, 1.0, d + "(measured = worst value/limit)"});
  }

  // 5: lab-frame no-error fidelity swings.
  {
    bool ok = true;
    std::string d;
    double worst_min = 0.0;
    for (Scenario s : detail::kScenarios) {
      const auto& rows = lab[conv][s].rows;
      const double hi = detail::max_over(rows, [](const SimulationRow& r) { return r.f_noerr; });
      const double lo = detail::min_over(rows, [](const SimulationRow& r) { return r.f_noerr; });
      ok = ok && hi > 0.99 && lo < 0.10;
      worst_min = std::max(worst_min, lo);
      if (!d.empty()) d += "; ";
      d += std::string(to_string(s)) + ": max F " + detail::fmt(hi) + ", min F " + detail::fmt(lo);
    }
    rep.criteria.push_back({5, "fidelity oscillation", ok, worst_min, 0.10, d});
  }

  // 6 and 8 share random-time sweeps in all frames.
  const std::vector<double> rt = detail::random_times(o);
  std::map<Frame, std::map<Scenario, detail::Sweep>> framed;
  for (Frame f : detail::kFrames) {
    for (Scenario s : detail::kScenarios) framed[f][s] = detail::run_sweep(prop, s, f, rt);
  }
  {
    double res = 0.0;
    int branches = 0;
    for (const auto& [f, by] : framed) {
      for (const auto& [s, sw] : by) {
        for (const auto& pt : sw.points) {
          for (const auto& b : pt.branches) {
            if (!b.reinsertion) continue;
            res = std::max(res, b.reinsertion->residual);
            ++branches;
          }
        }
      }
    }
    rep.criteria.push_back({6, "reinsertion identity", res < 1e-10, res, 1e-10,
                            std::to_string(branches) + " branches over " + std::to_string(rt.size()) +
                                " random times, 2 scenarios, 3 frames"});
  }

  // 7: uncoupled limit.
  {
    const SystemParams p0 = params.with_couplings(Couplings{});
    const SubspacePropagator free_prop(p0);
    double f_err = 0.0;
    double pt_err = 0.0;
    double p_err = 0.0;
    for (Scenario s : detail::kScenarios) {
      const auto sw = detail::run_sweep(free_prop, s, Frame::lab, grid);
      for (const SimulationRow& r : sw.rows) {
        f_err = std::max(f_err, std::abs(r.f_noerr - free_fidelity(s, p0, r.t)));
        const auto ref = free_reinsertion(s, p0, r.t);
        for (std::size_t k = 0; k < 4; ++k) pt_err = std::max(pt_err, std::abs(r.p_tilde[k] - ref[k]));
        p_err = std::max(p_err, std::abs(r.p[no_error_syndrome(s).slot()] - 1.0));
      }
    }
    const bool ok = f_err < 1e-12 && pt_err < 1e-12 && p_err < 1e-14;
    rep.criteria.push_back({7, "uncoupled closed forms", ok, std::max(f_err, pt_err), 1e-12,
                            "F error " + detail::fmt(f_err) + ", p-tilde error " + detail::fmt(pt_err) +
                                ", |p(no error) - 1| " + detail::fmt(p_err) + " (limit 1e-14)"});
  }

  // 8: frame invariances.
  {
    double dp = 0.0;
    double df = 0.0;
    for (Scenario s : detail::kScenarios) {
      const auto& lab_pts = framed[Frame::lab][s].points;
      const auto& rot_pts = framed[Frame::rotating_qubits][s].points;
      const auto& ext_pts = framed[Frame::rotating_qubits_ancillas][s].points;
      for (std::size_t i = 0; i < lab_pts.size(); ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
          const double p0 = lab_pts[i].branches[k].probability;
          dp = std::max({dp, std::abs(rot_pts[i].branches[k].probability - p0),
                         std::abs(ext_pts[i].branches[k].probability - p0)});
          const auto& br = rot_pts[i].branches[k];
          const auto& be = ext_pts[i].branches[k];
          if (!br.reinsertion || !be.reinsertion) continue;
          df = std::max(df, std::abs(br.corrected_fidelity - be.corrected_fidelity));
          for (std::size_t j = 0; j < 4; ++j) {
            df = std::max(df, std::abs(br.reinsertion->f_squared[j] - be.reinsertion->f_squared[j]));
          }
        }
      }
    }
    rep.criteria.push_back({8, "frame invariance", dp < 1e-14 && df < 1e-12, std::max(dp, df), 1e-12,
                            "probability spread " + detail::fmt(dp) + " (limit 1e-14), extended vs qubit frame "
                            "fidelity difference " + detail::fmt(df)});
  }

  // 9: density-matrix hygiene and the operator-sum cross-check.
  {
    double herm = 0.0;
    double tr = 0.0;
    double min_eig = std::numeric_limits<double>::infinity();
    int count = 0;
    auto inspect = [&](const detail::Sweep& sw) {
      for (const auto& pt : sw.points) {
        for (const auto& b : pt.branches) {
          if (!b.rho) continue;
          const auto h = b.rho->hygiene();
          herm = std::max(herm, h.hermiticity);
          tr = std::max(tr, h.trace_error);
          min_eig = std::min(min_eig, h.min_eigenvalue);
          ++count;
        }
      }
    };
    for (const auto& [s, sw] : lab[conv]) inspect(sw);
    for (const auto& [f, by] : framed) {
      for (const auto& [s, sw] : by) inspect(sw);
    }
    double kraus = 0.0;
    double completeness = 0.0;
    for (Scenario s : detail::kScenarios) {
      const TwoQubitVector target = bell_state(target_bell(s));
      const Eigen::Matrix4cd rho0 = target * target.adjoint();
      const FrameSpec lab_frame = FrameSpec::from(params, Frame::lab);
      for (double t : o.kraus_times) {
        const PointAnalysis pt = analyze_point(prop, s, lab_frame, t);
        double total = 0.0;
        for (Syndrome k : kSyndromes) {
          const BranchAnalysis& b = pt[k];
          if (!b.rho) continue;
          const KrausSet ks = kraus_elements(prop, s, k, t);
          total += ks.trace(rho0);
          kraus = std::max(kraus, std::abs(ks.trace(rho0) - b.probability));
          kraus = std::max(kraus, max_abs(ks.apply_normalized(rho0).rho - b.rho->rho));
        }
        completeness = std::max(completeness, std::abs(total - 1.0));
      }
    }
    const bool ok = herm <= 1e-12 && tr <= 1e-12 && min_eig >= -1e-10 && kraus <= 1e-10 && completeness <= 1e-12;
    rep.criteria.push_back({9, "density-matrix hygiene", ok, kraus, 1e-10,
                            std::to_string(count) + " matrices: hermiticity " + detail::fmt(herm) + ", trace error " +
                                detail::fmt(tr) + ", min eigenvalue " + detail::fmt(min_eig) +
                                "; operator-sum vs partial trace " + detail::fmt(kraus) +
                                ", completeness " + detail::fmt(completeness)});
  }

  // 10: stabilizers do not commute with H.
  {
    const auto c = oracle::stabilizer_commutators(params);
    const double lo = std::min(c.x_stabilizer, c.z_stabilizer);
    rep.criteria.push_back({10, "stabilizer non-invariance", lo > 1e-3, lo, 1e-3,
                            "||[XXX,H]|| " + detail::fmt(c.x_stabilizer) + ", ||[ZZZ,H]|| " +
                                detail::fmt(c.z_stabilizer)});
  }

  return rep;
}

inline ValidationReport validate_all(const ValidationOptions& o) {
  ValidationReport rep = validate_core(o);
  rep.criteria.insert(rep.criteria.begin(), check_block_equivalence(o));
  rep.criteria.insert(rep.criteria.begin(), check_oracle_equivalence(o));
  return rep;
}

}  // namespace jtcsim
