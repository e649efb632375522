// Copyright 2026 The gmqc Authors
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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "dense_oracle.hpp"
#include "gmqc/hamiltonian.hpp"
#include "gmqc/mps.hpp"
#include "gmqc/oracle.hpp"
#include "gmqc/protocol.hpp"

using namespace gmqc;

namespace {

// Tolerances, in units of J where dimensional.
constexpr double kGroundEnergyTol = 1e-10;
constexpr double kGapFloor = 0.350;
constexpr double kGapOracleTol = 1e-9;
constexpr double kFrustrationTol = 1e-9;
constexpr double kStringAlgebraTol = 1e-10;
constexpr double kMpsFidelityTol = 1e-10;
constexpr double kCorrelatorRatioTol = 1e-8;
constexpr double kOutcomeProbabilityTol = 1e-10;
constexpr double kCorpusFidelityTol = 1e-8;
constexpr double kCorpusTvTol = 1e-8;
constexpr double kResidualTol = 1e-8;
constexpr double kRotationMeanTol = 0.05;
constexpr double kCphaseMeanTol = 0.08;

constexpr int kRandomStates = 100;
constexpr int kMonteCarloRuns = 10000;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

struct BoundaryCase {
  const char* name;
  ChainSpec (*make)(int);
  int degeneracy;
};

constexpr BoundaryCase kCases[] = {
    {"both", ChainSpec::both, 1}, {"one", ChainSpec::right_only, 2}, {"none", ChainSpec::none, 4}};

struct ChainResult {
  double ground_energy, gap, residual;
  int degeneracy, expected;
  int n;
  bool free_ends;
};

std::vector<ChainResult> chain_results() {
  std::vector<ChainResult> out;
  for (const auto& c : kCases)
    for (int n = 2; n <= 7; ++n) {
      const ChainSpec spec = c.make(n);
      const Hamiltonian h = build_hamiltonian(spec);
      const SpectralSummary s = spectral_summary(spec);
      const GroundSpace g = ground_space(h, 1e-9);
      out.push_back({s.ground_energy, s.gap, frustration_residual(h, g.basis), s.degeneracy, c.degeneracy, n,
                     c.degeneracy == 4});
    }
  return out;
}

Outcome ground_structure(const std::vector<ChainResult>& rows) {
  double energy = 0.0;
  int wrong = 0;
  for (const auto& r : rows) {
    energy = std::max(energy, std::abs(r.ground_energy));
    wrong += r.degeneracy != r.expected;
  }
  return {energy < kGroundEnergyTol && wrong == 0,
          fmt("max|E0| = %.3e (tol %.0e), degeneracy mismatches = %.0f", energy, kGroundEnergyTol, wrong)};
}

Outcome gap_behaviour(const std::vector<ChainResult>& rows) {
  std::vector<double> gaps;
  for (const auto& r : rows)
    if (r.free_ends) gaps.push_back(r.gap);
  bool decreasing = true;
  for (std::size_t k = 1; k < gaps.size(); ++k) decreasing &= gaps[k] < gaps[k - 1];
  const double floor = *std::min_element(gaps.begin(), gaps.end());
  double oracle_error = 0.0;
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    const double ref = oracle_ref::chain_gap({static_cast<int>(k) + 2, false, false});
    oracle_error = std::max(oracle_error, std::abs(ref - gaps[k]));
  }
  std::string seq;
  for (double g : gaps) seq += fmt(" %.6f", g);
  return {decreasing && floor > kGapFloor && oracle_error < kGapOracleTol,
          "gaps N=2..7:" + seq +
              fmt("; decreasing = %.0f, min > %.3f, |gap - oracle| = %.3e (tol %.0e)", decreasing, kGapFloor,
                  oracle_error, kGapOracleTol)};
}

Outcome frustration(const std::vector<ChainResult>& rows) {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.residual);
  return {worst < kFrustrationTol, fmt("max ||J term v|| = %.3e (tol %.0e)", worst, kFrustrationTol)};
}

Outcome string_algebra() {
  double comm = 0.0, anti = 0.0;
  for (auto make : {ChainSpec::both, ChainSpec::right_only})
    for (int n = 1; n <= 5; ++n) {
      const ChainSpec spec = make(n);
      for (int j = 1; j <= n; ++j) {
        const ComplexMatrix h = residual_hamiltonian(spec, ResidualIndex{j}).dense();
        const ComplexMatrix sx = string_operator(spec, ResidualIndex{j}, Axis::X);
        const ComplexMatrix sz = string_operator(spec, ResidualIndex{j}, Axis::Z);
        const ComplexMatrix sy = string_operator(spec, ResidualIndex{j}, Axis::Y);
        comm = std::max({comm, bracket_norm(sx, h, -1), bracket_norm(sy, h, -1), bracket_norm(sz, h, -1)});
        anti = std::max(anti, bracket_norm(sx, sz, +1));
      }
    }
  return {comm < kStringAlgebraTol && anti < kStringAlgebraTol,
          fmt("max ||[S(j),H(j)]|| = %.3e, max ||{Sx(j),Sz(j)}|| = %.3e (tol %.0e)", comm, anti, kStringAlgebraTol)};
}

Outcome mps_fidelity() {
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const GroundSpace g = ground_space(build_hamiltonian(ChainSpec::both(n)), 1e-9);
    const ComplexVector psi = to_dense(build_aklt_mps(n));
    worst = std::max(worst, 1.0 - std::abs(g.basis.col(0).dot(psi)) / psi.norm());
  }
  return {worst <= kMpsFidelityTol, fmt("max 1 - |<G_dense|G_mps>| = %.3e (tol %.0e)", worst, kMpsFidelityTol)};
}

Outcome correlation_decay() {
  double worst = 0.0;
  for (int d = 1; d <= 4; ++d) {
    const double ratio = correlator(12, 4, 5 + d, Axis::Z) / correlator(12, 4, 4 + d, Axis::Z);
    worst = std::max(worst, std::abs(ratio + 1.0 / 3.0));
  }
  return {worst < kCorrelatorRatioTol, fmt("max |ratio + 1/3| = %.3e (tol %.0e)", worst, kCorrelatorRatioTol)};
}

Outcome outcome_laws() {
  std::mt19937_64 rng(2718);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const auto random_state = [&](int dim) {
    ComplexVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = {g(rng), g(rng)};
    return ComplexVector(v.normalized());
  };
  SampledOutcomes source(314);
  double single = 0.0, joint = 0.0;
  for (int t = 0; t < kRandomStates; ++t) {
    for (int kind = 0; kind < 3; ++kind) {
      Register reg(2, 2);
      reg.initialized = {true, true};
      reg.state = random_state(4);
      const int wire = t % 2;
      const AttemptResult a = kind == 2 ? teleport_step(reg, wire, source)
                                        : attempt_rotation(reg, wire, kind ? Axis::X : Axis::Z, angle(rng), source);
      for (double p : a.branch_probabilities) single = std::max(single, std::abs(p - 1.0 / 3.0));
    }
    Register reg(2, 2);
    reg.initialized = {true, true};
    reg.state = random_state(4);
    const AttemptResult a = cphase_attempt(reg, 0, 1, source);
    for (double p : a.branch_probabilities) joint = std::max(joint, std::abs(p - 1.0 / 9.0));
  }
  return {single < kOutcomeProbabilityTol && joint < kOutcomeProbabilityTol,
          fmt("max |p - 1/3| = %.3e, max |p - 1/9| = %.3e over %.0f states (tol %.0e)", single, joint,
              kRandomStates, kOutcomeProbabilityTol)};
}

Outcome end_to_end() {
  const auto corpus = regression_corpus();
  double fidelity = 1.0, tv = 0.0, sum_error = 0.0;
  std::size_t mismatches = 0, branches = 0;
  for (const auto& e : corpus) {
    const CircuitVerification v = verify_circuit(e.circuit, e.sites);
    fidelity = std::min({fidelity, v.min_fidelity, v.min_engine_fidelity});
    tv = std::max(tv, v.total_variation);
    sum_error = std::max(sum_error, std::abs(v.probability_sum - 1.0));
    mismatches += v.decode_mismatches;
    branches += v.branches;
  }
  return {corpus.size() >= 20 && 1.0 - fidelity <= kCorpusFidelityTol && tv < kCorpusTvTol && mismatches == 0,
          fmt("%.0f circuits, %.0f branches; min fidelity 1 - %.3e (tol %.0e), ", double(corpus.size()),
              double(branches), 1.0 - fidelity, kCorpusFidelityTol) +
              fmt("max TV = %.3e (tol %.0e), max |sum p - 1| = %.3e", tv, kCorpusTvTol, sum_error)};
}

Outcome persistence() {
  struct Case {
    const char* text;
    int sites;
  };
  const Case cases[] = {
      {"INIT 0\nRZ 0 0.7\nRX 0 -1.3\nREAD 0\n", 4},
      {"INIT 0\nINIT 1\nRX 0 0.9\nCPHASE 0 1\nREAD 0\nREAD 1\n", 2},
      {"INIT 0\nINIT 1\nCPHASE 0 1\nRZ 1 0.4\nREAD 0\nREAD 1\n", 3},
  };
  double residual = 0.0, cphase = 0.0, perr = 0.0;
  std::size_t successes = 0, steps = 0;
  for (const auto& c : cases) {
    const PhysicalSimReport r = dense_physical_sim(parse_circuit_text(c.text), c.sites);
    residual = std::max(residual, r.max_residual);
    cphase = std::max(cphase, r.max_cphase_residual);
    perr = std::max(perr, r.max_probability_error);
    successes += r.cphase_successes;
    steps += r.steps;
  }
  return {residual < kResidualTol && cphase < kResidualTol && successes > 0,
          fmt("max ||H(j+1) psi|| = %.3e, after CPHASE success = %.3e (tol %.0e); ", residual, cphase, kResidualTol) +
              fmt("%.0f states, %.0f CPHASE successes, max |p_dense - p_mps| = %.3e", double(steps), double(successes),
                  perr)};
}

Outcome resource_estimates() {
  const LogicalCircuit rot = parse_circuit_text("INIT 0\nRZ 0 0.8\nREAD 0\n");
  const LogicalCircuit cz = parse_circuit_text("INIT 0\nINIT 1\nCPHASE 0 1\nREAD 0\nREAD 1\n");
  long rotations = 0, cphases = 0;
  for (int s = 0; s < kMonteCarloRuns; ++s) {
    for (const auto& r : run(rot, 40, 1000000 + s).records) rotations += r.kind == StepKind::Rotation;
    for (const auto& r : run(cz, 60, 2000000 + s).records) cphases += r.kind == StepKind::Cphase;
  }
  const double mr = double(rotations) / kMonteCarloRuns, mc = double(cphases) / kMonteCarloRuns;
  return {std::abs(mr - 1.5) <= kRotationMeanTol && std::abs(mc - 2.25) <= kCphaseMeanTol,
          fmt("mean attempts per rotation = %.4f (1.5 +- %.2f), per CPHASE = %.4f (2.25 +- %.2f)", mr,
              kRotationMeanTol, mc, kCphaseMeanTol)};
}

}  // namespace

int main() {
  const std::vector<ChainResult> rows = chain_results();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"ground-space structure", [&] { return ground_structure(rows); }},
      {"gap behaviour", [&] { return gap_behaviour(rows); }},
      {"frustration-freeness", [&] { return frustration(rows); }},
      {"string-operator algebra", string_algebra},
      {"MPS fidelity", mps_fidelity},
      {"correlation decay", correlation_decay},
      {"outcome-probability laws", outcome_laws},
      {"end-to-end correctness", end_to_end},
      {"ground-subspace persistence", persistence},
      {"resource estimates", resource_estimates},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
