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

#include "gmqc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gmqc/errors.hpp"
#include "gmqc/hamiltonian.hpp"
#include "gmqc/mps.hpp"
#include "gmqc/oracle.hpp"
#include "gmqc/protocol.hpp"

namespace gmqc {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"spectra", "mps", "protocol", "oracle"};
  return names;
}

Check at_most(std::string name, double value, double tolerance) {
  return {std::move(name), value, tolerance, value <= tolerance};
}

namespace {

struct BoundaryCase {
  const char* name;
  ChainSpec (*make)(int);
  int degeneracy;
};

constexpr BoundaryCase kBoundaryCases[] = {
    {"both", ChainSpec::both, 1}, {"one", ChainSpec::right_only, 2}, {"none", ChainSpec::none, 4}};

SuiteResult spectra_suite() {
  SuiteResult r;
  r.name = "spectra";
  Json rows = Json::array();
  std::vector<double> free_gaps;
  for (const auto& bc : kBoundaryCases) {
    double energy = 0.0, residual = 0.0;
    int degeneracy_error = 0;
    for (int n = 2; n <= 7; ++n) {
      const ChainSpec spec = bc.make(n);
      const Hamiltonian h = build_hamiltonian(spec);
      const SpectralSummary s = spectral_summary(spec);
      const GroundSpace g = ground_space(h, 1e-9);
      const double fr = frustration_residual(h, g.basis);
      energy = std::max(energy, std::abs(s.ground_energy));
      residual = std::max(residual, fr);
      degeneracy_error = std::max(degeneracy_error, std::abs(s.degeneracy - bc.degeneracy));
      if (bc.degeneracy == 4) free_gaps.push_back(s.gap);
      rows.push_back({{"N", n}, {"boundaries", bc.name}, {"ground_energy", s.ground_energy},
                      {"degeneracy", s.degeneracy}, {"gap", s.gap}, {"frustration_residual", fr}});
    }
    const std::string tag = std::string(" (N=2..7, ") + bc.name + ")";
    r.checks.push_back(at_most("ground energy" + tag, energy, 1e-10));
    r.checks.push_back(at_most("degeneracy error" + tag, degeneracy_error, 0.0));
    r.checks.push_back(at_most("frustration residual" + tag, residual, 1e-9));
  }
  double rise = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < free_gaps.size(); ++k)
    rise = std::max(rise, free_gaps[k] - free_gaps[k - 1]);
  r.checks.push_back({"largest gap increase, no boundaries (must be negative)", rise, 0.0, rise < 0.0});
  const double floor = *std::min_element(free_gaps.begin(), free_gaps.end());
  r.checks.push_back({"smallest gap, no boundaries (must exceed 0.350)", floor, 0.350, floor > 0.350});

  double comm = 0.0, anti = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const ChainSpec spec = ChainSpec::both(n);
    for (int j = 1; j <= n; ++j) {
      const ComplexMatrix h = residual_hamiltonian(spec, ResidualIndex{j}).dense();
      std::array<ComplexMatrix, 3> sigma;
      for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        sigma[static_cast<int>(a)] = string_operator(spec, ResidualIndex{j}, a);
        comm = std::max(comm, bracket_norm(sigma[static_cast<int>(a)], h, -1));
      }
      anti = std::max(anti, bracket_norm(sigma[0], sigma[2], +1));
    }
  }
  r.checks.push_back(at_most("string operator commutator [S(j), H(j)] (N<=5)", comm, 1e-10));
  r.checks.push_back(at_most("string operator anticommutator {Sx(j), Sz(j)} (N<=5)", anti, 1e-10));
  r.details["spectra"] = std::move(rows);
  return r;
}

SuiteResult mps_suite() {
  SuiteResult r;
  r.name = "mps";
  double infidelity = 0.0, energy = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const ChainSpec spec = ChainSpec::both(n);
    const Hamiltonian h = build_hamiltonian(spec);
    const GroundSpace g = ground_space(h, 1e-9);
    const ComplexVector psi = to_dense(build_aklt_mps(n));
    infidelity = std::max(infidelity, 1.0 - std::sqrt(fidelity(g.basis.col(0), psi)));
    energy = std::max(energy, h.apply(psi / psi.norm()).norm());
  }
  r.checks.push_back(at_most("1 - |<G_dense|G_mps>| (N=1..5)", infidelity, 1e-10));
  r.checks.push_back(at_most("|H G_mps| (N=1..5)", energy, 1e-9));

  const int n = 12;
  double ratio_error = 0.0, isotropy = 0.0;
  Json ratios = Json::array();
  for (int d = 1; d <= 4; ++d) {
    const double c0 = correlator(n, 4, 4 + d, Axis::Z);
    const double c1 = correlator(n, 4, 5 + d, Axis::Z);
    ratio_error = std::max(ratio_error, std::abs(c1 / c0 + 1.0 / 3.0));
    ratios.push_back(c1 / c0);
    for (Axis a : {Axis::X, Axis::Y})
      isotropy = std::max(isotropy, std::abs(correlator(n, 4, 4 + d, a) - c0));
  }
  const double square = correlator(n, 6, 6, Axis::Z);
  r.checks.push_back(at_most("correlator ratio + 1/3 (N=12)", ratio_error, 1e-8));
  r.checks.push_back(at_most("<(S^z)^2> - 2/3 (N=12)", std::abs(square - 2.0 / 3.0), 1e-10));
  r.checks.push_back(at_most("correlator isotropy (N=12)", isotropy, 1e-10));
  r.details["correlator_ratios"] = std::move(ratios);
  return r;
}

ComplexVector random_state(Rng& rng, int dim) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
  return v / v.norm();
}

// ‖M - (tr M / d)·1‖ for M = expected† · actual, scaled by |tr M / d|.
double proportionality_defect(const ComplexMatrix& expected, const ComplexMatrix& actual) {
  const ComplexMatrix m = expected.adjoint() * actual;
  const Complex c = m.trace() / static_cast<double>(m.rows());
  if (std::abs(c) == 0.0) return std::numeric_limits<double>::infinity();
  return (m - c * ComplexMatrix::Identity(m.rows(), m.cols())).norm() / std::abs(c);
}

SuiteResult protocol_suite() {
  SuiteResult r;
  r.name = "protocol";
  Rng rng(7);
  SampledOutcomes source(11);
  double single = 0.0, joint = 0.0, sums = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
    for (int kind = 0; kind < 3; ++kind) {
      Register reg(1, 2);
      reg.initialized[0] = true;
      reg.state = random_state(rng, 2);
      const AttemptResult a = kind == 2 ? teleport_step(reg, 0, source)
                                        : attempt_rotation(reg, 0, kind ? Axis::X : Axis::Z, theta, source);
      double s = 0.0;
      for (double p : a.branch_probabilities) {
        single = std::max(single, std::abs(p - 1.0 / 3.0));
        s += p;
      }
      sums = std::max(sums, std::abs(s - 1.0));
    }
    Register reg(2, 2);
    reg.initialized = {true, true};
    reg.state = random_state(rng, 4);
    const AttemptResult a = cphase_attempt(reg, 0, 1, source);
    double s = 0.0;
    for (double p : a.branch_probabilities) {
      joint = std::max(joint, std::abs(p - 1.0 / 9.0));
      s += p;
    }
    sums = std::max(sums, std::abs(s - 1.0));
  }
  r.checks.push_back(at_most("single-site outcome probability - 1/3 (100 random states)", single, 1e-10));
  r.checks.push_back(at_most("CPHASE outcome probability - 1/9 (100 random states)", joint, 1e-10));
  r.checks.push_back(at_most("branch probability sum - 1", sums, 1e-10));

  const MpsChain chain = build_aklt_mps(1);
  ComplexMatrix completeness = ComplexMatrix::Zero(2, 2);
  for (const auto& k : chain.site_kraus) completeness += k.adjoint() * k;
  r.checks.push_back(at_most("Kraus completeness", (completeness - identity(2)).norm(), 1e-12));

  double frame = 0.0;
  for (double theta : {0.0, 0.3, 1.1, -2.4, std::numbers::pi}) {
    for (Axis axis : {Axis::Z, Axis::X}) {
      const ComplexMatrix basis = axis == Axis::Z ? rz_basis(theta) : rx_basis(theta);
      const auto by = rotation_byproducts(axis);
      const ComplexMatrix gate = axis == Axis::Z ? logical_rz(theta) : logical_rx(theta);
      for (int o = 0; o < 3; ++o) {
        const ComplexMatrix expected = by[o].matrix() * (o < 2 ? gate : identity(2));
        frame = std::max(frame, proportionality_defect(expected, outcome_kraus(chain, basis.col(o))));
      }
    }
  }
  for (int o = 0; o < 3; ++o)
    frame = std::max(frame, proportionality_defect(teleport_byproducts()[o].matrix(),
                                                   outcome_kraus(chain, identity(3).col(o))));
  int successes = 0, listed = 0;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const auto& br = cphase_table()[a - 1][b - 1];
      ComplexMatrix expected = kron(br.first.matrix(), br.second.matrix());
      if (br.success) {
        expected = expected * logical_cphase();
        ++successes;
        if (br.first.x && br.second.x) ++listed;
      }
      frame = std::max(frame, proportionality_defect(expected, cphase_kraus(a, b)));
    }
  }
  r.checks.push_back(at_most("frame correctness defect (all branches)", frame, 1e-10));
  r.checks.push_back({"CPHASE successful outcomes (of 9)", double(successes), 4.0, successes == 4});
  r.checks.push_back({"CPHASE success byproducts in {X,XZ}x{X,XZ}", double(listed), 4.0, listed == 4});
  return r;
}

SuiteResult oracle_suite() {
  SuiteResult r;
  r.name = "oracle";
  double sum = 0.0, fid = 0.0, tv = 0.0, perr = 0.0;
  std::size_t mismatches = 0, branches = 0;
  const auto corpus = regression_corpus();
  for (const auto& e : corpus) {
    const auto v = verify_circuit(e.circuit, e.sites);
    sum = std::max(sum, std::abs(v.probability_sum - 1.0));
    fid = std::max({fid, 1.0 - v.min_fidelity, 1.0 - v.min_engine_fidelity});
    tv = std::max(tv, v.total_variation);
    perr = std::max(perr, v.max_probability_error);
    mismatches += v.decode_mismatches;
    branches += v.branches;
  }
  r.checks.push_back(at_most("branch probability sum - 1 (corpus)", sum, 1e-9));
  r.checks.push_back(at_most("1 - fidelity of decoded states (corpus)", fid, 1e-8));
  r.checks.push_back(at_most("total variation vs dense unitary (corpus)", tv, 1e-8));
  r.checks.push_back(at_most("engine vs replay probability error (corpus)", perr, 1e-9));
  r.checks.push_back(at_most("readout decoding mismatches (corpus)", double(mismatches), 0.0));

  double dense_perr = 0.0, residual = 0.0, cphase_residual = 0.0;
  std::size_t cphase_successes = 0;
  const std::pair<const char*, int> physical[] = {
      {"INIT 0\nRZ 0 0.7\nRX 0 -1.3\nREAD 0\n", 4},
      {"INIT 0\nINIT 1\nRX 0 1.1\nCPHASE 0 1\nREAD 0\nREAD 1\n", 2},
  };
  for (const auto& [text, sites] : physical) {
    const auto p = dense_physical_sim(parse_circuit(text), sites);
    dense_perr = std::max(dense_perr, p.max_probability_error);
    residual = std::max(residual, p.max_residual);
    cphase_residual = std::max(cphase_residual, p.max_cphase_residual);
    cphase_successes += p.cphase_successes;
  }
  r.checks.push_back(at_most("dense vs engine step probability", dense_perr, 1e-9));
  r.checks.push_back(at_most("residual |H(j+1) psi|", residual, 1e-8));
  r.checks.push_back(at_most("residual |(H_A+H_B) psi| after CPHASE success", cphase_residual, 1e-8));
  r.details["corpus_size"] = corpus.size();
  r.details["branches"] = branches;
  r.details["cphase_successes_checked"] = cphase_successes;
  return r;
}

}  // namespace

SuiteResult run_suite(std::string_view name) {
  if (name == "spectra") return spectra_suite();
  if (name == "mps") return mps_suite();
  if (name == "protocol") return protocol_suite();
  if (name == "oracle") return oracle_suite();
  throw ContractError("unknown suite '" + std::string(name) + "'");
}

}  // namespace gmqc
