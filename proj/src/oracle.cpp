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

#include "gmqc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gmqc/errors.hpp"
#include "gmqc/hamiltonian.hpp"
#include "gmqc/mps.hpp"
#include "gmqc/spin.hpp"

namespace gmqc {

namespace {

constexpr double kMinWeight = 1e-14;

SiteLayout qubits(int n) { return SiteLayout(std::vector<int>(static_cast<std::size_t>(n), 2)); }

ComplexMatrix gate_matrix(const Gate& g) {
  switch (g.kind) {
    case GateKind::RZ: return logical_rz(g.theta);
    case GateKind::RX: return logical_rx(g.theta);
    case GateKind::Cphase: return logical_cphase();
    default: return {};
  }
}

std::vector<int> gate_wires(const Gate& g) {
  if (g.kind == GateKind::Cphase) return {g.wire, g.partner};
  return {g.wire};
}

bool is_unitary_gate(const Gate& g) {
  return g.kind == GateKind::RZ || g.kind == GateKind::RX || g.kind == GateKind::Cphase;
}

// Measured state of one site, written in the S^z basis from the outcome
// formulas: ½((1±e^{∓iθ})|a> + (1∓e^{∓iθ})|b>) and the excluded frame state.
ComplexVector site_state(const TraceRecord& rec, int outcome) {
  const ComplexMatrix f = frame_kets();
  if (rec.kind == StepKind::Teleport || rec.kind == StepKind::Cphase) return f.col(outcome - 1);
  const bool z = rec.axis == Axis::Z;
  const Complex e = std::exp((z ? -1.0 : 1.0) * kI * rec.theta);
  const ComplexVector a = f.col(z ? 0 : 1);
  const ComplexVector b = f.col(z ? 1 : 2);
  switch (outcome) {
    case 1: return 0.5 * (1.0 + e) * a + 0.5 * (1.0 - e) * b;
    case 2: return 0.5 * (1.0 - e) * a + 0.5 * (1.0 + e) * b;
    case 3: return f.col(z ? 2 : 0);
    default: throw ContractError("outcome label must be 1, 2 or 3");
  }
}

// Chain tensors T_m in the S^z basis (m = 0 ↔ S^z = +1).
const std::array<ComplexMatrix, 3>& sz_tensors() {
  static const auto t = [] {
    const ComplexMatrix f = frame_kets();
    const auto m = m_matrices();
    std::array<ComplexMatrix, 3> out;
    for (int s = 0; s < 3; ++s) {
      out[s] = ComplexMatrix::Zero(2, 2);
      for (int a = 0; a < 3; ++a) out[s] += f(s, a) * m[a] / std::sqrt(3.0);
    }
    return out;
  }();
  return t;
}

// exp(iπ|+1,+1><+1,+1|) on two spin-1 sites.
Complex interaction_phase(int m, int m_prime) { return (m == 0 && m_prime == 0) ? -1.0 : 1.0; }

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix basis_projector(int dim, int index) {
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  p(index, index) = 1.0;
  return p;
}

// Logical operator of one recorded step, from tensors and states alone.
ComplexMatrix replay_kraus(const TraceRecord& rec) {
  const auto& t = sz_tensors();
  switch (rec.kind) {
    case StepKind::Rotation:
    case StepKind::Teleport: {
      const ComplexVector g = site_state(rec, rec.outcome.at(0));
      ComplexMatrix k = ComplexMatrix::Zero(2, 2);
      for (int m = 0; m < 3; ++m) k += std::conj(g(m)) * t[m];
      return k;
    }
    case StepKind::Cphase: {
      const ComplexVector ga = site_state(rec, rec.outcome.at(0));
      const ComplexVector gb = site_state(rec, rec.outcome.at(1));
      ComplexMatrix k = ComplexMatrix::Zero(4, 4);
      for (int m = 0; m < 3; ++m)
        for (int mp = 0; mp < 3; ++mp)
          k += std::conj(ga(m)) * std::conj(gb(mp)) * interaction_phase(m, mp) * kron(t[m], t[mp]);
      return k;
    }
    case StepKind::Readout: return basis_projector(2, rec.outcome.at(0));
    case StepKind::Init: break;
  }
  throw ContractError("init has no single Kraus operator");
}

// Right-spin state after finding the left spin of (|up,down> - |down,up>)/√2.
ComplexVector singlet_partner(int left_spin) {
  ComplexVector v = ComplexVector::Zero(2);
  if (left_spin == 0) v(1) = 1.0;
  else v(0) = -1.0;
  return v;
}

}  // namespace

ComplexMatrix dense_logical_unitary(const LogicalCircuit& circuit) {
  if (circuit.wires < 1) throw ContractError("circuit has no wires");
  if (circuit.wires > 10) throw SizeError("dense logical unitary is limited to 10 wires");
  const SiteLayout layout = qubits(circuit.wires);
  ComplexMatrix u = identity(static_cast<int>(layout.size()));
  for (const auto& g : circuit.gates) {
    if (!is_unitary_gate(g)) continue;
    const auto wires = gate_wires(g);
    const ComplexMatrix op = gate_matrix(g);
    for (Eigen::Index c = 0; c < u.cols(); ++c)
      u.col(c) = apply_local(op, wires, layout, u.col(c));
  }
  return u;
}

ComplexVector ideal_output(const LogicalCircuit& circuit) {
  if (circuit.wires < 1) throw ContractError("circuit has no wires");
  if (circuit.wires > 16) throw SizeError("logical state is limited to 16 wires");
  const SiteLayout layout = qubits(circuit.wires);
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(layout.size()));
  psi(0) = 1.0;
  for (const auto& g : circuit.gates)
    if (is_unitary_gate(g)) psi = apply_local(gate_matrix(g), gate_wires(g), layout, psi);
  return psi;
}

ComplexMatrix frame_operator(std::span<const PauliFrame> frames) {
  std::vector<ComplexMatrix> factors;
  for (const auto& f : frames) factors.push_back(f.matrix());
  return kron_all(factors);
}

std::size_t ScriptedOutcomes::choose(std::span<const double> probabilities) {
  std::size_t k = 0;
  if (depth_ < script_.size()) {
    k = script_[depth_];
    if (k >= probabilities.size() || probabilities[k] < kMinWeight)
      throw InconsistencyError("scripted outcome has zero weight on replay");
    options_[depth_].assign(probabilities.begin(), probabilities.end());
  } else {
    while (k < probabilities.size() && probabilities[k] < kMinWeight) ++k;
    if (k == probabilities.size()) throw InconsistencyError("measurement has no possible outcome");
    script_.push_back(k);
    options_.emplace_back(probabilities.begin(), probabilities.end());
  }
  ++depth_;
  return k;
}

bool ScriptedOutcomes::advance() {
  script_.resize(depth_);
  options_.resize(depth_);
  while (!script_.empty()) {
    const auto& opts = options_.back();
    std::size_t k = script_.back() + 1;
    while (k < opts.size() && opts[k] < kMinWeight) ++k;
    if (k < opts.size()) {
      script_.back() = k;
      depth_ = 0;
      return true;
    }
    script_.pop_back();
    options_.pop_back();
  }
  depth_ = 0;
  return false;
}

double ScriptedOutcomes::probability() const {
  double p = 1.0;
  for (std::size_t d = 0; d < depth_; ++d) p *= options_[d][script_[d]];
  return p;
}

void for_each_branch(const LogicalCircuit& circuit, int sites,
                     const std::function<void(const BranchVisit&)>& visit, std::size_t cap) {
  ScriptedOutcomes source;
  std::size_t count = 0;
  do {
    if (++count > cap)
      throw SizeError("branch enumeration exceeds the cap of " + std::to_string(cap) + " branches");
    source.rewind();
    try {
      const RunTrace trace = execute(circuit, sites, source);
      visit({source.script(), trace.total_probability, &trace});
    } catch (const BudgetExhaustedError&) {
      visit({source.script(), source.probability(), nullptr});
    }
  } while (source.advance());
}

std::vector<BranchRecord> enumerate_branches(const LogicalCircuit& circuit, int sites,
                                             std::size_t cap) {
  std::vector<BranchRecord> out;
  for_each_branch(
      circuit, sites,
      [&](const BranchVisit& v) {
        BranchRecord r;
        r.choices = v.choices;
        r.probability = v.probability;
        r.completed = v.trace != nullptr;
        if (v.trace) {
          r.final_state = v.trace->final_state;
          r.final_frames = v.trace->final_frames;
          r.logical_bits = v.trace->logical_bits;
        }
        out.push_back(std::move(r));
      },
      cap);
  return out;
}

ReplayResult replay_trace(const LogicalCircuit& circuit, const RunTrace& trace) {
  const SiteLayout layout = qubits(circuit.wires);
  ReplayResult r;
  r.state = ComplexVector::Zero(static_cast<Eigen::Index>(layout.size()));
  r.state(0) = 1.0;
  ComplexVector before_readout;
  bool saved = false;
  for (const auto& rec : trace.records) {
    if (rec.kind == StepKind::Readout && !saved) {
      before_readout = r.state;
      saved = true;
    }
    ComplexVector next;
    if (rec.kind == StepKind::Init) {
      ComplexMatrix prepare = ComplexMatrix::Zero(2, 2);
      prepare.col(0) = singlet_partner(rec.outcome.at(0)) / std::sqrt(2.0);
      next = apply_local(prepare, rec.wires, layout, r.state);
    } else {
      next = apply_local(replay_kraus(rec), rec.wires, layout, r.state);
    }
    const double p = next.squaredNorm();
    r.max_step_error = std::max(r.max_step_error, std::abs(p - rec.probability));
    if (p < kMinWeight) throw InconsistencyError("replayed branch has zero weight");
    r.probability *= p;
    r.state = next / std::sqrt(p);
  }
  if (saved) r.state = before_readout;
  return r;
}

CircuitVerification verify_circuit(const LogicalCircuit& circuit, int sites, std::size_t cap) {
  CircuitVerification v;
  const ComplexVector ideal = ideal_output(circuit);
  const int n = circuit.wires;
  v.ideal_distribution.resize(static_cast<std::size_t>(ideal.size()));
  for (Eigen::Index i = 0; i < ideal.size(); ++i) v.ideal_distribution[i] = std::norm(ideal(i));
  v.decoded_distribution.assign(v.ideal_distribution.size(), 0.0);

  for_each_branch(
      circuit, sites,
      [&](const BranchVisit& b) {
        ++v.branches;
        v.probability_sum += b.probability;
        if (!b.trace) {
          ++v.truncated;
          return;
        }
        const RunTrace& t = *b.trace;
        v.completed_probability += b.probability;
        const ReplayResult replay = replay_trace(circuit, t);
        v.max_probability_error =
            std::max({v.max_probability_error, replay.max_step_error,
                      std::abs(replay.probability - t.total_probability)});
        const ComplexVector target = frame_operator(t.final_frames) * ideal;
        v.min_fidelity = std::min(v.min_fidelity, fidelity(replay.state, target));
        v.min_engine_fidelity = std::min(v.min_engine_fidelity, fidelity(t.final_state, replay.state));
        std::size_t index = 0;
        for (int w = 0; w < n; ++w) {
          const int bit = t.physical_bits[w] ^ int{t.final_frames[w].x};
          if (bit != t.logical_bits[w]) ++v.decode_mismatches;
          index = (index << 1) | static_cast<std::size_t>(bit);
        }
        v.decoded_distribution[index] += b.probability;
      },
      cap);

  if (v.completed_probability <= 0.0) {
    v.total_variation = 1.0;
    return v;
  }
  double tv = 0.0;
  for (std::size_t i = 0; i < v.decoded_distribution.size(); ++i) {
    v.decoded_distribution[i] /= v.completed_probability;
    tv += std::abs(v.decoded_distribution[i] - v.ideal_distribution[i]);
  }
  v.total_variation = 0.5 * tv;
  return v;
}

namespace {

// Full Hilbert space of every wire's chain, wire-major.
class PhysicalModel {
 public:
  PhysicalModel(int wires, int sites) : wires_(wires), spec_(ChainSpec::both(sites)) {
    const SiteLayout chain = spec_.layout();
    std::vector<int> dims;
    for (int w = 0; w < wires; ++w) dims.insert(dims.end(), chain.dims().begin(), chain.dims().end());
    layout_ = SiteLayout(dims);
    stages_.push_back(build_hamiltonian(spec_).terms());
    for (int j = 1; j <= sites + 1; ++j)
      stages_.push_back(residual_hamiltonian(spec_, ResidualIndex{j}).terms());
  }

  const SiteLayout& layout() const { return layout_; }
  int stride() const { return spec_.sites + 2; }

  ComplexVector ground_state() const {
    const GroundSpace g = ground_space(build_hamiltonian(spec_), 1e-9);
    if (g.degeneracy() != 1) throw InconsistencyError("chain ground state is not unique");
    ComplexMatrix psi = g.basis.col(0);
    ComplexMatrix acc = psi;
    for (int w = 1; w < wires_; ++w) acc = kron(acc, psi);
    return acc.col(0);
  }

  // Stage -1: before Init; m >= 0: m bulk sites consumed; kDone: read out.
  static constexpr int kDone = -2;

  double residual(const ComplexVector& psi, const std::vector<int>& stage) const {
    ComplexVector acc = ComplexVector::Zero(psi.size());
    for (int w = 0; w < wires_; ++w) {
      if (stage[w] == kDone) continue;
      for (const auto& term : stages_[static_cast<std::size_t>(stage[w] + 1)]) {
        std::vector<int> sites = term.sites;
        for (int& s : sites) s += w * stride();
        acc += spec_.coupling * apply_local(term.op, sites, layout_, psi);
      }
    }
    return acc.norm();
  }

 private:
  int wires_;
  ChainSpec spec_;
  SiteLayout layout_;
  std::vector<std::vector<Term>> stages_;
};

bool same_step(const TraceRecord& a, const TraceRecord& b) {
  return a.kind == b.kind && a.wires == b.wires && a.site == b.site && a.outcome == b.outcome &&
         a.axis == b.axis && a.theta == b.theta;
}

}  // namespace

PhysicalSimReport dense_physical_sim(const LogicalCircuit& circuit, int sites, std::size_t cap) {
  if (circuit.wires > 2 || sites > 4)
    throw SizeError("dense physical simulation is limited to 2 wires of 4 sites");
  if (sites < 1) throw ContractError("site budget must be at least 1");
  const PhysicalModel model(circuit.wires, sites);
  if (model.layout().size() > 110'000)
    throw SizeError("dense physical simulation exceeds the dimension cap");

  PhysicalSimReport rep;
  std::vector<ComplexVector> states = {model.ground_state()};
  std::vector<std::vector<int>> stages = {std::vector<int>(static_cast<std::size_t>(circuit.wires), -1)};
  std::vector<TraceRecord> path;
  rep.max_residual = model.residual(states[0], stages[0]);

  for_each_branch(
      circuit, sites,
      [&](const BranchVisit& b) {
        ++rep.branches;
        rep.probability_sum += b.probability;
        if (!b.trace) return;
        const auto& recs = b.trace->records;
        std::size_t common = 0;
        while (common < path.size() && common < recs.size() && same_step(path[common], recs[common]))
          ++common;
        path.assign(recs.begin(), recs.end());
        states.resize(common + 1);
        stages.resize(common + 1);
        for (std::size_t k = common; k < recs.size(); ++k) {
          const auto& rec = recs[k];
          ComplexVector psi = states.back();
          std::vector<int> stage = stages.back();
          const int base = rec.wires[0] * model.stride();
          const auto local = [&](const ComplexMatrix& op, std::vector<int> where) {
            psi = apply_local(op, where, model.layout(), psi);
          };
          switch (rec.kind) {
            case StepKind::Init:
              local(basis_projector(2, rec.outcome[0]), {base});
              stage[rec.wires[0]] = 0;
              break;
            case StepKind::Rotation:
            case StepKind::Teleport:
              local(projector(site_state(rec, rec.outcome[0])), {base + rec.site});
              ++stage[rec.wires[0]];
              break;
            case StepKind::Cphase: {
              const int other = rec.wires[1] * model.stride() + rec.site;
              ComplexMatrix u = ComplexMatrix::Zero(9, 9);
              for (int m = 0; m < 9; ++m) u(m, m) = interaction_phase(m / 3, m % 3);
              local(u, {base + rec.site, other});
              local(kron(projector(site_state(rec, rec.outcome[0])),
                         projector(site_state(rec, rec.outcome[1]))),
                    {base + rec.site, other});
              ++stage[rec.wires[0]];
              ++stage[rec.wires[1]];
              break;
            }
            case StepKind::Readout:
              local(basis_projector(2, rec.outcome[0]), {base + sites + 1});
              stage[rec.wires[0]] = PhysicalModel::kDone;
              break;
          }
          const double p = psi.squaredNorm();
          if (p < kMinWeight) throw InconsistencyError("dense branch has zero weight");
          psi /= std::sqrt(p);
          ++rep.steps;
          rep.max_probability_error = std::max(rep.max_probability_error, std::abs(p - rec.probability));
          if (rec.kind == StepKind::Rotation || rec.kind == StepKind::Teleport)
            rep.max_outcome_probability_error =
                std::max(rep.max_outcome_probability_error, std::abs(p - 1.0 / 3.0));
          if (rec.kind == StepKind::Cphase)
            rep.max_outcome_probability_error =
                std::max(rep.max_outcome_probability_error, std::abs(p - 1.0 / 9.0));
          const double res = model.residual(psi, stage);
          rep.max_residual = std::max(rep.max_residual, res);
          if (rec.kind == StepKind::Cphase && rec.success) {
            ++rep.cphase_successes;
            rep.max_cphase_residual = std::max(rep.max_cphase_residual, res);
          }
          states.push_back(std::move(psi));
          stages.push_back(std::move(stage));
        }
      },
      cap);
  return rep;
}

namespace {

int minimal_sites(const LogicalCircuit& c) {
  std::vector<int> cursor(static_cast<std::size_t>(c.wires), 0);
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::RZ || g.kind == GateKind::RX) ++cursor[g.wire];
    if (g.kind == GateKind::Cphase)
      cursor[g.wire] = cursor[g.partner] = std::max(cursor[g.wire], cursor[g.partner]) + 1;
  }
  return std::max(1, *std::max_element(cursor.begin(), cursor.end()));
}

LogicalCircuit bracket(int wires, std::vector<Gate> body) {
  LogicalCircuit c;
  c.wires = wires;
  for (int w = 0; w < wires; ++w) c.gates.push_back({GateKind::Init, w});
  c.gates.insert(c.gates.end(), body.begin(), body.end());
  for (int w = 0; w < wires; ++w) c.gates.push_back({GateKind::Readout, w});
  return c;
}

}  // namespace

std::vector<CorpusEntry> regression_corpus(std::uint64_t seed, std::size_t count) {
  // Site budgets keep 2^n · 3^{nN} · 2^n leaves well under the branch cap.
  constexpr int kSiteLimit[] = {0, 8, 4, 3};
  const double pi = std::numbers::pi;
  std::vector<CorpusEntry> corpus;
  corpus.push_back({bracket(1, {{GateKind::RZ, 0, -1, pi}, {GateKind::RX, 0, -1, pi}}), 3});
  corpus.push_back({bracket(2, {{GateKind::RX, 0, -1, pi / 2},
                                {GateKind::RX, 1, -1, pi / 2},
                                {GateKind::Cphase, 0, 1},
                                {GateKind::RX, 1, -1, pi / 2}}),
                    3});

  Rng rng(seed);
  const auto pick = [&](int n) { return static_cast<int>(rng.uniform() * n); };
  while (corpus.size() < count) {
    const int wires = 1 + static_cast<int>(corpus.size() % 3);
    const int gates = 1 + pick(6);
    std::vector<Gate> body;
    for (int k = 0; k < gates; ++k) {
      if (wires > 1 && rng.uniform() < 0.3) {
        const int a = pick(wires - 1);
        body.push_back({GateKind::Cphase, a, a + 1});
      } else {
        const GateKind kind = rng.uniform() < 0.5 ? GateKind::RZ : GateKind::RX;
        body.push_back({kind, pick(wires), -1, (2.0 * rng.uniform() - 1.0) * pi});
      }
    }
    LogicalCircuit c = bracket(wires, std::move(body));
    const int need = minimal_sites(c);
    if (need > kSiteLimit[wires]) continue;
    corpus.push_back({std::move(c), std::min(need + 1, kSiteLimit[wires])});
  }
  return corpus;
}

}  // namespace gmqc
