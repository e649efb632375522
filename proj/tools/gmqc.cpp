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

// Command-line front end: spectra, protocol runs, verification suites and
// trace inspection. Exit codes: 0 ok, 1 usage or parse error, 2 size cap,
// 3 site budget exhausted, 4 verification failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gmqc/circuit.hpp"
#include "gmqc/compiler.hpp"
#include "gmqc/errors.hpp"
#include "gmqc/hamiltonian.hpp"
#include "gmqc/report.hpp"
#include "gmqc/verify.hpp"

namespace {

using namespace gmqc;

enum Exit { kOk = 0, kUsage = 1, kSize = 2, kBudget = 3, kVerify = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CircuitError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const int lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const std::string tail = text.substr(dots + 2);
    const int hi = std::stoi(tail, &used);
    if (used != tail.size() || hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CircuitError("--n expects N or LO..HI, got '" + text + "'");
  }
}

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  void stamp(ReportDocument& doc) const {
    if (enabled_)
      doc.wall_time =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

void emit(const ReportDocument& doc, bool compact) { std::cout << serialize(doc, !compact); }

struct SpectrumArgs {
  std::string n = "2..5";
  std::string boundaries = "both";
};

int cmd_spectrum(const SpectrumArgs& args, bool timing, bool compact) {
  const Timer timer(timing);
  const auto [lo, hi] = parse_range(args.n);
  std::vector<std::pair<std::string, ChainSpec (*)(int)>> configs;
  if (args.boundaries == "both" || args.boundaries == "all") configs.push_back({"both", ChainSpec::both});
  if (args.boundaries == "one" || args.boundaries == "all") configs.push_back({"one", ChainSpec::right_only});
  if (args.boundaries == "none" || args.boundaries == "all") configs.push_back({"none", ChainSpec::none});

  ReportDocument doc;
  doc.command = "spectrum";
  doc.input = {{"n", args.n}, {"boundaries", args.boundaries}};
  doc.tolerances = {{"ground_band", 1e-9}, {"gap_threshold", 1e-6}, {"string_algebra", 1e-10}};
  Json rows = Json::array();
  for (const auto& [name, make] : configs) {
    for (int n = lo; n <= hi; ++n) {
      const ChainSpec spec = make(n);
      spec.validate();
      const Hamiltonian h = build_hamiltonian(spec);
      const SpectralSummary s = spectral_summary(spec);
      const GroundSpace g = ground_space(h, 1e-9);
      Json row = {{"N", n},
                  {"boundaries", name},
                  {"dimension", spec.dimension()},
                  {"ground_energy", s.ground_energy},
                  {"degeneracy", s.degeneracy},
                  {"gap", s.gap},
                  {"frustration_residual", frustration_residual(h, g.basis)}};
      // Dense string operators stay affordable up to a few thousand states.
      if (spec.has_right() && spec.dimension() <= 2000) {
        double comm = 0.0, anti = 0.0;
        for (int j = 1; j <= n; ++j) {
          const ComplexMatrix hj = residual_hamiltonian(spec, ResidualIndex{j}).dense();
          const ComplexMatrix sx = string_operator(spec, ResidualIndex{j}, Axis::X);
          const ComplexMatrix sz = string_operator(spec, ResidualIndex{j}, Axis::Z);
          comm = std::max({comm, bracket_norm(sx, hj, -1), bracket_norm(sz, hj, -1)});
          anti = std::max(anti, bracket_norm(sx, sz, +1));
        }
        row["string_commutator_norm"] = comm;
        row["string_anticommutator_norm"] = anti;
      }
      rows.push_back(std::move(row));
    }
  }
  doc.results = {{"spectra", std::move(rows)}};
  timer.stamp(doc);
  emit(doc, compact);
  return kOk;
}

struct RunArgs {
  std::string circuit;
  int sites = 0;
  std::uint64_t seed = 0;
  std::string format = "json";
};

int cmd_run(const RunArgs& args, bool timing, bool compact) {
  const Timer timer(timing);
  const LogicalCircuit circuit = parse_circuit(read_file(args.circuit));
  const auto diag = validate(circuit);
  if (!diag.empty()) {
    for (const auto& d : diag) std::cerr << "error: " << d << '\n';
    return kUsage;
  }
  ReportDocument doc;
  doc.command = "run";
  doc.input = {{"circuit", to_text(circuit)}, {"sites", args.sites}};
  doc.seed = args.seed;
  int code = kOk;
  try {
    const RunTrace trace = run(circuit, args.sites, args.seed);
    if (args.format == "text") {
      std::cout << format_trace(trace);
      return kOk;
    }
    doc.results = {{"trace", to_json(trace)}, {"expected_sites", expected_sites(circuit)}};
  } catch (const BudgetExhaustedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    doc.passed = false;
    doc.results = {{"error", e.what()}, {"gate", e.gate_index()}, {"wire", e.wire()}};
    code = kBudget;
  }
  timer.stamp(doc);
  emit(doc, compact);
  return code;
}

int cmd_verify(const std::string& suite, bool timing, bool compact) {
  const Timer timer(timing);
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names = {suite};
  ReportDocument doc;
  doc.command = "verify";
  doc.input = {{"suite", suite}};
  Json details = Json::object();
  for (const auto& name : names) {
    SuiteResult r = run_suite(name);
    for (auto& c : r.checks) {
      c.name = name + ": " + c.name;
      doc.checks.push_back(c);
      std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << " = " << c.value << '\n';
    }
    details[name] = r.details;
  }
  doc.passed = std::all_of(doc.checks.begin(), doc.checks.end(), [](const Check& c) { return c.passed; });
  doc.results = std::move(details);
  timer.stamp(doc);
  emit(doc, compact);
  return doc.passed ? kOk : kVerify;
}

int cmd_trace(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw CircuitError(std::string("invalid JSON: ") + e.what());
  }
  if (j.contains("results") && j["results"].contains("trace")) j = j["results"]["trace"];
  std::cout << format_trace(trace_from_json(j));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground-code measurement-based quantum computation on AKLT chains"};
  app.require_subcommand(1);
  app.fallthrough();
  bool timing = false, compact = false;
  app.add_flag("--timing", timing, "Include wall time in the report");
  app.add_flag("--compact", compact, "Single-line JSON");

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Ground energy, degeneracy and gap per chain length");
  spectrum->add_option("--n", sa.n, "Chain length N or range LO..HI")->capture_default_str();
  spectrum->add_option("--boundaries", sa.boundaries, "Boundary spins")
      ->check(CLI::IsMember({"both", "one", "none", "all"}))
      ->capture_default_str();

  RunArgs ra;
  auto* runc = app.add_subcommand("run", "Execute a circuit with sampled outcomes");
  runc->add_option("circuit", ra.circuit, "Circuit file (text or JSON)")->required();
  runc->add_option("--sites", ra.sites, "Bulk sites per chain")->required()->check(CLI::PositiveNumber);
  runc->add_option("--seed", ra.seed, "Outcome generator seed")->required();
  runc->add_option("--format", ra.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", suite, "spectra, mps, protocol, oracle or all")
      ->required()
      ->check(CLI::IsMember({"spectra", "mps", "protocol", "oracle", "all"}));

  std::string trace_path;
  auto* trace = app.add_subcommand("trace", "Pretty-print a stored run trace or run report");
  trace->add_option("file", trace_path, "JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(sa, timing, compact);
    if (*runc) return cmd_run(ra, timing, compact);
    if (*verify) return cmd_verify(suite, timing, compact);
    if (*trace) return cmd_trace(trace_path);
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSize;
  } catch (const BudgetExhaustedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const CircuitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
