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

#include "gmqc/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gmqc/errors.hpp"

namespace gmqc {

namespace {

StepKind step_from_name(const std::string& s) {
  for (StepKind k : {StepKind::Init, StepKind::Rotation, StepKind::Teleport, StepKind::Cphase,
                     StepKind::Readout})
    if (step_name(k) == s) return k;
  throw ContractError("unknown step kind '" + s + "'");
}

Axis axis_from_name(const std::string& s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  throw ContractError("unknown axis '" + s + "'");
}

PauliFrame frame_from_json(const Json& j) {
  const auto f = PauliFrame::parse(j.get<std::string>());
  if (!f) throw ContractError("unknown Pauli frame '" + j.get<std::string>() + "'");
  return *f;
}

Json frames_to_json(const std::vector<PauliFrame>& frames) {
  Json out = Json::array();
  for (const auto& f : frames) out.push_back(f.name());
  return out;
}

std::vector<PauliFrame> frames_from_json(const Json& j) {
  std::vector<PauliFrame> out;
  for (const auto& f : j) out.push_back(frame_from_json(f));
  return out;
}

Json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

double number_from(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

Json to_json(const TraceRecord& rec) {
  Json j;
  j["kind"] = step_name(rec.kind);
  j["gate"] = rec.gate_index;
  j["wires"] = rec.wires;
  j["site"] = rec.site;
  if (rec.kind == StepKind::Rotation) {
    j["axis"] = std::string(1, axis_name(rec.axis));
    j["theta"] = rec.theta;
  }
  j["outcome"] = rec.outcome;
  j["probability"] = rec.probability;
  j["branch_probabilities"] = rec.branch_probabilities;
  j["frame_delta"] = frames_to_json(rec.frame_delta);
  j["success"] = rec.success;
  return j;
}

TraceRecord record_from_json(const Json& j) {
  return guarded("trace record", [&] {
    TraceRecord rec;
    rec.kind = step_from_name(j.at("kind").get<std::string>());
    rec.gate_index = j.at("gate").get<std::size_t>();
    rec.wires = j.at("wires").get<std::vector<int>>();
    rec.site = j.at("site").get<int>();
    if (j.contains("axis")) rec.axis = axis_from_name(j.at("axis").get<std::string>());
    if (j.contains("theta")) rec.theta = j.at("theta").get<double>();
    rec.outcome = j.at("outcome").get<std::vector<int>>();
    rec.probability = j.at("probability").get<double>();
    rec.branch_probabilities = j.at("branch_probabilities").get<std::vector<double>>();
    rec.frame_delta = frames_from_json(j.at("frame_delta"));
    rec.success = j.at("success").get<bool>();
    return rec;
  });
}

Json to_json(const RunTrace& trace) {
  Json j;
  j["wires"] = trace.wires;
  j["sites"] = trace.sites;
  Json records = Json::array();
  for (const auto& r : trace.records) records.push_back(to_json(r));
  j["records"] = std::move(records);
  j["final_frames"] = frames_to_json(trace.final_frames);
  Json state = Json::array();
  for (Eigen::Index i = 0; i < trace.final_state.size(); ++i)
    state.push_back({trace.final_state(i).real(), trace.final_state(i).imag()});
  j["final_state"] = std::move(state);
  j["physical_bits"] = trace.physical_bits;
  j["logical_bits"] = trace.logical_bits;
  j["sites_consumed"] = trace.sites_consumed;
  j["total_probability"] = trace.total_probability;
  return j;
}

RunTrace trace_from_json(const Json& j) {
  return guarded("run trace", [&] {
    RunTrace t;
    t.wires = j.at("wires").get<int>();
    t.sites = j.at("sites").get<int>();
    for (const auto& r : j.at("records")) t.records.push_back(record_from_json(r));
    t.final_frames = frames_from_json(j.at("final_frames"));
    const auto& state = j.at("final_state");
    t.final_state.resize(static_cast<Eigen::Index>(state.size()));
    for (std::size_t i = 0; i < state.size(); ++i)
      t.final_state(static_cast<Eigen::Index>(i)) = {state[i].at(0).get<double>(),
                                                     state[i].at(1).get<double>()};
    t.physical_bits = j.at("physical_bits").get<std::vector<int>>();
    t.logical_bits = j.at("logical_bits").get<std::vector<int>>();
    t.sites_consumed = j.at("sites_consumed").get<std::vector<int>>();
    t.total_probability = j.at("total_probability").get<double>();
    return t;
  });
}

Json to_json(const Check& check) {
  return {{"name", check.name},
          {"value", number(check.value)},
          {"tolerance", number(check.tolerance)},
          {"passed", check.passed}};
}

Check check_from_json(const Json& j) {
  return guarded("check", [&] {
    return Check{j.at("name").get<std::string>(), number_from(j.at("value")),
                 number_from(j.at("tolerance")), j.at("passed").get<bool>()};
  });
}

Json to_json(const ReportDocument& doc) {
  Json j;
  j["command"] = doc.command;
  j["input"] = doc.input;
  if (doc.seed) j["seed"] = *doc.seed;
  j["results"] = doc.results;
  j["tolerances"] = doc.tolerances;
  Json checks = Json::array();
  for (const auto& c : doc.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["passed"] = doc.passed;
  if (doc.wall_time) j["wall_time"] = *doc.wall_time;
  return j;
}

ReportDocument report_from_json(const Json& j) {
  return guarded("report", [&] {
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.input = j.at("input");
    if (j.contains("seed")) doc.seed = j.at("seed").get<std::uint64_t>();
    doc.results = j.at("results");
    doc.tolerances = j.at("tolerances");
    for (const auto& c : j.at("checks")) doc.checks.push_back(check_from_json(c));
    doc.passed = j.at("passed").get<bool>();
    if (j.contains("wall_time")) doc.wall_time = j.at("wall_time").get<double>();
    return doc;
  });
}

std::string serialize(const ReportDocument& doc, bool pretty) {
  return to_json(doc).dump(pretty ? 2 : -1) + "\n";
}

std::string format_trace(const RunTrace& trace) {
  std::ostringstream out;
  out << "wires " << trace.wires << ", sites per chain " << trace.sites << ", "
      << trace.records.size() << " measurements\n";
  char line[160];
  std::snprintf(line, sizeof line, "%4s %5s %-9s %-6s %5s %-8s %9s %-12s %s\n", "#", "gate",
                "step", "wires", "site", "outcome", "prob", "frame", "angle");
  out << line;
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const auto& r = trace.records[i];
    std::string wires, outcome, frames;
    for (int w : r.wires) wires += (wires.empty() ? "" : ",") + std::to_string(w);
    for (int o : r.outcome) outcome += (outcome.empty() ? "" : ",") + std::to_string(o);
    for (const auto& f : r.frame_delta) frames += (frames.empty() ? "" : ",") + f.name();
    if (r.kind != StepKind::Init && r.kind != StepKind::Readout && !r.success) frames += " fail";
    std::string angle;
    if (r.kind == StepKind::Rotation) {
      char buf[48];
      std::snprintf(buf, sizeof buf, "R%c(%.6f)", axis_name(r.axis), r.theta);
      angle = buf;
    }
    std::snprintf(line, sizeof line, "%4zu %5zu %-9s %-6s %5d %-8s %9.6f %-12s %s\n", i,
                  r.gate_index, std::string(step_name(r.kind)).c_str(), wires.c_str(), r.site,
                  outcome.c_str(), r.probability, frames.c_str(), angle.c_str());
    out << line;
  }
  out << "final frames:";
  for (std::size_t w = 0; w < trace.final_frames.size(); ++w)
    out << ' ' << w << '=' << trace.final_frames[w].name();
  out << "\nsites consumed:";
  for (int s : trace.sites_consumed) out << ' ' << s;
  out << "\nlogical bits:";
  for (int b : trace.logical_bits) out << ' ' << b;
  out << "\ntotal probability: " << trace.total_probability << '\n';
  return out.str();
}

}  // namespace gmqc
