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

#include "gmqc/circuit.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "gmqc/errors.hpp"

namespace gmqc {

std::string_view gate_keyword(GateKind kind) {
  switch (kind) {
    case GateKind::Init: return "INIT";
    case GateKind::RZ: return "RZ";
    case GateKind::RX: return "RX";
    case GateKind::Cphase: return "CPHASE";
    case GateKind::Readout: return "READ";
  }
  return "?";
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

template <typename T>
bool parse_number(std::string_view word, T& out) {
  const auto* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, out);
  return ec == std::errc() && ptr == end;
}

void set_wire_count(LogicalCircuit& c) {
  int top = -1;
  for (const auto& g : c.gates) top = std::max({top, g.wire, g.partner});
  c.wires = top + 1;
}

}  // namespace

LogicalCircuit parse_circuit_text(std::string_view text) {
  LogicalCircuit c;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    const auto fail = [&](const std::string& why) {
      throw CircuitError("line " + std::to_string(line_no) + ": " + why);
    };
    std::string op(words[0]);
    for (auto& ch : op) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    Gate g;
    std::size_t expected = 2;
    if (op == "INIT") g.kind = GateKind::Init;
    else if (op == "READ") g.kind = GateKind::Readout;
    else if (op == "RZ") { g.kind = GateKind::RZ; expected = 3; }
    else if (op == "RX") { g.kind = GateKind::RX; expected = 3; }
    else if (op == "CPHASE") { g.kind = GateKind::Cphase; expected = 3; }
    else fail("unknown gate '" + std::string(words[0]) + "'");

    if (words.size() != expected)
      fail(std::string(gate_keyword(g.kind)) + " expects " + std::to_string(expected - 1) +
           " argument(s)");
    if (!parse_number(words[1], g.wire) || g.wire < 0)
      fail("bad wire index '" + std::string(words[1]) + "'");
    if (g.kind == GateKind::Cphase) {
      if (!parse_number(words[2], g.partner) || g.partner < 0)
        fail("bad wire index '" + std::string(words[2]) + "'");
    } else if (expected == 3) {
      if (!parse_number(words[2], g.theta) || !std::isfinite(g.theta))
        fail("bad angle '" + std::string(words[2]) + "'");
    }
    c.gates.push_back(g);
  }
  set_wire_count(c);
  return c;
}

LogicalCircuit parse_circuit_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CircuitError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw CircuitError("circuit JSON must be an array of gate objects");
  LogicalCircuit c;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const auto fail = [&](const std::string& why) {
      throw CircuitError("gate " + std::to_string(i) + ": " + why);
    };
    if (!item.is_object() || !item.contains("op") || !item["op"].is_string())
      fail("expected an object with a string 'op'");
    const auto wire_field = [&](const char* key) {
      if (!item.contains(key) || !item[key].is_number_integer() || item[key].get<int>() < 0)
        fail(std::string("missing or bad '") + key + "'");
      return item[key].get<int>();
    };
    std::string op = item["op"].get<std::string>();
    for (auto& ch : op) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    Gate g;
    if (op == "INIT" || op == "READ") {
      g.kind = op == "INIT" ? GateKind::Init : GateKind::Readout;
      g.wire = wire_field("wire");
    } else if (op == "RZ" || op == "RX") {
      g.kind = op == "RZ" ? GateKind::RZ : GateKind::RX;
      g.wire = wire_field("wire");
      if (!item.contains("theta") || !item["theta"].is_number()) fail("missing or bad 'theta'");
      g.theta = item["theta"].get<double>();
    } else if (op == "CPHASE") {
      g.kind = GateKind::Cphase;
      g.wire = wire_field("a");
      g.partner = wire_field("b");
    } else {
      fail("unknown gate '" + item["op"].get<std::string>() + "'");
    }
    c.gates.push_back(g);
  }
  set_wire_count(c);
  return c;
}

LogicalCircuit parse_circuit(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != text.npos && text[first] == '[') return parse_circuit_json(text);
  return parse_circuit_text(text);
}

std::string to_text(const LogicalCircuit& circuit) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& g : circuit.gates) {
    out << gate_keyword(g.kind) << ' ' << g.wire;
    if (g.kind == GateKind::Cphase) out << ' ' << g.partner;
    if (g.kind == GateKind::RZ || g.kind == GateKind::RX) out << ' ' << g.theta;
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> validate(const LogicalCircuit& circuit) {
  std::vector<std::string> diag;
  if (circuit.wires < 1) diag.push_back("circuit has no wires");
  enum class Phase { Fresh, Live, Done };
  std::vector<Phase> phase(static_cast<std::size_t>(std::max(circuit.wires, 0)), Phase::Fresh);

  const auto in_range = [&](int w) { return w >= 0 && w < circuit.wires; };
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const auto& g = circuit.gates[i];
    const std::string where = "gate " + std::to_string(i) + " (" +
                              std::string(gate_keyword(g.kind)) + "): ";
    std::vector<int> touched = {g.wire};
    if (g.kind == GateKind::Cphase) touched.push_back(g.partner);
    bool ok = true;
    for (int w : touched) {
      if (!in_range(w)) {
        diag.push_back(where + "wire " + std::to_string(w) + " out of range");
        ok = false;
      }
    }
    if (!ok) continue;
    if ((g.kind == GateKind::RZ || g.kind == GateKind::RX) && !std::isfinite(g.theta))
      diag.push_back(where + "angle is not finite");
    if (g.kind == GateKind::Cphase) {
      if (g.wire == g.partner) {
        diag.push_back(where + "CPHASE needs two distinct wires");
        continue;
      }
      if (std::abs(g.wire - g.partner) != 1)
        diag.push_back(where + "wires " + std::to_string(g.wire) + " and " +
                       std::to_string(g.partner) + " are not adjacent");
    }
    for (int w : touched) {
      auto& p = phase[static_cast<std::size_t>(w)];
      if (g.kind == GateKind::Init) {
        if (p != Phase::Fresh) diag.push_back(where + "wire " + std::to_string(w) + " initialised twice");
        p = Phase::Live;
        continue;
      }
      if (p == Phase::Fresh) {
        diag.push_back(where + "wire " + std::to_string(w) + " used before INIT (missing INIT)");
        p = Phase::Live;
      } else if (p == Phase::Done) {
        diag.push_back(where + "wire " + std::to_string(w) + " used after READ");
      }
      if (g.kind == GateKind::Readout) p = Phase::Done;
    }
  }
  for (std::size_t w = 0; w < phase.size(); ++w) {
    if (phase[w] == Phase::Fresh) diag.push_back("wire " + std::to_string(w) + " is never initialised (missing INIT)");
    else if (phase[w] == Phase::Live) diag.push_back("wire " + std::to_string(w) + " has no READ");
  }
  return diag;
}

}  // namespace gmqc
