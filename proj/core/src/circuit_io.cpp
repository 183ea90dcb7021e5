// Copyright 2026 The qwsim Authors
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

#include "qwsim/circuit_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "qwsim/errors.hpp"
#include "qwsim/gates.hpp"

namespace qwsim {

namespace {

constexpr double kPrintZero = 1e-12;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0) {
    return std::nullopt;
  }
  return value;
}

int wire_arg(std::string_view token, std::size_t line) {
  const auto v = parse_int(token);
  if (!v) {
    throw ParseError(line, "expected a wire number, got '" +
                               std::string(token) + "'");
  }
  return *v;
}

struct Statement {
  std::string name;
  std::vector<int> positional;
  std::vector<Control> controls;
};

Statement parse_statement(std::string_view text, std::size_t line) {
  const auto words = split_words(text);
  if (words.empty()) throw ParseError(line, "empty gate in layer");
  Statement st;
  st.name = upper(words[0]);
  for (std::size_t k = 1; k < words.size(); ++k) {
    const std::string_view w = words[k];
    const auto eq = w.find('=');
    if (eq == std::string_view::npos) {
      if (!st.controls.empty()) {
        throw ParseError(line, "target '" + std::string(w) +
                                   "' after control list");
      }
      st.positional.push_back(wire_arg(w, line));
      continue;
    }
    const std::string key = upper(w.substr(0, eq));
    const int wire = wire_arg(w.substr(eq + 1), line);
    if (key == "C") {
      st.controls.push_back({wire, true});
    } else if (key == "A") {
      st.controls.push_back({wire, false});
    } else {
      throw ParseError(line, "unknown option '" + std::string(w) + "'");
    }
  }
  return st;
}

void expect_positional(const Statement& st, std::size_t count,
                       std::size_t line) {
  if (st.positional.size() != count) {
    throw ParseError(line, st.name + " expects " + std::to_string(count) +
                               " wire(s), got " +
                               std::to_string(st.positional.size()));
  }
}

GateOp to_op(const Statement& st, std::size_t line) {
  GateOp op;
  try {
    if (st.name == "MEASURE") {
      expect_positional(st, 1, line);
      if (!st.controls.empty()) {
        throw ParseError(line, "MEASURE takes no controls");
      }
      op.kind = GateOp::Kind::kMeasure;
      op.gate = "MEASURE";
      op.targets = st.positional;
      return op;
    }

    ControlSpec controls;
    if (st.name == "CX") {
      expect_positional(st, 2, line);
      op.gate = "X";
      controls.add_control(st.positional[0]);
      op.targets = {st.positional[1]};
    } else if (st.name == "CCX") {
      expect_positional(st, 3, line);
      op.gate = "X";
      controls.add_control(st.positional[0]);
      controls.add_control(st.positional[1]);
      op.targets = {st.positional[2]};
    } else if (st.name == "CSWAP") {
      expect_positional(st, 3, line);
      op.gate = "SWAP";
      controls.add_control(st.positional[0]);
      op.targets = {st.positional[1], st.positional[2]};
    } else {
      const GateDef& def = find_gate(st.name);
      expect_positional(st, static_cast<std::size_t>(def.arity), line);
      op.gate = def.name;
      op.targets = st.positional;
    }
    for (const auto& c : st.controls) controls.add(c);
    op.controls = std::move(controls);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
  return op;
}

std::vector<int> wires_of(const GateOp& op) {
  std::vector<int> out = op.targets;
  for (const auto& c : op.controls.entries()) out.push_back(c.wire);
  return out;
}

}  // namespace

Circuit parse_circuit(std::string_view text, int max_qubits) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (!circuit) {
      const auto words = split_words(line);
      if (upper(words[0]) != "QUBITS") {
        throw ParseError(line_no, "expected 'qubits <n>' header");
      }
      if (words.size() != 2) {
        throw ParseError(line_no, "'qubits' takes exactly one number");
      }
      const auto n = parse_int(words[1]);
      if (!n || *n < 1 || *n > max_qubits) {
        throw ParseError(line_no, "qubit count must be in [1, " +
                                      std::to_string(max_qubits) + "]");
      }
      circuit.emplace(*n);
      continue;
    }

    std::set<int> layer_wires;
    std::size_t start = 0;
    while (start <= line.size()) {
      const auto semi = std::min(line.find(';', start), line.size());
      const Statement st =
          parse_statement(trim(line.substr(start, semi - start)), line_no);
      start = semi + 1;
      if (st.name == "QUBITS") {
        throw ParseError(line_no, "duplicate 'qubits' header");
      }
      GateOp op = to_op(st, line_no);
      for (int w : wires_of(op)) {
        if (!layer_wires.insert(w).second) {
          throw ParseError(line_no, "wire " + std::to_string(w) +
                                        " used twice in one layer");
        }
      }
      try {
        circuit->append(std::move(op));
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
    }
  }
  if (!circuit) {
    throw ParseError(std::max<std::size_t>(line_no, 1),
                     "missing 'qubits <n>' header");
  }
  return std::move(*circuit);
}

Circuit load_circuit(const std::string& path, int max_qubits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_circuit(buffer.str(), max_qubits);
}

std::string format_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.num_qubits() << '\n';
  for (const auto& op : circuit.ops()) {
    out << op.gate;
    for (int t : op.targets) out << ' ' << t;
    for (const auto& c : op.controls.entries()) {
      out << ' ' << (c.is_control ? "c=" : "a=") << c.wire;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_real(double x) {
  if (std::abs(x) < kPrintZero) return "0";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  std::string s(buf);
  if (s == "-0") return "0";
  return s;
}

std::string format_complex(Complex z) {
  const bool re_zero = std::abs(z.real()) < kPrintZero;
  const bool im_zero = std::abs(z.imag()) < kPrintZero;
  if (im_zero) return format_real(z.real());
  if (re_zero) return format_real(z.imag()) + "i";
  return format_real(z.real()) + (z.imag() < 0 ? "-" : "+") +
         format_real(std::abs(z.imag())) + "i";
}

std::string format_basis(std::uint64_t index, int num_qubits) {
  std::string out(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 0; q < num_qubits; ++q) {
    if ((index >> q) & 1U) out[num_qubits - 1 - q] = '1';
  }
  return out;
}

}  // namespace qwsim
