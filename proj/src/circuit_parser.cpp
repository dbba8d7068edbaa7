// Copyright 2026 The oqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Line-oriented circuit text format:
//
//   # comment
//   qubits 3
//   H 3
//   T 2 ; T 3
//   CP 1 2 pi/2
//
// The first non-blank line declares the register size; every later non-blank
// line is one slice whose gates are separated by ';'.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oqw/circuit.hpp"
#include "oqw/error.hpp"

namespace oqw {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kSyntax:
      return "syntax error";
    case ParseErrorKind::kUnknownGate:
      return "unknown gate";
    case ParseErrorKind::kQubitOutOfRange:
      return "qubit out of range";
    case ParseErrorKind::kOverlappingQubits:
      return "overlapping qubits";
  }
  return "error";
}

namespace {

constexpr double kPi = std::numbers::pi;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<double> parse_real(std::string_view s) {
  // std::from_chars for double is not available in every libstdc++ we target.
  const std::string buf(s);
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

// "pi", "-pi", "pi/k", "-pi/k", or a decimal literal in radians.
std::optional<double> parse_phase(std::string_view s) {
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  if (body.substr(0, 2) == "pi") {
    body.remove_prefix(2);
    double value = kPi;
    if (!body.empty()) {
      if (body.front() != '/') return std::nullopt;
      const auto divisor = parse_count(body.substr(1));
      if (!divisor || *divisor == 0) return std::nullopt;
      value = kPi / static_cast<double>(*divisor);
    }
    return negative ? -value : value;
  }
  return parse_real(s);
}

std::string render_phase(double theta) {
  for (std::size_t k : {1, 2, 4, 8, 16}) {
    const double v = kPi / static_cast<double>(k);
    const std::string suffix = k == 1 ? "" : "/" + std::to_string(k);
    if (theta == v) return "pi" + suffix;
    if (theta == -v) return "-pi" + suffix;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return buf;
}

std::optional<GateKind> kind_from_mnemonic(std::string_view name) {
  for (GateKind kind : {GateKind::kH, GateKind::kX, GateKind::kS, GateKind::kSdg, GateKind::kT,
                        GateKind::kTdg, GateKind::kR, GateKind::kPhase, GateKind::kCnot,
                        GateKind::kCPhase}) {
    if (mnemonic(kind) == name) return kind;
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  Slice parse_slice(std::string_view text, std::size_t line) {
    Slice slice;
    std::set<std::size_t> used;
    std::size_t start = 0;
    while (true) {
      const std::size_t semi = text.find(';', start);
      const std::string_view piece = trim(text.substr(start, semi == std::string_view::npos ? semi : semi - start));
      if (piece.empty()) throw ParseError(ParseErrorKind::kSyntax, line, "empty gate in slice");
      const Gate gate = parse_gate(piece, line);
      for (std::size_t q : gate.qubits()) {
        if (!used.insert(q).second) {
          throw ParseError(ParseErrorKind::kOverlappingQubits, line,
                           "qubit " + std::to_string(q) + " used twice in one slice");
        }
      }
      slice.gates.push_back(gate);
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    return slice;
  }

 private:
  std::size_t qubit(std::string_view word, std::size_t line) const {
    const auto q = parse_count(word);
    if (!q) throw ParseError(ParseErrorKind::kSyntax, line, "expected a qubit index, got '" + std::string(word) + "'");
    if (*q == 0 || *q > num_qubits_) {
      throw ParseError(ParseErrorKind::kQubitOutOfRange, line,
                       "qubit " + std::to_string(*q) + " not in 1.." + std::to_string(num_qubits_));
    }
    return *q;
  }

  double phase(std::string_view word, std::size_t line) const {
    const auto theta = parse_phase(word);
    if (!theta) throw ParseError(ParseErrorKind::kSyntax, line, "bad phase '" + std::string(word) + "'");
    return *theta;
  }

  Gate parse_gate(std::string_view text, std::size_t line) const {
    const auto words = split_words(text);
    const auto kind = kind_from_mnemonic(words.front());
    if (!kind) throw ParseError(ParseErrorKind::kUnknownGate, line, "'" + std::string(words.front()) + "'");
    const std::size_t expected = 1 + arity(*kind) + (is_parametric(*kind) ? 1 : 0);
    if (words.size() != expected) {
      throw ParseError(ParseErrorKind::kSyntax, line,
                       std::string(mnemonic(*kind)) + " takes " + std::to_string(expected - 1) + " arguments");
    }
    switch (*kind) {
      case GateKind::kPhase:
        return Gate::phase(qubit(words[1], line), phase(words[2], line));
      case GateKind::kCnot:
      case GateKind::kCPhase: {
        const std::size_t a = qubit(words[1], line);
        const std::size_t b = qubit(words[2], line);
        if (a == b) {
          throw ParseError(ParseErrorKind::kOverlappingQubits, line,
                           "control and target are both qubit " + std::to_string(a));
        }
        return *kind == GateKind::kCnot ? Gate::cnot(a, b) : Gate::cphase(a, b, phase(words[3], line));
      }
      default:
        return Gate::single(*kind, qubit(words[1], line));
    }
  }

  std::size_t num_qubits_;
};

}  // namespace

Circuit parse_circuit(std::string_view text, std::string name) {
  std::optional<std::size_t> num_qubits;
  std::optional<Parser> parser;
  std::vector<Slice> slices;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!num_qubits) {
      const auto words = split_words(line);
      if (words.size() != 2 || words[0] != "qubits") {
        throw ParseError(ParseErrorKind::kSyntax, line_no, "expected 'qubits <n>'");
      }
      const auto n = parse_count(words[1]);
      if (!n || *n == 0 || *n > 16) {
        throw ParseError(ParseErrorKind::kSyntax, line_no, "qubit count must be in 1..16");
      }
      num_qubits = *n;
      parser.emplace(*n);
      continue;
    }
    slices.push_back(parser->parse_slice(line, line_no));
  }
  if (!num_qubits) throw ParseError(ParseErrorKind::kSyntax, line_no, "missing 'qubits <n>' header");
  return {std::move(name), *num_qubits, std::move(slices)};
}

std::string render_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "# " << circuit.name() << "\n";
  out << "qubits " << circuit.num_qubits() << "\n";
  for (const Slice& slice : circuit.slices()) {
    for (std::size_t g = 0; g < slice.gates.size(); ++g) {
      const Gate& gate = slice.gates[g];
      if (g > 0) out << " ; ";
      out << mnemonic(gate.kind());
      for (std::size_t q : gate.qubits()) out << ' ' << q;
      if (is_parametric(gate.kind())) out << ' ' << render_phase(gate.theta());
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace oqw
