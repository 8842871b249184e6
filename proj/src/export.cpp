// Copyright 2026 The fcnot Authors
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

#include "fcnot/export.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace fcnot {

namespace {

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
    return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
  }));
}

std::string repeat(const std::string& glyph, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) out += glyph;
  return out;
}

std::string gate_label(const Gate& g) {
  switch (g.kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "S†";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "⊕";
    case GateKind::R1: return "R1(" + g.angle.to_pretty() + ")";
    case GateKind::R1dg: return "R1†(" + g.angle.to_pretty() + ")";
  }
  return "?";
}

struct Cell {
  std::string text;  // empty: plain wire
};

struct Column {
  std::vector<Cell> cells;  // one per qubit row, plus the classical row
  bool classical_active = false;
};

class DiagramBuilder {
 public:
  explicit DiagramBuilder(const Circuit& c)
      : qubits_(c.qubit_count()),
        rows_(c.qubit_count() + (c.has_measurement() ? 1 : 0)),
        next_free_(rows_, 0) {}

  void place_gate(const Gate& g, bool conditioned) {
    std::size_t lo = g.target;
    std::size_t hi = g.target;
    if (g.kind == GateKind::CNOT) {
      lo = std::min(g.control, g.target);
      hi = std::max(g.control, g.target);
    }
    std::size_t col = floor_;
    for (std::size_t r = lo; r <= hi; ++r) col = std::max(col, next_free_[r]);
    Column& column = column_at(col);
    for (std::size_t r = lo; r <= hi; ++r) {
      column.cells[r].text = "┼";
      next_free_[r] = col + 1;
    }
    column.cells[g.target].text = gate_label(g);
    if (g.kind == GateKind::CNOT) column.cells[g.control].text = "●";
    if (conditioned) column.cells[qubits_].text = "●";
  }

  void place_measurement(std::size_t q) {
    const std::size_t col = barrier();
    Column& column = column_at(col);
    column.cells[q].text = "M";
    for (std::size_t r = q + 1; r < qubits_; ++r) column.cells[r].text = "╫";
    column.cells[qubits_].text = "╩";
    for (std::size_t i = col; i < columns_.size(); ++i) columns_[i].classical_active = true;
    classical_from_ = std::min(classical_from_, col);
    floor_ = col + 1;
    std::fill(next_free_.begin(), next_free_.end(), floor_);
  }

  std::size_t barrier() {
    std::size_t col = floor_;
    for (std::size_t v : next_free_) col = std::max(col, v);
    floor_ = col;
    std::fill(next_free_.begin(), next_free_.end(), col);
    return col;
  }

  std::vector<Column> take() {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      columns_[i].classical_active = i >= classical_from_;
    }
    return std::move(columns_);
  }

 private:
  Column& column_at(std::size_t col) {
    while (columns_.size() <= col) {
      Column column;
      column.cells.resize(rows_);
      columns_.push_back(std::move(column));
    }
    return columns_[col];
  }

  std::size_t qubits_;
  std::size_t rows_;
  std::vector<std::size_t> next_free_;
  std::vector<Column> columns_;
  std::size_t floor_ = 0;
  std::size_t classical_from_ = static_cast<std::size_t>(-1);
};

std::string render_cell(const std::string& text, std::size_t width, const std::string& fill) {
  const std::size_t used = display_width(text);
  const std::size_t left = (width - used) / 2;
  return fill + repeat(fill, left) + text + repeat(fill, width - used - left) + fill;
}

}  // namespace

std::string to_text_diagram(const Circuit& c, const DiagramOptions& options) {
  DiagramBuilder builder(c);
  for (const CircuitElement& e : c.elements()) {
    if (const Gate* g = std::get_if<Gate>(&e)) {
      builder.place_gate(*g, false);
      continue;
    }
    const auto& block = std::get<ConditionedBlock>(e);
    builder.place_measurement(block.measured_qubit);
    for (const Gate& g : block.body) builder.place_gate(g, true);
    builder.barrier();
  }
  const std::vector<Column> columns = builder.take();
  const bool classical = c.has_measurement();
  const std::size_t rows = c.qubit_count() + (classical ? 1 : 0);

  std::vector<std::string> labels(rows);
  for (std::size_t q = 0; q < c.qubit_count(); ++q) {
    labels[q] = c.roles()[q].label() + "_" + std::to_string(q);
  }
  if (classical) labels[c.qubit_count()] = "c";
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, display_width(l));

  // rendered[col][row]
  std::vector<std::vector<std::string>> rendered;
  std::vector<std::size_t> widths;
  for (const Column& column : columns) {
    std::size_t width = 1;
    for (const Cell& cell : column.cells) width = std::max(width, display_width(cell.text));
    std::vector<std::string> cells(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      const bool classical_row = classical && r == c.qubit_count();
      const std::string fill = classical_row ? (column.classical_active ? "═" : " ") : "─";
      cells[r] = render_cell(column.cells[r].text, width, fill);
    }
    rendered.push_back(std::move(cells));
    widths.push_back(width + 2);
  }

  // Split columns into panels that fit the width budget.
  const std::size_t prefix = label_width + 2;
  std::vector<std::pair<std::size_t, std::size_t>> panels;
  std::size_t start = 0;
  while (start < rendered.size() || panels.empty()) {
    std::size_t end = start;
    std::size_t used = prefix + 2;  // room for wrap markers
    while (end < rendered.size()) {
      if (options.max_width > 0 && end > start && used + widths[end] > options.max_width) break;
      used += widths[end];
      ++end;
    }
    panels.emplace_back(start, end);
    if (end == start) break;
    start = end;
  }

  std::ostringstream os;
  for (std::size_t p = 0; p < panels.size(); ++p) {
    const auto [first, last] = panels[p];
    if (p > 0) os << "\n";
    for (std::size_t r = 0; r < rows; ++r) {
      const bool classical_row = classical && r == c.qubit_count();
      os << labels[r] << repeat(" ", label_width - display_width(labels[r])) << ": ";
      if (p > 0) os << "«";
      if (first == last) os << (classical_row ? "  " : "──");
      for (std::size_t col = first; col < last; ++col) os << rendered[col][r];
      if (p + 1 < panels.size()) os << "»";
      os << "\n";
    }
  }
  return os.str();
}

std::string to_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 3.0;\n"
     << "include \"stdgates.inc\";\n"
     << "qubit[" << c.qubit_count() << "] q;\n";
  if (c.has_measurement()) os << "bit[1] c;\n";

  auto emit = [&os](const Gate& g, const char* indent) {
    os << indent;
    const std::string q = "q[" + std::to_string(g.target) + "]";
    switch (g.kind) {
      case GateKind::H: os << "h " << q; break;
      case GateKind::S: os << "s " << q; break;
      case GateKind::Sdg: os << "sdg " << q; break;
      case GateKind::X: os << "x " << q; break;
      case GateKind::CNOT: os << "cx q[" << g.control << "]," << q; break;
      case GateKind::R1: os << "p(" << g.angle.to_expression() << ") " << q; break;
      case GateKind::R1dg: os << "p(-(" << g.angle.to_expression() << ")) " << q; break;
    }
    os << ";\n";
  };

  for (const CircuitElement& e : c.elements()) {
    if (const Gate* g = std::get_if<Gate>(&e)) {
      emit(*g, "");
      continue;
    }
    const auto& block = std::get<ConditionedBlock>(e);
    os << "measure q[" << block.measured_qubit << "] -> c[0];\n";
    os << "if (c[0] == 1) {\n";
    for (const Gate& g : block.body) emit(g, "  ");
    os << "}\n";
  }
  return os.str();
}

}  // namespace fcnot
