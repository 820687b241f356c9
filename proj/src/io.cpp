// Copyright 2026 The sidom Authors.
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

#include "sidom/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "sidom/error.hpp"

namespace sidom {

namespace {

// Splits text into lines, dropping comments and blank lines but remembering
// the line number of each survivor.
struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  Fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

int to_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    parse_error(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) Fail(ErrorCode::kParse, "missing header line 'n <count>'");
  const Line& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "n") {
    parse_error(header.number, "expected header 'n <count>'");
  }
  const int order = to_int(header.tokens[1], header.number);
  if (order < 1) parse_error(header.number, "vertex count must be positive");
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) parse_error(line.number, "expected 'u v'");
    Arc a{to_int(line.tokens[0], line.number), to_int(line.tokens[1], line.number)};
    if (a.tail < 0 || a.tail >= order || a.head < 0 || a.head >= order) {
      parse_error(line.number, "vertex out of range [0, " +
                                   std::to_string(order) + ")");
    }
    if (a.tail == a.head) parse_error(line.number, "loop at vertex " +
                                                       std::to_string(a.tail));
    for (const Arc& b : arcs) {
      if (b == a) parse_error(line.number, "repeated arc");
    }
    arcs.push_back(a);
  }
  return Digraph::create(order, arcs);
}

std::string format_digraph(const Digraph& d) {
  std::ostringstream out;
  out << "n " << d.order() << "\n";
  for (const Arc& a : d.arcs()) out << a.tail << " " << a.head << "\n";
  return out.str();
}

VertexPartition parse_partition(std::string_view text, int order) {
  std::vector<int> block_of(static_cast<std::size_t>(order), -1);
  int blocks = 0;
  int last_line = 0;
  for (const Line& line : tokenize(text)) {
    last_line = line.number;
    for (std::string_view token : line.tokens) {
      const int v = to_int(token, line.number);
      if (v < 0 || v >= order) {
        parse_error(line.number, "vertex " + std::to_string(v) +
                                     " out of range [0, " +
                                     std::to_string(order) + ")");
      }
      if (block_of[v] != -1) {
        parse_error(line.number, "vertex " + std::to_string(v) +
                                     " appears twice");
      }
      block_of[v] = blocks;
    }
    ++blocks;
  }
  for (int v = 0; v < order; ++v) {
    if (block_of[v] == -1) {
      parse_error(last_line, "vertex " + std::to_string(v) +
                                 " belongs to no block");
    }
  }
  return VertexPartition::from_assignment(std::move(block_of));
}

std::string format_partition(const VertexPartition& p) {
  std::ostringstream out;
  for (const VertexSet& block : p.canonical().blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      out << (i ? " " : "") << block[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string format_arc_partition(const Digraph& d, const ArcPartition& q) {
  std::ostringstream out;
  for (const ArcSet& block : q.canonical().blocks(d)) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      out << (i ? " " : "") << block[i].tail << "," << block[i].head;
    }
    out << "\n";
  }
  return out.str();
}

std::string to_dot(const Digraph& d, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < d.order(); ++v) {
    out << "  " << v << " [label=\"" << d.label(v) << "\"];\n";
  }
  for (const Arc& a : d.arcs()) {
    out << "  " << a.tail << " -> " << a.head << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << content;
  if (!out) Fail(ErrorCode::kInvalidArgument, "write failed for " + path);
}

}  // namespace sidom
