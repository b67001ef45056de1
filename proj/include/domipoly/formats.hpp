// Copyright 2026 The domipoly Authors
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

// Text codecs: graph6 (one graph per line) and a 1-based edge-list format.
//
// graph6 layout for n <= 62: one byte n+63, then the upper triangle of the
// adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
// packed big-endian into 6-bit groups with zero padding, each group +63.

#ifndef DOMIPOLY_FORMATS_HPP_
#define DOMIPOLY_FORMATS_HPP_

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "domipoly/error.hpp"
#include "domipoly/graph.hpp"

namespace domipoly {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

  const auto byte_at = [&](std::size_t i) {
    const int b = static_cast<unsigned char>(text[i]);
    if (b < 63 || b > 126) {
      throw ParseError("graph6: byte " + std::to_string(b) +
                           " outside 63..126",
                       i);
    }
    return b - 63;
  };

  const int n = byte_at(pos);
  if (n > kMaxOrder) {
    throw ParseError("graph6: order above " + std::to_string(kMaxOrder) +
                         " not supported",
                     pos);
  }
  const std::size_t body = pos + 1;
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (nbits + 5) / 6;
  if (text.size() - body != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) +
                         " data bytes for order " + std::to_string(n) +
                         ", found " + std::to_string(text.size() - body),
                     text.size() < body + expected ? text.size() : body + expected);
  }

  std::vector<VertexSet> adj(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int group = byte_at(body + k / 6);
      if ((group >> (5 - k % 6)) & 1) {
        adj[i] = adj[i].with(j);
        adj[j] = adj[j].with(i);
      }
    }
  }
  if (nbits % 6 != 0) {
    const std::size_t last = body + expected - 1;
    const int pad_mask = (1 << (6 - nbits % 6)) - 1;
    if (byte_at(last) & pad_mask) {
      throw ParseError("graph6: nonzero padding bits", last);
    }
  }
  return Graph::FromAdjacency(std::move(adj));
}

// True when `line` (header allowed, trailing newline ignored) decodes as
// graph6. Used for input auto-detection.
inline bool looks_like_graph6(std::string_view line) {
  try {
    parse_graph6(line);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

// Edge-list text: the first token is the order n, followed by pairs "u v" of
// 1-based vertex labels. Whitespace-separated; '#' starts a comment that runs
// to end of line. Duplicate edges collapse; loops are rejected. ParseError
// offsets are 1-based line numbers.
inline Graph parse_edge_list(std::string_view text) {
  struct Token {
    std::string_view text;
    std::size_t line;
  };
  std::vector<Token> tokens;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '#') {
        ++i;
      }
      tokens.push_back({text.substr(start, i - start), line});
    }
  }
  if (tokens.empty()) throw ParseError("edge list: missing vertex count", line);

  const auto to_int = [](const Token& t) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw ParseError("edge list: not an integer: '" + std::string(t.text) + "'",
                       t.line);
    }
    return value;
  };

  const int n = to_int(tokens[0]);
  if (n < 0 || n > kMaxOrder) {
    throw ParseError("edge list: order " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxOrder),
                     tokens[0].line);
  }
  if ((tokens.size() - 1) % 2 != 0) {
    throw ParseError("edge list: dangling vertex label", tokens.back().line);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    const int u = to_int(tokens[i]);
    const int v = to_int(tokens[i + 1]);
    for (const auto& [label, tok] : {std::pair{u, tokens[i]}, std::pair{v, tokens[i + 1]}}) {
      if (label < 1 || label > n) {
        throw ParseError("edge list: label " + std::to_string(label) +
                             " outside 1.." + std::to_string(n),
                         tok.line);
      }
    }
    if (u == v) {
      throw ParseError("edge list: self-loop on " + std::to_string(u),
                       tokens[i].line);
    }
    edges.emplace_back(u - 1, v - 1);
  }
  return Graph(n, edges);
}

// Inverse of parse_edge_list: "n\nu v\n..." with 1-based labels.
inline std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

enum class InputFormat { kAuto, kGraph6, kEdgeList };

// Reads one or more graphs. graph6 input yields one graph per non-empty line;
// edge-list input is a single graph. With kAuto, the input is graph6 iff its
// first non-empty line decodes as graph6.
inline std::vector<Graph> parse_graphs(std::string_view text,
                                       InputFormat format = InputFormat::kAuto) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  if (format == InputFormat::kAuto) {
    format = !lines.empty() && looks_like_graph6(lines.front())
                 ? InputFormat::kGraph6
                 : InputFormat::kEdgeList;
  }
  if (format == InputFormat::kEdgeList) return {parse_edge_list(text)};
  std::vector<Graph> out;
  for (std::string_view line : lines) out.push_back(parse_graph6(line));
  if (out.empty()) throw ParseError("graph6: no graphs in input", 0);
  return out;
}

}  // namespace domipoly

#endif  // DOMIPOLY_FORMATS_HPP_
