// Copyright 2026 The Halinkit Authors
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

#include "halinkit/graph_io.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "halinkit/errors.h"
#include "json.hpp"

namespace halinkit {
namespace {

constexpr int kBias = 63;
constexpr int kLongPrefix = 126;
constexpr std::string_view kHeader = ">>graph6<<";
// Largest n we are willing to allocate an adjacency triangle for.
constexpr std::uint64_t kMaxVertices = 1u << 20;

class Graph6Reader {
 public:
  Graph6Reader(std::string_view text, std::size_t start)
      : text_(text), pos_(start) {}

  // Next 6-bit value, validating the byte range.
  int Next(const char* what) {
    if (pos_ >= text_.size()) {
      throw ParseError(std::string("truncated input: expected ") + what,
                       pos_);
    }
    const int byte = static_cast<unsigned char>(text_[pos_]);
    if (byte < kBias || byte > kLongPrefix) {
      throw ParseError("byte " + std::to_string(byte) +
                           " outside the graph6 range 63..126",
                       pos_);
    }
    ++pos_;
    return byte - kBias;
  }

  int Peek() const {
    return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_;
};

void AppendSize(std::string& out, std::uint64_t n) {
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kLongPrefix));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  } else {
    out.push_back(static_cast<char>(kLongPrefix));
    out.push_back(static_cast<char>(kLongPrefix));
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  }
}

}  // namespace

Graph ParseGraph6(std::string_view text) {
  // One trailing line terminator is tolerated; graph6 files are line-based.
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);

  std::size_t start = 0;
  if (text.substr(0, kHeader.size()) == kHeader) start = kHeader.size();
  if (start >= text.size()) throw ParseError("empty graph6 string", start);

  Graph6Reader reader(text, start);
  std::uint64_t n = 0;
  if (reader.Peek() == kLongPrefix) {
    reader.Next("size prefix");
    if (reader.Peek() == kLongPrefix) {
      reader.Next("size prefix");
      for (int i = 0; i < 6; ++i) {
        const int v = reader.Next("36-bit vertex count");
        if (v == kLongPrefix - kBias) {
          throw ParseError("malformed header", reader.pos() - 1);
        }
        n = (n << 6) | static_cast<std::uint64_t>(v);
      }
    } else {
      for (int i = 0; i < 3; ++i) {
        const int v = reader.Next("18-bit vertex count");
        if (v == kLongPrefix - kBias) {
          throw ParseError("malformed header", reader.pos() - 1);
        }
        n = (n << 6) | static_cast<std::uint64_t>(v);
      }
    }
  } else {
    n = static_cast<std::uint64_t>(reader.Next("vertex count"));
  }
  if (n > kMaxVertices) {
    throw ParseError("vertex count " + std::to_string(n) + " too large",
                     start);
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t data_bytes = (bits + 5) / 6;
  std::vector<Edge> edges;
  std::uint64_t bit_index = 0;
  int i = 0;
  int j = 1;
  for (std::uint64_t b = 0; b < data_bytes; ++b) {
    const int value = reader.Next("adjacency data");
    for (int k = 5; k >= 0; --k) {
      const bool set = (value >> k) & 1;
      if (bit_index < bits) {
        if (set) edges.emplace_back(i, j);
        ++i;
        if (i == j) {
          i = 0;
          ++j;
        }
        ++bit_index;
      } else if (set) {
        throw ParseError("nonzero padding bits", reader.pos() - 1);
      }
    }
  }
  if (reader.pos() != text.size()) {
    throw ParseError("trailing garbage", reader.pos());
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string EncodeGraph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.num_vertices());
  std::string out;
  AppendSize(out, n);
  // The edge list is sorted by (min, max); graph6 wants column order, i.e.
  // sorted by (max, min).
  std::vector<Edge> by_column(g.edges());
  std::sort(by_column.begin(), by_column.end(),
            [](const Edge& a, const Edge& b) {
              return std::pair(a.second, a.first) <
                     std::pair(b.second, b.first);
            });
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
  for (const auto& [u, v] : by_column) {
    const std::uint64_t index =
        static_cast<std::uint64_t>(v) * (v - 1) / 2 + static_cast<std::uint64_t>(u);
    packed[index / 6] |= static_cast<std::uint8_t>(1u << (5 - index % 6));
  }
  for (std::uint8_t value : packed) out.push_back(static_cast<char>(value + kBias));
  return out;
}

Graph ParseGraphJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("edge-list JSON must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "edges" && key != "labels") {
      throw ParseError("unknown key \"" + key + "\" in edge-list JSON");
    }
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("edge-list JSON needs an integer \"n\"");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 0 || n > static_cast<long long>(kMaxVertices)) {
    throw ParseError("vertex count " + std::to_string(n) + " out of range");
  }
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const auto& list = doc["edges"];
    if (!list.is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError("each edge must be a pair of integers");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels") && !doc["labels"].is_null()) {
    const auto& list = doc["labels"];
    if (!list.is_array()) throw ParseError("\"labels\" must be an array");
    for (const auto& l : list) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges), std::move(labels));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string EncodeGraphJson(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.num_vertices();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (g.has_labels()) doc["labels"] = g.labels();
  return doc.dump();
}

Graph ParseGraphAuto(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return ParseGraphJson(text);
  }
  return ParseGraph6(text);
}

}  // namespace halinkit
