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

// Graph interchange: graph6 and a JSON edge-list.
//
// graph6 follows the format description shipped with nauty: one size
// prefix (1, 4 or 8 bytes) followed by the upper triangle of the adjacency
// matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits
// per byte, each byte offset by 63, zero-padded to a multiple of six bits.

#ifndef HALINKIT_GRAPH_IO_H_
#define HALINKIT_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "halinkit/graph.h"

namespace halinkit {

// Accepts an optional ">>graph6<<" header and a single trailing newline.
// Throws ParseError naming the offending byte offset.
Graph ParseGraph6(std::string_view text);

// Inverse of ParseGraph6 (no header, no newline).
std::string EncodeGraph6(const Graph& g);

// {"n": int, "edges": [[i, j], ...], "labels": [string, ...]} with labels
// optional. Unknown keys are rejected. Throws ParseError.
Graph ParseGraphJson(std::string_view text);
std::string EncodeGraphJson(const Graph& g);

// Dispatches on the first non-blank character: '{' selects JSON, anything
// else graph6.
Graph ParseGraphAuto(std::string_view text);

}  // namespace halinkit

#endif  // HALINKIT_GRAPH_IO_H_
