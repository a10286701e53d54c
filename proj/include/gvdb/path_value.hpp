/*
 * Copyright 2026 The gvdb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gvdb {

/// An ordered list of edges discovered by a path scan. vertexes[i] starts
/// edges[i]; vertexes[length] ends the path. Paths are simple except that
/// the final vertex may equal the start vertex (closed paths).
struct PathValue {
  std::vector<int64_t> edges;
  std::vector<int64_t> vertexes;  // always edges.size() + 1 entries

  int64_t length() const { return static_cast<int64_t>(edges.size()); }
  int64_t start_vertex() const { return vertexes.front(); }
  int64_t end_vertex() const { return vertexes.back(); }
  bool closed() const { return vertexes.size() > 1 && vertexes.front() == vertexes.back(); }

  /// "v0 -e0-> v1 -e1-> ... -> vL" rendering with vertex and edge ids.
  std::string path_string() const;

  bool operator==(const PathValue& other) const {
    return edges == other.edges && vertexes == other.vertexes;
  }
};

}  // namespace gvdb
