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

#include <string>
#include <vector>

#include "gvdb/value.hpp"

namespace gvdb {

enum class ColumnType { Integer, Float, Text, Boolean };

std::string column_type_name(ColumnType t);
ValueType value_type_of(ColumnType t);

/// Case-insensitive identifier comparison; identifiers preserve case but
/// resolve without it.
bool iequals(const std::string& a, const std::string& b);
std::string lower(const std::string& s);

struct Column {
  std::string name;
  ColumnType type;
};

/// Ordered column list of a table. Column names are unique
/// case-insensitively and at least one column is required.
class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<Column> columns);  // throws StorageError on violation

  size_t size() const { return columns_.size(); }
  const Column& column(size_t i) const { return columns_[i]; }
  const std::vector<Column>& columns() const { return columns_; }

  /// Index of the named column (case-insensitive) or -1.
  int find(const std::string& name) const;

 private:
  std::vector<Column> columns_;
};

}  // namespace gvdb
