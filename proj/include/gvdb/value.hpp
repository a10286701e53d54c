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
#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace gvdb {

struct PathValue;
using PathPtr = std::shared_ptr<const PathValue>;

enum class ValueType { Null, Integer, Float, Text, Boolean, Path };

std::string type_name(ValueType t);

/// A typed scalar cell. Relational tuples hold the first five variants; the
/// Path variant only flows between query operators, never into storage.
class Value {
 public:
  Value() = default;  // null

  static Value integer(int64_t v) { return Value(v); }
  static Value real(double v) { return Value(v); }
  static Value text(std::string v) { return Value(std::move(v)); }
  static Value boolean(bool v) { return Value(v); }
  static Value path(PathPtr p) { return Value(std::move(p)); }

  ValueType type() const { return static_cast<ValueType>(data_.index()); }
  bool is_null() const { return data_.index() == 0; }

  int64_t as_integer() const { return std::get<int64_t>(data_); }
  double as_real() const { return std::get<double>(data_); }
  const std::string& as_text() const { return std::get<std::string>(data_); }
  bool as_boolean() const { return std::get<bool>(data_); }
  const PathPtr& as_path() const { return std::get<PathPtr>(data_); }

  /// Integer or Float cell widened to double; throws otherwise.
  double numeric() const;

  /// Formats the value for tables, CSV and checksums. Nulls render as
  /// `null_text`; floats use %.10g so output is deterministic.
  std::string to_display(const char* null_text = "NULL") const;

  /// Strict structural equality (null == null is true). Used by tests and
  /// result comparison, not by SQL predicates.
  bool operator==(const Value& other) const;
  bool operator!=(const Value& other) const { return !(*this == other); }

 private:
  explicit Value(int64_t v) : data_(v) {}
  explicit Value(double v) : data_(v) {}
  explicit Value(std::string v) : data_(std::move(v)) {}
  explicit Value(bool v) : data_(v) {}
  explicit Value(PathPtr p) : data_(std::move(p)) {}

  std::variant<std::monostate, int64_t, double, std::string, bool, PathPtr> data_;
};

/// Three-way SQL comparison. Returns nullopt if either side is null (the
/// engine treats any comparison with null as false). Throws ExecError when
/// the types are not comparable (text vs integer, paths, ...). Integer and
/// Float compare numerically.
std::optional<int> sql_compare(const Value& a, const Value& b);

/// Equality under sql_compare semantics; null never equals anything.
bool sql_equals(const Value& a, const Value& b);

}  // namespace gvdb
