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

#include "gvdb/value.hpp"

#include <cstdio>

#include "gvdb/error.hpp"
#include "gvdb/path_value.hpp"

namespace gvdb {

std::string type_name(ValueType t) {
  switch (t) {
    case ValueType::Null: return "null";
    case ValueType::Integer: return "integer";
    case ValueType::Float: return "float";
    case ValueType::Text: return "text";
    case ValueType::Boolean: return "boolean";
    case ValueType::Path: return "path";
  }
  return "?";
}

double Value::numeric() const {
  switch (type()) {
    case ValueType::Integer: return static_cast<double>(as_integer());
    case ValueType::Float: return as_real();
    default:
      throw ExecError("expected a numeric value, got " + type_name(type()));
  }
}

std::string Value::to_display(const char* null_text) const {
  switch (type()) {
    case ValueType::Null: return null_text;
    case ValueType::Integer: return std::to_string(as_integer());
    case ValueType::Float: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.10g", as_real());
      return buf;
    }
    case ValueType::Text: return as_text();
    case ValueType::Boolean: return as_boolean() ? "true" : "false";
    case ValueType::Path: return as_path()->path_string();
  }
  return "";
}

bool Value::operator==(const Value& other) const {
  if (type() != other.type()) {
    // int/float cells holding the same number still count as different here;
    // strict equality is only used for structural comparisons in tests.
    return false;
  }
  switch (type()) {
    case ValueType::Null: return true;
    case ValueType::Integer: return as_integer() == other.as_integer();
    case ValueType::Float: return as_real() == other.as_real();
    case ValueType::Text: return as_text() == other.as_text();
    case ValueType::Boolean: return as_boolean() == other.as_boolean();
    case ValueType::Path: return *as_path() == *other.as_path();
  }
  return false;
}

namespace {

bool numeric_type(ValueType t) { return t == ValueType::Integer || t == ValueType::Float; }

int cmp3(double a, double b) { return a < b ? -1 : (a > b ? 1 : 0); }

}  // namespace

std::optional<int> sql_compare(const Value& a, const Value& b) {
  if (a.is_null() || b.is_null()) return std::nullopt;
  ValueType ta = a.type(), tb = b.type();
  if (numeric_type(ta) && numeric_type(tb)) {
    if (ta == ValueType::Integer && tb == ValueType::Integer) {
      int64_t x = a.as_integer(), y = b.as_integer();
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    return cmp3(a.numeric(), b.numeric());
  }
  if (ta != tb) {
    throw ExecError("cannot compare " + type_name(ta) + " with " + type_name(tb));
  }
  switch (ta) {
    case ValueType::Text: {
      int c = a.as_text().compare(b.as_text());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case ValueType::Boolean: return int(a.as_boolean()) - int(b.as_boolean());
    default:
      throw ExecError("cannot compare " + type_name(ta) + " values");
  }
}

bool sql_equals(const Value& a, const Value& b) {
  auto c = sql_compare(a, b);
  return c.has_value() && *c == 0;
}

std::string PathValue::path_string() const {
  std::string out = std::to_string(vertexes.front());
  for (size_t i = 0; i < edges.size(); ++i) {
    out += " -e";
    out += std::to_string(edges[i]);
    out += "-> ";
    out += std::to_string(vertexes[i + 1]);
  }
  return out;
}

}  // namespace gvdb
