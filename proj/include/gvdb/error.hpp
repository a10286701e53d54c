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

#include <stdexcept>
#include <string>

namespace gvdb {

/// Base class for every error surfaced to engine clients.
class EngineError : public std::runtime_error {
 public:
  explicit EngineError(std::string message) : std::runtime_error(std::move(message)) {}
};

/// Syntax error with a 1-based source position.
class ParseError : public EngineError {
 public:
  ParseError(std::string message, int line, int column)
      : EngineError(std::move(message)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Name-resolution or type error detected while binding a statement.
class BindError : public EngineError {
 public:
  using EngineError::EngineError;
};

/// Catalog or tuple-level storage violation (duplicate names, arity, ids).
class StorageError : public EngineError {
 public:
  using EngineError::EngineError;
};

/// Planning error (e.g. a SHORTESTPATH hint naming a non-numeric attribute).
class PlanError : public EngineError {
 public:
  using EngineError::EngineError;
};

/// Runtime evaluation error (type mismatches, negative weights, ...).
class ExecError : public EngineError {
 public:
  using EngineError::EngineError;
};

}  // namespace gvdb
