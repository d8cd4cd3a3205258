// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_SUPPORT_DIAGNOSTIC_H
#define TENFLOW_SUPPORT_DIAGNOSTIC_H

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tenflow {

/// Position of an op inside a function: one (region, block, op) step per
/// nesting level, outermost first. The function body is region 0 of level 0.
struct OpPathStep {
  int region = 0;
  int block = 0;
  int op = 0;
  bool operator==(const OpPathStep &) const = default;
};

/// Where a diagnostic points. Either an IR location (function + op path), a
/// source position (line/column, 1-based), or nothing for module-level
/// diagnostics.
struct Location {
  std::string function;
  std::vector<OpPathStep> path;
  int line = 0;
  int column = 0;

  static Location inFunction(std::string fn, std::vector<OpPathStep> path = {}) {
    Location loc;
    loc.function = std::move(fn);
    loc.path = std::move(path);
    return loc;
  }
  static Location atSource(int line, int column = 0) {
    Location loc;
    loc.line = line;
    loc.column = column;
    return loc;
  }

  bool empty() const { return function.empty() && line == 0; }
  int blockIndex() const { return path.empty() ? -1 : path.back().block; }
  int opIndex() const { return path.empty() ? -1 : path.back().op; }
  std::string str() const;

  bool operator==(const Location &) const = default;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  Location location;

  static Diagnostic error(std::string msg, Location loc = {}) {
    return {Severity::Error, std::move(msg), std::move(loc)};
  }
  std::string str() const;
  bool operator==(const Diagnostic &) const = default;
};

using DiagnosticList = std::vector<Diagnostic>;

inline bool hasErrors(const DiagnosticList &diags) {
  for (const Diagnostic &d : diags)
    if (d.severity == Severity::Error)
      return true;
  return false;
}

std::ostream &operator<<(std::ostream &os, const Diagnostic &diag);

/// A value or the diagnostics explaining why there is none.
template <typename T> class Result {
public:
  Result(T value) : storage(std::move(value)) {}
  Result(Diagnostic diag) : storage(DiagnosticList{std::move(diag)}) {}
  Result(DiagnosticList diags) : storage(std::move(diags)) {}

  bool ok() const { return storage.index() == 0; }
  explicit operator bool() const { return ok(); }

  T &value() & { return std::get<0>(storage); }
  const T &value() const & { return std::get<0>(storage); }
  T &&value() && { return std::get<0>(std::move(storage)); }
  T *operator->() { return &value(); }
  const T *operator->() const { return &value(); }
  T &operator*() & { return value(); }
  const T &operator*() const & { return value(); }

  const DiagnosticList &diagnostics() const { return std::get<1>(storage); }
  DiagnosticList takeDiagnostics() { return std::get<1>(std::move(storage)); }

private:
  std::variant<T, DiagnosticList> storage;
};

} // namespace tenflow

#endif // TENFLOW_SUPPORT_DIAGNOSTIC_H
