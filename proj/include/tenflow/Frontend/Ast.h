// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_FRONTEND_AST_H
#define TENFLOW_FRONTEND_AST_H

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tenflow::frontend {

/// Clause bundle of one `!$omp target ...` directive.
struct OffloadClauses {
  int64_t numTeams = 1;
  bool numTeamsGiven = false;
  std::optional<int64_t> numThreads;
  std::optional<int64_t> simdlen;
  std::vector<std::string> mapTo;
  std::vector<std::string> mapFrom;
  std::vector<std::string> mapTofrom;

  bool operator==(const OffloadClauses &) const = default;
};

enum class ParamKind { RealScalar, RealArray, IntScalar };

struct Param {
  std::string name;
  ParamKind kind = ParamKind::RealScalar;
  int line = 0;
};

struct Expr {
  enum class Kind { RealLiteral, IntLiteral, Variable, ArrayElement, Binary };

  Kind kind = Kind::IntLiteral;
  double real = 0;
  int64_t integer = 0;
  /// Variable or array name.
  std::string name;
  /// One of + - * / for Binary.
  char op = 0;
  /// Binary: lhs, rhs. ArrayElement: the index expression.
  std::vector<Expr> operands;
  int line = 0;

  /// Fortran-like rendering, fully parenthesised for binaries:
  /// `((a * x(i)) + y(i))`.
  std::string str() const;
};

struct Assignment {
  Expr target;
  Expr value;
  int line = 0;
};

struct Statement;

struct DoLoop {
  std::string var;
  Expr lower;
  Expr upper;
  std::optional<Expr> step;
  std::vector<Statement> body;
  int line = 0;
};

/// A combined `!$omp target ...` construct and the loop it applies to.
struct OffloadRegion {
  OffloadClauses clauses;
  DoLoop loop;
  int beginLine = 0;
  int endLine = 0;
};

struct Statement {
  std::variant<Assignment, DoLoop, OffloadRegion> node;
};

struct Subroutine {
  std::string name;
  /// Dummy arguments in declaration-list order.
  std::vector<Param> params;
  /// Integer locals (loop counters).
  std::vector<std::string> locals;
  std::vector<Statement> body;
  int line = 0;

  const Param *param(const std::string &name) const;
};

struct FortranAst {
  std::vector<Subroutine> subroutines;
};

} // namespace tenflow::frontend

#endif // TENFLOW_FRONTEND_AST_H
