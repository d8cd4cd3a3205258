// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_IR_OPSPEC_H
#define TENFLOW_IR_OPSPEC_H

#include "tenflow/IR/IR.h"
#include "tenflow/Support/Diagnostic.h"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tenflow::ir {

/// Accepted types for one operand or result slot.
enum class TypeConstraint {
  Any,
  F32,
  I32,
  I1,
  Index,
  AnyInt,   // i32 or index
  Scalar,   // f32, i32, i1 or index
  RuntimeArg, // i32 or f32
  MemRef,
  Tile,
};

bool satisfies(const Type &type, TypeConstraint constraint);
const char *describe(TypeConstraint constraint);

/// Where an op may appear: host functions, device (kernel) functions, or
/// either. Device functions are those carrying `tt.kernel_kind`.
enum class OpContext { Host, Device, Any };

struct OpSpec {
  std::string dialect;
  std::string name;
  std::vector<TypeConstraint> operands;
  /// When set, the last operand constraint repeats zero or more times.
  bool variadicOperands = false;
  std::vector<TypeConstraint> results;
  bool variadicResults = false;
  std::vector<std::pair<std::string, AttrKind>> requiredAttrs;
  int regionCount = 0;
  OpContext context = OpContext::Any;
  /// Name of an extra verifier rule registered alongside the spec.
  std::string rule;

  std::string fullName() const { return dialect + "." + name; }
};

/// Where an op sits: enough context for context rules and terminator checks.
struct OpSite {
  /// May be null when verifying an op outside any module.
  const Module *module = nullptr;
  const Function *function = nullptr;
  /// Op owning the region this op lives in; null at function top level.
  const Operation *parent = nullptr;
  const Block *block = nullptr;
  std::size_t opIndex = 0;
  Location location;
};

/// Handed to extra verifier rules.
class OpVerifyContext {
public:
  OpVerifyContext(const OpSite &site, DiagnosticList &sink)
      : site(site), sink(sink) {}

  const OpSite &site;

  const Module *module() const { return site.module; }
  const Function &function() const { return *site.function; }
  const Operation *parent() const { return site.parent; }
  bool isLastInBlock() const {
    return site.block && site.opIndex + 1 == site.block->ops.size();
  }
  const Type &typeOf(ValueId v) const { return site.function->typeOf(v); }
  void emitError(std::string msg) {
    sink.push_back(Diagnostic::error(std::move(msg), site.location));
  }

private:
  DiagnosticList &sink;
};

using OpRule = std::function<void(const Operation &, OpVerifyContext &)>;

class DialectRegistry {
public:
  void addOp(OpSpec spec);
  void addRule(std::string id, OpRule rule);

  const OpSpec *lookup(const std::string &dialect, const std::string &name) const;
  const OpRule *rule(const std::string &id) const;

  std::vector<std::string> dialects() const;
  std::vector<const OpSpec *> opsOf(const std::string &dialect) const;
  std::size_t size() const { return specs.size(); }

private:
  std::map<std::pair<std::string, std::string>, OpSpec> specs;
  std::map<std::string, OpRule> rules;
};

} // namespace tenflow::ir

#endif // TENFLOW_IR_OPSPEC_H
