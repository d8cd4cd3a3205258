// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_IR_BUILDER_H
#define TENFLOW_IR_BUILDER_H

#include "tenflow/IR/IR.h"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tenflow::ir {

/// Appends ops to a block of `fn`, allocating result values as it goes.
class OpBuilder {
public:
  OpBuilder(Function &fn, std::vector<Operation> &ops) : fn(fn), ops(ops) {}

  Function &function() { return fn; }

  /// Creates an op with at most one result.
  std::optional<ValueId> create(const std::string &dialect, const std::string &name,
                                std::vector<ValueId> operands,
                                std::optional<Type> result = std::nullopt,
                                AttrMap attrs = {});
  ValueId value(const std::string &dialect, const std::string &name,
                std::vector<ValueId> operands, Type result, AttrMap attrs = {}) {
    return *create(dialect, name, std::move(operands), result, std::move(attrs));
  }
  void op(const std::string &dialect, const std::string &name,
          std::vector<ValueId> operands = {}, AttrMap attrs = {}) {
    create(dialect, name, std::move(operands), std::nullopt, std::move(attrs));
  }
  void append(Operation op) { ops.push_back(std::move(op)); }

  ValueId constIndex(int64_t v);
  ValueId constI32(int64_t v);
  ValueId constF32(float v);
  /// Integer op whose result type matches `lhs`.
  ValueId arith(const std::string &name, ValueId lhs, ValueId rhs);
  ValueId cmp(const std::string &predicate, ValueId lhs, ValueId rhs);
  ValueId select(ValueId cond, ValueId a, ValueId b);
  ValueId cast(ValueId v, Type to);

  /// Emits `scf.for(lb, ub, step)`; `body` fills the loop block and the
  /// terminating `scf.yield` is added afterwards.
  void forLoop(ValueId lb, ValueId ub, ValueId step,
               const std::function<void(OpBuilder &, ValueId)> &body);

private:
  Function &fn;
  std::vector<Operation> &ops;
};

} // namespace tenflow::ir

#endif // TENFLOW_IR_BUILDER_H
