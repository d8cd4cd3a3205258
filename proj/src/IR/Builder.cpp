// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/IR/Builder.h"

using namespace tenflow::ir;

std::optional<ValueId> OpBuilder::create(const std::string &dialect,
                                         const std::string &name,
                                         std::vector<ValueId> operands,
                                         std::optional<Type> result, AttrMap attrs) {
  Operation op(dialect, name);
  op.operands = std::move(operands);
  op.attrs = std::move(attrs);
  std::optional<ValueId> v;
  if (result) {
    v = fn.newValue(*result);
    op.results.push_back(*v);
  }
  ops.push_back(std::move(op));
  return v;
}

ValueId OpBuilder::constIndex(int64_t v) {
  return value("arith", "constant", {}, Type::index(), {{"value", v}});
}

ValueId OpBuilder::constI32(int64_t v) {
  return value("arith", "constant", {}, Type::i32(), {{"value", v}});
}

ValueId OpBuilder::constF32(float v) {
  return value("arith", "constant", {}, Type::f32(),
               {{"value", static_cast<double>(v)}});
}

ValueId OpBuilder::arith(const std::string &name, ValueId lhs, ValueId rhs) {
  return value("arith", name, {lhs, rhs}, fn.typeOf(lhs));
}

ValueId OpBuilder::cmp(const std::string &predicate, ValueId lhs, ValueId rhs) {
  return value("arith", "cmpi", {lhs, rhs}, Type::i1(), {{"predicate", predicate}});
}

ValueId OpBuilder::select(ValueId cond, ValueId a, ValueId b) {
  return value("arith", "select", {cond, a, b}, fn.typeOf(a));
}

ValueId OpBuilder::cast(ValueId v, Type to) {
  if (fn.typeOf(v) == to)
    return v;
  return value("arith", "index_cast", {v}, to);
}

void OpBuilder::forLoop(ValueId lb, ValueId ub, ValueId step,
                        const std::function<void(OpBuilder &, ValueId)> &body) {
  Operation loop("scf", "for");
  loop.operands = {lb, ub, step};
  Block block;
  ValueId iv = fn.newValue(Type::index());
  block.args.push_back(iv);
  OpBuilder inner(fn, block.ops);
  body(inner, iv);
  inner.op("scf", "yield");
  loop.regions.push_back(Region{{std::move(block)}});
  ops.push_back(std::move(loop));
}
