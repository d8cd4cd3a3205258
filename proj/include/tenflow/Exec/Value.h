// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_EXEC_VALUE_H
#define TENFLOW_EXEC_VALUE_H

#include "tenflow/IR/IR.h"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tenflow::exec {

using TileData = std::vector<float>;
/// Tiles are immutable once built, so sharing them is free.
using TileRef = std::shared_ptr<const TileData>;

/// A runtime value of any IR type. `Unknown` marks values that depend on
/// inputs that were not supplied (symbolic host-program emission).
struct RtValue {
  enum class Kind { Unknown, Int, Float, Array, Tile };

  Kind kind = Kind::Unknown;
  int64_t i = 0;
  float f = 0;
  /// Array: slot in the caller's array store.
  int array = -1;
  TileRef tile;

  static RtValue ofInt(int64_t v) {
    RtValue r;
    r.kind = Kind::Int;
    r.i = v;
    return r;
  }
  static RtValue ofFloat(float v) {
    RtValue r;
    r.kind = Kind::Float;
    r.f = v;
    return r;
  }
  static RtValue ofArray(int slot) {
    RtValue r;
    r.kind = Kind::Array;
    r.array = slot;
    return r;
  }
  static RtValue ofTile(TileRef t) {
    RtValue r;
    r.kind = Kind::Tile;
    r.tile = std::move(t);
    return r;
  }

  bool known() const { return kind != Kind::Unknown; }
};

/// Truncates `v` to the width of integer type `t` (two's complement wrap for
/// i32, 0/1 for i1, unchanged for index).
int64_t wrapInteger(int64_t v, const ir::Type &t);

/// Shortest round-trip spelling of an f32.
std::string formatF32(float v);

/// Evaluates a side-effect-free `arith` op. f32 ops round once per op
/// (round-to-nearest-even, no contraction). Returns false and sets `error`
/// on division by zero or an unsupported op. Any Unknown operand yields
/// Unknown.
bool evalArith(const ir::Operation &op, const std::vector<RtValue> &operands,
               const ir::Type &resultType, RtValue &result, std::string &error);

} // namespace tenflow::exec

#endif // TENFLOW_EXEC_VALUE_H
