// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_PASSES_ELEMENTWISE_H
#define TENFLOW_PASSES_ELEMENTWISE_H

#include "tenflow/IR/IR.h"
#include "tenflow/Support/Diagnostic.h"

#include <optional>
#include <string>
#include <vector>

namespace tenflow::passes {

enum class MapKind { To, From, ToFrom };

const char *mapKindName(MapKind kind);

/// An array captured by an offload region.
struct DagArray {
  /// Operand index on the `offload.target`.
  int operand = 0;
  std::string name;
  MapKind map = MapKind::To;
};

/// An f32 scalar captured by an offload region.
struct DagScalar {
  int operand = 0;
  std::string name;
};

struct DagNode {
  enum class Kind { Input, Scalar, Constant, Binary };

  Kind kind = Kind::Constant;
  /// Input: index into `inputs`. Scalar: index into `scalars`.
  int index = 0;
  float value = 0;
  /// One of + - * /.
  char op = 0;
  int lhs = -1;
  int rhs = -1;
};

/// The body of an elementwise offloaded loop, `out(i) = expr(in_k(i), s_j)`,
/// as a DAG over per-element values. Nodes are topologically ordered
/// (operands precede users); `root` is the stored value.
struct ElementwiseDag {
  /// Arrays read by the body, in map-list order (to, then tofrom).
  std::vector<DagArray> inputs;
  std::vector<DagScalar> scalars;
  DagArray output;
  /// Every mapped array in map-list order (to, tofrom, from); the set of
  /// device buffers.
  std::vector<DagArray> buffers;
  std::vector<DagNode> nodes;
  int root = -1;

  /// Trip count: the i32 operand holding it, or a constant.
  std::optional<int> tripOperand;
  int64_t tripConstant = 0;

  bool hasDivision() const;
  /// Whether node `id` depends on any input array.
  bool isTileValued(int id) const;
  /// Renders e.g. `y = add(mul(a, x), y)`.
  std::string str() const;
  /// Evaluates the DAG for one element, rounding each op to f32.
  float evaluate(const std::vector<float> &inputValues,
                 const std::vector<float> &scalarValues) const;
};

/// Matches the region of `target` (which lives in `fn`, already lowered to
/// the standard dialects) against the elementwise template: one `scf.for`
/// from 0 to the trip count with unit step whose body loads mapped arrays at
/// the induction variable, combines them with f32 arithmetic, and stores one
/// result at the induction variable.
Result<ElementwiseDag> matchElementwise(const ir::Function &fn,
                                        const ir::Operation &target);

} // namespace tenflow::passes

#endif // TENFLOW_PASSES_ELEMENTWISE_H
