// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_DIALECTS_RUNTIMEABI_H
#define TENFLOW_DIALECTS_RUNTIMEABI_H

#include "tenflow/IR/OpSpec.h"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tenflow::dialects {

/// One entry of the host runtime ABI that `tt_host` ops lower to. Names are
/// wire-stable: they appear in `.tir` files and host call traces.
struct RuntimeFunction {
  std::string name;
  std::vector<ir::TypeConstraint> operands;
  bool variadic = false;
  std::optional<ir::TypeConstraint> result;
  /// Carries the kernel symbol as a `kernel` attribute on the call.
  bool takesKernel = false;
};

const std::vector<RuntimeFunction> &runtimeAbi();
const RuntimeFunction *lookupRuntimeFunction(std::string_view name);

/// Kernel kinds in their ABI encoding order.
enum class KernelKind { Reader = 0, Compute = 1, Writer = 2 };

std::optional<KernelKind> parseKernelKind(std::string_view text);
const char *kernelKindName(KernelKind kind);

/// Circular buffer ids are drawn from a fixed per-core pool.
constexpr int64_t kNumCircularBuffers = 32;

} // namespace tenflow::dialects

#endif // TENFLOW_DIALECTS_RUNTIMEABI_H
