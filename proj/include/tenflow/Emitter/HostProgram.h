// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_EMITTER_HOSTPROGRAM_H
#define TENFLOW_EMITTER_HOSTPROGRAM_H

#include "tenflow/Exec/Inputs.h"
#include "tenflow/IR/IR.h"
#include "tenflow/Support/Diagnostic.h"

#include <optional>
#include <string>
#include <vector>

namespace tenflow::emitter {

struct CallArg {
  enum class Kind { Int, Float, Array, Unknown };

  Kind kind = Kind::Unknown;
  int64_t i = 0;
  float f = 0;
  /// Array: the host argument name whose contents are the payload.
  std::string array;

  static CallArg ofInt(int64_t v) { return {Kind::Int, v, 0, {}}; }
  static CallArg ofFloat(float v) { return {Kind::Float, 0, v, {}}; }
  static CallArg ofArray(std::string name) { return {Kind::Array, 0, 0, std::move(name)}; }

  /// `42`, `2.5`, `data:x`, or `?`.
  std::string str() const;
  bool operator==(const CallArg &) const = default;
};

struct RuntimeCall {
  /// Runtime ABI name, e.g. `tt_rt_create_buffer`.
  std::string abi;
  std::vector<CallArg> args;
  std::optional<std::string> kernel;

  /// `CALL <abi> <args...>`, with the kernel symbol at its ABI position.
  std::string str() const;
  bool operator==(const RuntimeCall &) const = default;
};

/// The runtime calls made by one host function, in program order.
struct HostProgram {
  std::string function;
  std::vector<RuntimeCall> calls;

  std::string trace() const;
};

struct HostEmitOptions {
  /// Leave unbound inputs symbolic (`?`) instead of failing.
  bool allowUnbound = false;
};

/// Returns the host entry: the first function without `tt.kernel_kind`.
const ir::Function *hostEntry(const ir::Module &module);

/// Evaluates the lowered host function with `inputs` bound to its arguments
/// and records one RuntimeCall per `func.call @tt_rt_*`. Buffer ids are
/// assigned in creation order from 0, as the runtime does.
Result<HostProgram> emitHostProgram(const ir::Module &module, const exec::Inputs &inputs,
                                    const HostEmitOptions &options = {});

} // namespace tenflow::emitter

#endif // TENFLOW_EMITTER_HOSTPROGRAM_H
