// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_SIMULATOR_INTERPRETER_H
#define TENFLOW_SIMULATOR_INTERPRETER_H

#include "tenflow/Exec/Inputs.h"
#include "tenflow/IR/IR.h"
#include "tenflow/Simulator/Runtime.h"
#include "tenflow/Support/Diagnostic.h"

namespace tenflow::sim {

/// Reference semantics: executes the host entry of a module at the `ftn` or
/// standard level (arith, scf, memref, ftn, offload.target run inline) and
/// returns every array argument's final contents, keyed by argument name.
/// Out-of-bounds accesses are errors located at the offending op.
Result<ArrayStore> interpretStd(const ir::Module &module, const exec::Inputs &inputs);

} // namespace tenflow::sim

#endif // TENFLOW_SIMULATOR_INTERPRETER_H
