// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_IR_VERIFIER_H
#define TENFLOW_IR_VERIFIER_H

#include "tenflow/IR/IR.h"
#include "tenflow/IR/OpSpec.h"
#include "tenflow/Support/Diagnostic.h"

namespace tenflow::ir {

/// Reference consistency only: every value defined exactly once, every use
/// defined earlier in its block, in an enclosing block, or as a block
/// argument in scope. Needs no registry.
DiagnosticList verifyStructure(const Function &fn);
DiagnosticList verifyStructure(const Module &module);

/// Checks one op against its schema: arity, type constraints, required
/// attributes, region count, host/device context, then the spec's extra rule.
DiagnosticList verifyOp(const Operation &op, const OpSpec &spec,
                        const DialectRegistry &registry, const OpSite &site);

/// Full verification. Diagnostics come back in program order; an empty list
/// means the module is valid.
DiagnosticList verify(const Module &module, const DialectRegistry &registry);

} // namespace tenflow::ir

#endif // TENFLOW_IR_VERIFIER_H
