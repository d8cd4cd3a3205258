// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_IR_EQUIVALENCE_H
#define TENFLOW_IR_EQUIVALENCE_H

#include "tenflow/IR/IR.h"

#include <string>

namespace tenflow::ir {

/// Graph-shape equality: same functions, ops, types, attributes and regions,
/// with operands matched through a bijection of definitions rather than by
/// ValueId. On mismatch, `why` (if given) receives a short explanation.
bool structurallyEqual(const Module &lhs, const Module &rhs,
                       std::string *why = nullptr);
bool structurallyEqual(const Function &lhs, const Function &rhs,
                       std::string *why = nullptr);

} // namespace tenflow::ir

#endif // TENFLOW_IR_EQUIVALENCE_H
