// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_IR_PARSER_H
#define TENFLOW_IR_PARSER_H

#include "tenflow/IR/IR.h"
#include "tenflow/Support/Diagnostic.h"

#include <string_view>

namespace tenflow::ir {

/// Parses the textual `.tir` form. Syntax errors carry line/column.
///
///   module   := "module" ("attributes" attrs)? "{" func* "}"
///   func     := "func" sym "(" args? ")" ("->" type)? ("attributes" attrs)?
///               "{" block+ "}"
///   block    := ("^" ident ("(" args ")")? ":")? op*
///   op       := (results "=")? dialect "." opname "(" operands? ")" attrs?
///               ("(" region ("," region)* ")")? ":" typesig
///   region   := "{" block* "}"
///   typesig  := "(" types? ")" "->" "(" types? ")"
///
/// `//` starts a comment that runs to end of line.
Result<Module> parseModule(std::string_view text);

} // namespace tenflow::ir

#endif // TENFLOW_IR_PARSER_H
