// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_FRONTEND_LOWERING_H
#define TENFLOW_FRONTEND_LOWERING_H

#include "tenflow/Frontend/Ast.h"
#include "tenflow/IR/IR.h"
#include "tenflow/Support/Diagnostic.h"

#include <string_view>

namespace tenflow::frontend {

/// Emits one function per subroutine in the `ftn` + `offload` dialects.
/// Arrays become `memref<?xf32>` arguments, real scalars `f32`, integer
/// scalars `i32`; each offloaded loop becomes an `offload.target` wrapping an
/// `ftn.do_loop`.
ir::Module lowerAst(const FortranAst &ast);

/// parseFortran followed by lowerAst.
Result<ir::Module> compileFortran(std::string_view source);

} // namespace tenflow::frontend

#endif // TENFLOW_FRONTEND_LOWERING_H
