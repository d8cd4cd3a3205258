// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_DIALECTS_BUILTIN_H
#define TENFLOW_DIALECTS_BUILTIN_H

#include "tenflow/IR/OpSpec.h"

namespace tenflow::dialects {

/// Registry holding every op of the surface (`ftn`), standard
/// (`func`, `arith`, `scf`, `memref`), offload (`offload`) and accelerator
/// (`tt_host`, `tt_dm`, `tt_cb`, `tt_compute`) dialects.
ir::DialectRegistry registerBuiltinDialects();

/// Shared immutable instance.
const ir::DialectRegistry &builtinRegistry();

} // namespace tenflow::dialects

#endif // TENFLOW_DIALECTS_BUILTIN_H
