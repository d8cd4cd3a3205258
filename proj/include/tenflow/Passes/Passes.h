// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_PASSES_PASSES_H
#define TENFLOW_PASSES_PASSES_H

#include "tenflow/IR/IR.h"
#include "tenflow/Support/DeviceConfig.h"
#include "tenflow/Support/Diagnostic.h"

namespace tenflow::passes {

/// Lowers the `ftn` surface dialect to func/arith/scf/memref. Fortran's
/// 1-based inclusive `do i = lb, ub, s` becomes a 0-based half-open
/// `scf.for j = lb-1 to ub step s`; element accesses indexed by the loop
/// variable use `j` directly, other indices are shifted by one. The
/// `ftn.subroutine` wrapper is inlined. `offload.target` ops are kept.
Result<ir::Module> ftnToStd(const ir::Module &module);

/// Outlines every `offload.target` into reader/compute/writer device
/// functions plus a `tt_host` launch sequence in the enclosing function.
Result<ir::Module> offloadToTt(const ir::Module &module, const DeviceConfig &config);

/// Rewrites each `tt_host` op into a `func.call @tt_rt_<name>`; attributes
/// that the runtime takes as arguments become i32 constants.
Result<ir::Module> hostToRuntime(const ir::Module &module);

} // namespace tenflow::passes

#endif // TENFLOW_PASSES_PASSES_H
