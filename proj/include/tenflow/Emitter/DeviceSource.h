// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_EMITTER_DEVICESOURCE_H
#define TENFLOW_EMITTER_DEVICESOURCE_H

#include "tenflow/Dialects/RuntimeAbi.h"
#include "tenflow/IR/IR.h"
#include "tenflow/Support/Diagnostic.h"

#include <string>
#include <vector>

namespace tenflow::emitter {

/// C-style rendering of one device kernel against the mock device API.
struct DeviceSourceUnit {
  std::string kernel;
  dialects::KernelKind kind = dialects::KernelKind::Reader;
  std::string text;
  /// Distinct API functions called, in order of first use.
  std::vector<std::string> apiCalls;

  std::string fileName() const { return kernel + ".cpp.txt"; }
};

Result<DeviceSourceUnit> emitDeviceSource(const ir::Module &module,
                                          const std::string &kernel);

/// Every device function of the module, in module order.
Result<std::vector<DeviceSourceUnit>> emitAllDeviceSources(const ir::Module &module);

} // namespace tenflow::emitter

#endif // TENFLOW_EMITTER_DEVICESOURCE_H
