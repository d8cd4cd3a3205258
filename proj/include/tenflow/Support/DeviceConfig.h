// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_SUPPORT_DEVICECONFIG_H
#define TENFLOW_SUPPORT_DEVICECONFIG_H

#include <cstdint>

namespace tenflow {

/// Shape of the simulated accelerator. Shared by the offload lowering (core
/// count and tile width are compile-time facts there) and the simulator.
struct DeviceConfig {
  int64_t numCores = 128;
  int64_t tileElems = 1024;
  int64_t cbCapacity = 2;
  int64_t maxSteps = 10'000'000;
};

} // namespace tenflow

#endif // TENFLOW_SUPPORT_DEVICECONFIG_H
