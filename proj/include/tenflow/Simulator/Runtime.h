// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_SIMULATOR_RUNTIME_H
#define TENFLOW_SIMULATOR_RUNTIME_H

#include "tenflow/Emitter/HostProgram.h"
#include "tenflow/Simulator/Device.h"

#include <map>
#include <string>
#include <vector>

namespace tenflow::sim {

using ArrayStore = std::map<std::string, std::vector<float>>;

struct HostRun {
  RunStatus status = RunStatus::Ok;
  std::string message;
  DeadlockReport deadlock;
  /// Host arrays after the program finished (or stopped).
  ArrayStore arrays;
  uint64_t steps = 0;

  bool ok() const { return status == RunStatus::Ok; }
};

/// Replays a host program against the simulated device. `arrays` holds the
/// host-side contents referenced by `data:<name>` arguments. Each launch runs
/// every configured core to completion, then discards the per-core setup
/// (circular buffers, kernels, runtime args); DRAM persists. When `trace` is
/// set, host calls are logged as `CALL ...` and device steps as `STEP ...`.
HostRun replayHost(const emitter::HostProgram &program, const ir::Module &module,
                   const DeviceConfig &config, ArrayStore arrays,
                   TraceSink *trace = nullptr);

} // namespace tenflow::sim

#endif // TENFLOW_SIMULATOR_RUNTIME_H
