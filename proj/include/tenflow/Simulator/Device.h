// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_SIMULATOR_DEVICE_H
#define TENFLOW_SIMULATOR_DEVICE_H

#include "tenflow/Dialects/RuntimeAbi.h"
#include "tenflow/Exec/Value.h"
#include "tenflow/IR/IR.h"
#include "tenflow/Simulator/CircularBuffer.h"
#include "tenflow/Support/DeviceConfig.h"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tenflow::sim {

/// Receives one line per scheduler step, or nothing when null.
using TraceSink = std::vector<std::string>;

enum class BlockKind { Space, Data };

struct BlockInfo {
  int64_t cb = 0;
  int64_t need = 0;
  BlockKind kind = BlockKind::Space;
};

/// One of the reader/compute/writer engines of a core: a resumable
/// interpreter over a device function.
struct Engine {
  struct Frame {
    const ir::Block *block = nullptr;
    std::size_t pc = 0;
    /// Loop frames iterate their block until `current` reaches `upper`.
    bool loop = false;
    ir::ValueId iv = 0;
    int64_t current = 0, upper = 0, step = 1;
  };
  enum class Status { Runnable, Blocked, Done };

  dialects::KernelKind kind = dialects::KernelKind::Reader;
  const ir::Function *kernel = nullptr;
  std::vector<exec::RtValue> env;
  std::vector<Frame> frames;
  Status status = Status::Runnable;
  BlockInfo blocked;

  Engine() = default;
  /// Prepares to run `kernel` with `args` bound to its parameters.
  Engine(dialects::KernelKind kind, const ir::Function &kernel,
         const std::vector<exec::RtValue> &args);
};

struct CoreState {
  int64_t id = 0;
  std::map<int64_t, CircularBuffer> cbs;
  /// Indexed by KernelKind.
  std::array<std::optional<Engine>, 3> engines;
};

struct DeviceState {
  int64_t tileElems = 1024;
  /// Configured cores by id; iteration order is ascending id.
  std::map<int64_t, CoreState> cores;
  /// DRAM: one linear byte array per buffer id.
  std::map<int64_t, std::vector<uint8_t>> dram;
  uint64_t steps = 0;

  CoreState &core(int64_t id);
};

struct DeadlockReport {
  struct Entry {
    int64_t core = 0;
    dialects::KernelKind engine = dialects::KernelKind::Reader;
    std::string kernel;
    BlockInfo block;
  };
  std::vector<Entry> blocked;

  std::string str() const;
};

enum class RunStatus { Ok, Error, Deadlock, StepBudget };

struct DeviceRun {
  RunStatus status = RunStatus::Ok;
  std::string message;
  DeadlockReport deadlock;
};

/// Runs every installed engine to completion: sweeps cores in ascending id
/// and engines reader -> compute -> writer, running each until it blocks or
/// finishes. Fails with a DeadlockReport when a sweep makes no progress and
/// with StepBudget once `config.maxSteps` ops have been executed.
DeviceRun runDevice(DeviceState &state, const DeviceConfig &config,
                    TraceSink *trace = nullptr);

/// Evaluates one tt_compute op over tiles/scalars. Lane i of the result is
/// the f32 op applied to lane i of the operands with a single rounding.
exec::TileRef execComputeOp(const std::string &name,
                            const std::vector<exec::RtValue> &operands,
                            int64_t tileElems);

} // namespace tenflow::sim

#endif // TENFLOW_SIMULATOR_DEVICE_H
