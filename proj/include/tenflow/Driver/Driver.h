// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_DRIVER_DRIVER_H
#define TENFLOW_DRIVER_DRIVER_H

#include "tenflow/Exec/Inputs.h"
#include "tenflow/Passes/Pipeline.h"
#include "tenflow/Simulator/Runtime.h"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tenflow::driver {

enum class InputKind { Fortran, Tir };

/// `.tir` files are parsed as IR; everything else goes through the frontend.
InputKind inputKindFor(const std::string &path);

struct Compilation {
  /// Frontend output, or the parsed `.tir` input.
  ir::Module initial;
  passes::PipelineResult lowered;

  /// True if the input still has offload regions to execute on the device.
  bool hasOffload() const;
  /// True if the lowered module has device kernels.
  bool hasKernels() const;
};

Result<Compilation> compile(std::string_view text, InputKind kind,
                            const passes::PassPipeline &pipeline,
                            const DeviceConfig &config);

/// Parses `name=value` bindings against the host entry's arguments. Array
/// values are `@file` (flat little-endian f32) or `[v0, v1, ...]`; scalars
/// are decimal text.
Result<exec::Inputs> parseBindings(const std::vector<std::string> &specs,
                                   const ir::Module &module);

/// Reads a flat little-endian f32 file.
Result<std::vector<float>> readF32File(const std::string &path);
bool writeF32File(const std::string &path, const std::vector<float> &data);

struct Mismatch {
  std::string array;
  std::size_t index = 0;
  float expected = 0;
  float actual = 0;

  std::string str() const;
};

/// First element whose bit pattern differs between `expected` and
/// `actual`, comparing every array present in `expected`.
std::optional<Mismatch> firstMismatch(const sim::ArrayStore &expected,
                                      const sim::ArrayStore &actual);

/// Emits the host program for the lowered module and replays it on the
/// simulator.
Result<sim::HostRun> runOnDevice(const Compilation &compilation, const exec::Inputs &inputs,
                                 const DeviceConfig &config,
                                 sim::TraceSink *trace = nullptr);

struct CheckOutcome {
  sim::ArrayStore reference;
  /// Absent when the program has no offload region.
  std::optional<sim::HostRun> device;
  std::optional<Mismatch> mismatch;

  bool passed() const { return (!device || device->ok()) && !mismatch; }
};

/// Runs the reference interpreter on the initial module and, if there is
/// anything to offload, the simulator on the lowered one, then compares.
Result<CheckOutcome> check(const Compilation &compilation, const exec::Inputs &inputs,
                           const DeviceConfig &config, sim::TraceSink *trace = nullptr);

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kExitOk = 0,
  kExitDiagnostics = 1,
  kExitDeviceFailure = 2,
  kExitMismatch = 3,
};

/// Exit code for a completed check: device failures first, then mismatches.
ExitCode exitCodeFor(const CheckOutcome &outcome);

/// The `tenflow` command line. Diagnostics go to `err`.
int runCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace tenflow::driver

#endif // TENFLOW_DRIVER_DRIVER_H
