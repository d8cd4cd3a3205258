// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Simulator/Runtime.h"

#include <cstring>

using namespace tenflow;
using namespace tenflow::exec;
using namespace tenflow::ir;
using namespace tenflow::sim;
using dialects::KernelKind;
using emitter::CallArg;
using emitter::RuntimeCall;

namespace {

KernelKind kindOf(const Function &fn) { return *dialects::parseKernelKind(*fn.kernelKind()); }

struct HostFailure {
  std::string message;
};

struct PendingKernel {
  const Function *fn = nullptr;
  std::optional<std::vector<RtValue>> args;
};

class Replayer {
public:
  Replayer(const Module &module, const DeviceConfig &config, ArrayStore &arrays,
           TraceSink *trace)
      : module(module), config(config), arrays(arrays), trace(trace) {
    state.tileElems = config.tileElems;
  }

  /// Executes one call. Returns false when a launch did not finish cleanly;
  /// `failedRun` then describes it.
  bool call(const RuntimeCall &call);

  DeviceState state;
  DeviceRun failedRun;

private:
  int64_t intArg(const RuntimeCall &call, std::size_t i) {
    if (i >= call.args.size())
      throw HostFailure{"'" + call.abi + "' expects more arguments"};
    const CallArg &a = call.args[i];
    if (a.kind != CallArg::Kind::Int)
      throw HostFailure{"'" + call.abi + "' argument " + std::to_string(i) +
                        " must be a known integer, got '" + a.str() + "'"};
    return a.i;
  }
  std::vector<uint8_t> &buffer(const RuntimeCall &call, int64_t id) {
    auto it = state.dram.find(id);
    if (it == state.dram.end())
      throw HostFailure{"'" + call.abi + "' uses unknown buffer id " + std::to_string(id)};
    return it->second;
  }
  std::vector<float> &array(const RuntimeCall &call, std::size_t i) {
    if (i >= call.args.size() || call.args[i].kind != CallArg::Kind::Array)
      throw HostFailure{"'" + call.abi + "' expects a host array argument"};
    auto it = arrays.find(call.args[i].array);
    if (it == arrays.end())
      throw HostFailure{"no host data bound for array '" + call.args[i].array + "'"};
    return it->second;
  }
  int64_t coreArg(const RuntimeCall &call) {
    int64_t core = intArg(call, 0);
    if (core < 0 || core >= config.numCores)
      throw HostFailure{"'" + call.abi + "' targets core " + std::to_string(core) +
                        " outside [0, " + std::to_string(config.numCores) + ")"};
    return core;
  }
  const Function &kernelOf(const RuntimeCall &call) {
    if (!call.kernel)
      throw HostFailure{"'" + call.abi + "' is missing its kernel symbol"};
    const Function *fn = module.lookup(*call.kernel);
    if (!fn || !fn->isDeviceFunction() || !dialects::parseKernelKind(*fn->kernelKind()))
      throw HostFailure{"'" + call.abi + "' names unknown device kernel @" + *call.kernel};
    return *fn;
  }
  bool launch();

  const Module &module;
  const DeviceConfig &config;
  ArrayStore &arrays;
  TraceSink *trace;

  bool open = false;
  bool awaiting = false;
  int64_t nextBuffer = 0;
  /// (core, kind) -> kernel pending for the next launch.
  std::map<std::pair<int64_t, int>, PendingKernel> kernels;
};

bool Replayer::call(const RuntimeCall &c) {
  if (trace)
    trace->push_back(c.str());
  const std::string &abi = c.abi;
  if (abi == "tt_rt_open_device") {
    if (open)
      throw HostFailure{"device opened twice"};
    open = true;
    return true;
  }
  if (!open)
    throw HostFailure{"'" + abi + "' called before tt_rt_open_device"};

  if (abi == "tt_rt_close_device") {
    if (awaiting)
      throw HostFailure{"device closed while a launch is still in flight"};
    open = false;
  } else if (abi == "tt_rt_create_buffer") {
    int64_t bytes = intArg(c, 0);
    if (bytes < 0 || bytes % 4 != 0)
      throw HostFailure{"invalid buffer size " + std::to_string(bytes)};
    state.dram[nextBuffer++] = std::vector<uint8_t>(bytes);
  } else if (abi == "tt_rt_write_buffer") {
    std::vector<uint8_t> &buf = buffer(c, intArg(c, 0));
    const std::vector<float> &src = array(c, 1);
    if (src.size() * 4 < buf.size())
      throw HostFailure{"payload length mismatch for '" + c.args[1].array + "'"};
    if (!buf.empty())
      std::memcpy(buf.data(), src.data(), buf.size());
  } else if (abi == "tt_rt_read_buffer") {
    if (awaiting)
      throw HostFailure{"read before wait: buffer read while a launch is in flight"};
    std::vector<uint8_t> &buf = buffer(c, intArg(c, 0));
    std::vector<float> &dst = array(c, 1);
    if (dst.size() * 4 < buf.size())
      throw HostFailure{"payload length mismatch for '" + c.args[1].array + "'"};
    if (!buf.empty())
      std::memcpy(dst.data(), buf.data(), buf.size());
  } else if (abi == "tt_rt_create_cb") {
    int64_t core = coreArg(c), id = intArg(c, 1), capacity = intArg(c, 2);
    if (id < 0 || id >= dialects::kNumCircularBuffers)
      throw HostFailure{"circular buffer id " + std::to_string(id) + " out of range"};
    if (capacity <= 0)
      throw HostFailure{"circular buffer capacity must be positive"};
    state.core(core).cbs[id] = CircularBuffer(capacity);
  } else if (abi == "tt_rt_create_kernel") {
    int64_t core = coreArg(c), kind = intArg(c, 1);
    if (kind < 0 || kind > 2)
      throw HostFailure{"unknown kernel kind " + std::to_string(kind)};
    const Function &fn = kernelOf(c);
    if (static_cast<int>(kindOf(fn)) != kind)
      throw HostFailure{"kernel @" + fn.name + " is a " + *fn.kernelKind() +
                        " kernel but was created as " +
                        dialects::kernelKindName(static_cast<KernelKind>(kind))};
    state.core(core);
    kernels[{core, static_cast<int>(kind)}] = {&fn, std::nullopt};
  } else if (abi == "tt_rt_set_runtime_args") {
    int64_t core = coreArg(c);
    const Function &fn = kernelOf(c);
    auto it = kernels.find({core, static_cast<int>(kindOf(fn))});
    if (it == kernels.end() || it->second.fn != &fn)
      throw HostFailure{"runtime args for @" + fn.name + " on core " +
                        std::to_string(core) + " before the kernel was created"};
    const std::vector<ValueId> &params = fn.args();
    if (c.args.size() - 1 != params.size())
      throw HostFailure{"kernel signature mismatch: @" + fn.name + " takes " +
                        std::to_string(params.size()) + " arguments, got " +
                        std::to_string(c.args.size() - 1)};
    std::vector<RtValue> values;
    for (std::size_t i = 0; i < params.size(); ++i) {
      const CallArg &a = c.args[i + 1];
      bool isFloat = fn.typeOf(params[i]).isF32();
      if (a.kind == CallArg::Kind::Int && !isFloat)
        values.push_back(RtValue::ofInt(wrapInteger(a.i, fn.typeOf(params[i]))));
      else if (a.kind == CallArg::Kind::Float && isFloat)
        values.push_back(RtValue::ofFloat(a.f));
      else
        throw HostFailure{"kernel signature mismatch: argument " + std::to_string(i) +
                          " of @" + fn.name + " has type " +
                          fn.typeOf(params[i]).str() + ", got '" + a.str() + "'"};
    }
    it->second.args = std::move(values);
  } else if (abi == "tt_rt_launch") {
    if (awaiting)
      throw HostFailure{"launch while a previous launch is in flight"};
    awaiting = true;
    return launch();
  } else if (abi == "tt_rt_wait") {
    awaiting = false;
  } else {
    throw HostFailure{"unknown runtime function '" + abi + "'"};
  }
  return true;
}

bool Replayer::launch() {
  if (kernels.empty())
    throw HostFailure{"launch without kernels"};
  auto tile = module.attrs.find("tt.tile_elems");
  if (tile != module.attrs.end() && tile->second.isInteger() &&
      tile->second.getInt() != config.tileElems)
    throw HostFailure{"module was compiled for tt.tile_elems = " +
                      std::to_string(tile->second.getInt()) +
                      " but the device uses " + std::to_string(config.tileElems)};
  for (auto &[key, pending] : kernels) {
    if (!pending.args)
      throw HostFailure{"kernel @" + pending.fn->name + " on core " +
                        std::to_string(key.first) + " launched without runtime args"};
    state.core(key.first).engines[key.second] =
        Engine(kindOf(*pending.fn), *pending.fn, *pending.args);
  }
  DeviceRun run = runDevice(state, config, trace);
  kernels.clear();
  state.cores.clear();
  if (run.status != RunStatus::Ok) {
    failedRun = std::move(run);
    return false;
  }
  return true;
}

} // namespace

HostRun sim::replayHost(const emitter::HostProgram &program, const Module &module,
                        const DeviceConfig &config, ArrayStore arrays, TraceSink *trace) {
  HostRun result;
  Replayer replayer(module, config, arrays, trace);
  try {
    for (const RuntimeCall &c : program.calls)
      if (!replayer.call(c)) {
        result.status = replayer.failedRun.status;
        result.message = replayer.failedRun.message;
        result.deadlock = replayer.failedRun.deadlock;
        break;
      }
  } catch (HostFailure &f) {
    result.status = RunStatus::Error;
    result.message = f.message;
  }
  result.steps = replayer.state.steps;
  result.arrays = std::move(arrays);
  return result;
}
