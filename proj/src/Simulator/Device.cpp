// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Simulator/Device.h"

#include <cstring>
#include <sstream>

using namespace tenflow;
using namespace tenflow::exec;
using namespace tenflow::ir;
using namespace tenflow::sim;
using dialects::KernelKind;
using dialects::kernelKindName;

Engine::Engine(KernelKind kind, const Function &kernel, const std::vector<RtValue> &args)
    : kind(kind), kernel(&kernel), env(kernel.valueTypes.size()) {
  for (std::size_t i = 0; i < args.size() && i < kernel.args().size(); ++i)
    env[kernel.args()[i]] = args[i];
  frames.push_back({&kernel.entry(), 0});
}

CoreState &DeviceState::core(int64_t id) {
  auto [it, inserted] = cores.try_emplace(id);
  it->second.id = id;
  return it->second;
}

std::string DeadlockReport::str() const {
  std::ostringstream os;
  os << "deadlock: no engine can make progress";
  for (const Entry &e : blocked)
    os << "\n  core " << e.core << " " << kernelKindName(e.engine) << " @" << e.kernel
       << " blocked on cb=" << e.block.cb << " need=" << e.block.need
       << " kind=" << (e.block.kind == BlockKind::Space ? "space" : "data");
  return os.str();
}

TileRef sim::execComputeOp(const std::string &name, const std::vector<RtValue> &o,
                           int64_t tileElems) {
  auto out = std::make_shared<TileData>(tileElems);
  TileData &r = *out;
  if (name == "fill") {
    std::fill(r.begin(), r.end(), o[0].f);
    return out;
  }
  const TileData &a = *o[0].tile;
  if (name == "mul_scalar" || name == "add_scalar") {
    float s = o[1].f;
    for (int64_t i = 0; i < tileElems; ++i)
      r[i] = name == "mul_scalar" ? a[i] * s : a[i] + s;
    return out;
  }
  const TileData &b = *o[1].tile;
  if (name == "add_tiles")
    for (int64_t i = 0; i < tileElems; ++i)
      r[i] = a[i] + b[i];
  else if (name == "sub_tiles")
    for (int64_t i = 0; i < tileElems; ++i)
      r[i] = a[i] - b[i];
  else if (name == "mul_tiles")
    for (int64_t i = 0; i < tileElems; ++i)
      r[i] = a[i] * b[i];
  else if (name == "div_tiles")
    for (int64_t i = 0; i < tileElems; ++i)
      r[i] = a[i] / b[i];
  else
    return nullptr;
  return out;
}

namespace {

struct SimFailure {
  std::string message;
};

enum class StepResult { Executed, Blocked, Done };

class Scheduler {
public:
  Scheduler(DeviceState &state, const DeviceConfig &config, TraceSink *trace)
      : state(state), config(config), trace(trace) {}

  DeviceRun run();

private:
  /// Runs `engine` until it blocks or finishes. Returns true if any op
  /// completed.
  bool runEngine(CoreState &core, Engine &engine);
  StepResult step(CoreState &core, Engine &engine);
  void record(const CoreState &core, const Engine &engine, const Operation &op,
              const BlockInfo *block = nullptr);

  CircularBuffer &cbOf(CoreState &core, const Operation &op) {
    int64_t id = *op.getIntAttr("cb");
    auto it = core.cbs.find(id);
    if (it == core.cbs.end())
      throw SimFailure{"circular buffer " + std::to_string(id) +
                       " was not created on core " + std::to_string(core.id)};
    return it->second;
  }

  std::vector<uint8_t> &buffer(int64_t id) {
    auto it = state.dram.find(id);
    if (it == state.dram.end())
      throw SimFailure{"unknown buffer id " + std::to_string(id)};
    return it->second;
  }

  DeviceState &state;
  const DeviceConfig &config;
  TraceSink *trace;
};

void Scheduler::record(const CoreState &core, const Engine &engine, const Operation &op,
                       const BlockInfo *block) {
  ++state.steps;
  if (!trace)
    return;
  std::string line = "STEP " + std::to_string(state.steps) + " CORE " +
                     std::to_string(core.id) + " ENGINE " + kernelKindName(engine.kind) +
                     " OP " + op.fullName();
  if (block)
    line += " BLOCK cb=" + std::to_string(block->cb) +
            " need=" + std::to_string(block->need) +
            " kind=" + (block->kind == BlockKind::Space ? "space" : "data");
  trace->push_back(std::move(line));
}

StepResult Scheduler::step(CoreState &core, Engine &engine) {
  Engine::Frame &frame = engine.frames.back();
  const Operation &op = frame.block->ops.at(frame.pc);
  std::vector<RtValue> &env = engine.env;
  auto in = [&](std::size_t i) -> const RtValue & { return env[op.operands[i]]; };
  auto done = [&]() {
    record(core, engine, op);
    ++engine.frames.back().pc;
    return StepResult::Executed;
  };

  if (op.dialect == "arith") {
    std::vector<RtValue> operands;
    operands.reserve(op.operands.size());
    for (ValueId v : op.operands)
      operands.push_back(env[v]);
    std::string err;
    if (!evalArith(op, operands, engine.kernel->typeOf(op.results[0]), env[op.results[0]],
                   err))
      throw SimFailure{err};
    return done();
  }
  if (op.is("scf", "for")) {
    int64_t lb = in(0).i, ub = in(1).i, st = in(2).i;
    if (st <= 0)
      throw SimFailure{"scf.for with non-positive step"};
    record(core, engine, op);
    ++frame.pc;
    if (lb < ub) {
      const Block &body = op.regions.front().front();
      env[body.args[0]] = RtValue::ofInt(lb);
      engine.frames.push_back({&body, 0, true, body.args[0], lb, ub, st});
    }
    return StepResult::Executed;
  }
  if (op.is("scf", "yield")) {
    record(core, engine, op);
    frame.current += frame.step;
    if (frame.current < frame.upper) {
      env[frame.iv] = RtValue::ofInt(frame.current);
      frame.pc = 0;
    } else {
      engine.frames.pop_back();
    }
    return StepResult::Executed;
  }
  if (op.is("func", "return")) {
    record(core, engine, op);
    engine.frames.clear();
    engine.status = Engine::Status::Done;
    return StepResult::Done;
  }

  if (op.dialect == "tt_cb") {
    static const std::map<std::string, CbOp> ops = {{"reserve", CbOp::Reserve},
                                                    {"push", CbOp::Push},
                                                    {"wait", CbOp::Wait},
                                                    {"pop", CbOp::Pop}};
    CircularBuffer &cb = cbOf(core, op);
    std::string err;
    if (auto it = ops.find(op.name); it != ops.end()) {
      int64_t n = *op.getIntAttr("n");
      CbResult r = cb.apply(it->second, n);
      if (r.status == CbStatus::Violation)
        throw SimFailure{"protocol violation on cb " + std::to_string(*op.getIntAttr("cb")) +
                         ": " + r.message};
      if (r.status == CbStatus::Block) {
        BlockInfo info{*op.getIntAttr("cb"), n,
                       it->second == CbOp::Reserve ? BlockKind::Space : BlockKind::Data};
        if (engine.status != Engine::Status::Blocked)
          record(core, engine, op, &info);
        engine.status = Engine::Status::Blocked;
        engine.blocked = info;
        return StepResult::Blocked;
      }
      engine.status = Engine::Status::Runnable;
      return done();
    }
    if (op.name == "write_slot") {
      if (!cb.writeSlot(in(0).tile, err))
        throw SimFailure{err};
      return done();
    }
    if (op.name == "read_slot") {
      TileRef t = cb.front(err);
      if (!t)
        throw SimFailure{err};
      env[op.results[0]] = RtValue::ofTile(t);
      return done();
    }
  }

  if (op.dialect == "tt_dm") {
    if (op.name == "barrier")
      return done();
    int64_t T = state.tileElems;
    int64_t id = in(0).i, tile = in(1).i, valid = in(2).i;
    if (valid < 0 || valid > T)
      throw SimFailure{"tile element count " + std::to_string(valid) +
                       " outside [0, " + std::to_string(T) + "]"};
    std::vector<uint8_t> &buf = buffer(id);
    int64_t offset = tile * T * 4;
    if (tile < 0 || offset + valid * 4 > static_cast<int64_t>(buf.size()))
      throw SimFailure{op.fullName() + " of tile " + std::to_string(tile) +
                       " is out of bounds of buffer " + std::to_string(id) + " (" +
                       std::to_string(buf.size()) + " bytes)"};
    CircularBuffer &cb = cbOf(core, op);
    std::string err;
    if (op.name == "read_tile") {
      auto data = std::make_shared<TileData>(
          T, static_cast<float>(op.getAttr("pad")->getFloat()));
      if (valid > 0)
        std::memcpy(data->data(), buf.data() + offset, valid * 4);
      if (!cb.writeSlot(data, err))
        throw SimFailure{err};
      return done();
    }
    if (op.name == "write_tile") {
      TileRef t = cb.front(err);
      if (!t)
        throw SimFailure{err};
      if (valid > 0)
        std::memcpy(buf.data() + offset, t->data(), valid * 4);
      return done();
    }
  }

  if (op.dialect == "tt_compute") {
    if (op.name == "init")
      return done();
    std::string err;
    if (op.name == "copy_in") {
      TileRef t = cbOf(core, op).front(err);
      if (!t)
        throw SimFailure{err};
      env[op.results[0]] = RtValue::ofTile(t);
      return done();
    }
    if (op.name == "pack_out") {
      if (!cbOf(core, op).writeSlot(in(0).tile, err))
        throw SimFailure{err};
      return done();
    }
    std::vector<RtValue> operands;
    for (ValueId v : op.operands)
      operands.push_back(env[v]);
    TileRef t = execComputeOp(op.name, operands, state.tileElems);
    if (!t)
      throw SimFailure{"unsupported compute op '" + op.fullName() + "'"};
    env[op.results[0]] = RtValue::ofTile(std::move(t));
    return done();
  }

  throw SimFailure{"'" + op.fullName() + "' cannot execute on a device engine"};
}

bool Scheduler::runEngine(CoreState &core, Engine &engine) {
  bool progressed = false;
  while (engine.status != Engine::Status::Done) {
    if (state.steps >= static_cast<uint64_t>(config.maxSteps))
      return progressed;
    StepResult r;
    try {
      r = step(core, engine);
    } catch (SimFailure &f) {
      const Engine::Frame &frame = engine.frames.back();
      throw SimFailure{"core " + std::to_string(core.id) + " " + kernelKindName(engine.kind) +
                       " @" + engine.kernel->name + " at '" +
                       frame.block->ops[frame.pc].fullName() + "': " + f.message};
    }
    if (r == StepResult::Blocked)
      return progressed;
    progressed = true;
  }
  return progressed;
}

DeviceRun Scheduler::run() {
  DeviceRun result;
  try {
    while (true) {
      bool progressed = false, allDone = true;
      for (auto &[id, core] : state.cores)
        for (std::optional<Engine> &engine : core.engines) {
          if (!engine || engine->status == Engine::Status::Done)
            continue;
          progressed |= runEngine(core, *engine);
          if (engine->status != Engine::Status::Done)
            allDone = false;
          if (state.steps >= static_cast<uint64_t>(config.maxSteps) && !allDone) {
            result.status = RunStatus::StepBudget;
            result.message = "step budget of " + std::to_string(config.maxSteps) +
                             " exhausted; core " + std::to_string(id) + " " +
                             kernelKindName(engine->kind) + " still running";
            return result;
          }
        }
      if (allDone)
        return result;
      if (!progressed) {
        result.status = RunStatus::Deadlock;
        for (auto &[id, core] : state.cores)
          for (std::optional<Engine> &engine : core.engines)
            if (engine && engine->status == Engine::Status::Blocked)
              result.deadlock.blocked.push_back(
                  {id, engine->kind, engine->kernel->name, engine->blocked});
        result.message = result.deadlock.str();
        return result;
      }
    }
  } catch (SimFailure &f) {
    result.status = RunStatus::Error;
    result.message = f.message;
  }
  return result;
}

} // namespace

DeviceRun sim::runDevice(DeviceState &state, const DeviceConfig &config, TraceSink *trace) {
  return Scheduler(state, config, trace).run();
}
