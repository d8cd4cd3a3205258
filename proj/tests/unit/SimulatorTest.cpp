// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "CbModel.h"
#include "Corpus.h"
#include "ProgramGen.h"
#include "TestUtil.h"

#include "tenflow/Driver/Driver.h"
#include "tenflow/Frontend/Lowering.h"
#include "tenflow/IR/Parser.h"
#include "tenflow/Simulator/Device.h"
#include "tenflow/Simulator/Interpreter.h"
#include "tenflow/Simulator/Runtime.h"

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>

using namespace tenflow;
using namespace tenflow::sim;
using namespace tenflow::testing;
using emitter::CallArg;
using emitter::HostProgram;
using emitter::RuntimeCall;

namespace {

//===----------------------------------------------------------------------===//
// Circular buffer model
//===----------------------------------------------------------------------===//

TEST(CircularBuffer, SingleRound) {
  CbCounts cb{2};
  EXPECT_EQ(cbTransition(cb, CbOp::Reserve, 1).status, CbStatus::Ok);
  EXPECT_EQ(cbTransition(cb, CbOp::Push, 1).status, CbStatus::Ok);
  EXPECT_EQ(cbTransition(cb, CbOp::Wait, 1).status, CbStatus::Ok);
  EXPECT_EQ(cbTransition(cb, CbOp::Pop, 1).status, CbStatus::Ok);
  EXPECT_EQ(cb, (CbCounts{2, 0, 0, 0}));
}

TEST(CircularBuffer, CapacityBlocks) {
  CbCounts cb{2};
  EXPECT_EQ(cbTransition(cb, CbOp::Reserve, 2).status, CbStatus::Ok);
  CbCounts before = cb;
  EXPECT_EQ(cbTransition(cb, CbOp::Reserve, 1).status, CbStatus::Block);
  EXPECT_EQ(cb, before);
  EXPECT_EQ(cbTransition(cb, CbOp::Wait, 1).status, CbStatus::Block);
}

TEST(CircularBuffer, ProtocolViolations) {
  CbCounts cb{2};
  CbResult r = cbTransition(cb, CbOp::Push, 1);
  EXPECT_EQ(r.status, CbStatus::Violation);
  EXPECT_NE(r.message.find("without a matching reserve"), std::string::npos);
  ASSERT_EQ(cbTransition(cb, CbOp::Reserve, 1).status, CbStatus::Ok);
  ASSERT_EQ(cbTransition(cb, CbOp::Push, 1).status, CbStatus::Ok);
  r = cbTransition(cb, CbOp::Pop, 1);
  EXPECT_EQ(r.status, CbStatus::Violation);
  EXPECT_NE(r.message.find("without a matching wait"), std::string::npos);
  EXPECT_EQ(cbTransition(cb, CbOp::Wait, 0).status, CbStatus::Violation);
}

TEST(CircularBuffer, ExhaustiveSmallModels) {
  for (int capacity = 1; capacity <= 3; ++capacity) {
    ModelCheckStats stats = exhaustiveCbCheck(capacity, 8, capacity + 1);
    EXPECT_EQ(stats.failure, "");
    EXPECT_GT(stats.states, 0u);
  }
}

TEST(CircularBuffer, RandomLongTraces) {
  for (uint64_t seed = 1; seed <= 5; ++seed)
    EXPECT_EQ(randomCbCheck(seed, 10000), "") << "seed " << seed;
}

TEST(CircularBuffer, TaggedTilesArriveInOrder) {
  CircularBuffer cb(3);
  std::string err;
  int produced = 0, consumed = 0;
  std::mt19937_64 rng(3);
  while (consumed < 200) {
    if (rng() % 2 && cb.apply(CbOp::Reserve, 1).status == CbStatus::Ok) {
      ASSERT_TRUE(cb.writeSlot(std::make_shared<exec::TileData>(1, float(produced++)), err));
      ASSERT_EQ(cb.apply(CbOp::Push, 1).status, CbStatus::Ok);
    } else if (cb.apply(CbOp::Wait, 1).status == CbStatus::Ok) {
      exec::TileRef t = cb.front(err);
      ASSERT_TRUE(t);
      EXPECT_EQ((*t)[0], float(consumed++));
      ASSERT_EQ(cb.apply(CbOp::Pop, 1).status, CbStatus::Ok);
    }
  }
}

TEST(CircularBuffer, SlotErrors) {
  CircularBuffer cb(2);
  std::string err;
  EXPECT_FALSE(cb.writeSlot(std::make_shared<exec::TileData>(1), err));
  EXPECT_FALSE(cb.front(err));
  ASSERT_EQ(cb.apply(CbOp::Reserve, 1).status, CbStatus::Ok);
  ASSERT_EQ(cb.apply(CbOp::Push, 1).status, CbStatus::Ok);
  ASSERT_EQ(cb.apply(CbOp::Wait, 1).status, CbStatus::Ok);
  EXPECT_FALSE(cb.front(err));
  EXPECT_NE(err.find("without being written"), std::string::npos);
}

//===----------------------------------------------------------------------===//
// Compute ops
//===----------------------------------------------------------------------===//

exec::RtValue tile(std::vector<float> v) {
  return exec::RtValue::ofTile(std::make_shared<exec::TileData>(std::move(v)));
}

TEST(ComputeOps, Examples) {
  auto r = execComputeOp("mul_scalar", {tile({1, 2, 3, 0}), exec::RtValue::ofFloat(2)}, 4);
  EXPECT_EQ(*r, (exec::TileData{2, 4, 6, 0}));
  exec::RtValue t = tile({1.5f, -2, 1e30f, 7});
  EXPECT_EQ(*execComputeOp("add_tiles", {t, tile({0, 0, 0, 0})}, 4), *t.tile);
  EXPECT_EQ(*execComputeOp("fill", {exec::RtValue::ofFloat(3)}, 4), (exec::TileData{3, 3, 3, 3}));
  EXPECT_EQ(*execComputeOp("sub_tiles", {t, t}, 4), (exec::TileData{0, 0, 0, 0}));
  EXPECT_EQ(*execComputeOp("div_tiles", {tile({1, 4, 9, 2}), tile({1, 2, 3, 4})}, 4),
            (exec::TileData{1, 2, 3, 0.5f}));
  EXPECT_EQ(*execComputeOp("add_scalar", {tile({1, 2, 3, 4}), exec::RtValue::ofFloat(1)}, 4),
            (exec::TileData{2, 3, 4, 5}));
  EXPECT_EQ(execComputeOp("nonsense", {t, t}, 4), nullptr);
}

TEST(ComputeOps, SaxpyTileRoundsTwice) {
  const int64_t T = 1024;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<float> dist(-1e4f, 1e4f);
  exec::TileData x(T), y(T);
  for (int64_t i = 0; i < T; ++i) {
    x[i] = dist(rng);
    y[i] = dist(rng);
  }
  float a = 1.1f;
  auto ax = execComputeOp("mul_scalar", {tile(x), exec::RtValue::ofFloat(a)}, T);
  auto out = execComputeOp("add_tiles", {exec::RtValue::ofTile(ax), tile(y)}, T);
  int fusedDiffers = 0;
  for (int64_t i = 0; i < T; ++i) {
    volatile float product = a * x[i];
    float expected = product + y[i];
    EXPECT_EQ(std::memcmp(&(*out)[i], &expected, 4), 0) << i;
    fusedDiffers += std::fma(a, x[i], y[i]) != expected;
  }
  // The sample must be able to tell fused from unfused arithmetic.
  EXPECT_GT(fusedDiffers, 0);
}

//===----------------------------------------------------------------------===//
// Host replay and device execution
//===----------------------------------------------------------------------===//

exec::Inputs saxpyInputs(int64_t n) {
  exec::Inputs in;
  in.scalars = {{"a", "2"}, {"n", std::to_string(n)}};
  in.arrays["x"] = {1, 2, 3};
  in.arrays["y"] = {10, 20, 30};
  return in;
}

Result<driver::Compilation> compileFile(const std::string &relative,
                                        const DeviceConfig &config) {
  passes::PassPipeline pipeline;
  pipeline.passes = passes::defaultPipeline();
  return driver::compile(readData(relative), driver::inputKindFor(relative), pipeline, config);
}

TEST(Replay, SaxpyThreeElements) {
  auto c = compileCorpus("saxpy.f90");
  ASSERT_TRUE(c.ok());
  auto run = driver::runOnDevice(*c, saxpyInputs(3), {});
  ASSERT_TRUE(run.ok()) << joinDiagnostics(run.diagnostics());
  ASSERT_TRUE(run->ok()) << run->message;
  EXPECT_EQ(run->arrays.at("y"), (std::vector<float>{12, 24, 36}));
  EXPECT_EQ(run->arrays.at("x"), (std::vector<float>{1, 2, 3}));

  auto ref = interpretStd(c->initial, saxpyInputs(3));
  ASSERT_TRUE(ref.ok());
  EXPECT_EQ(ref->at("y"), (std::vector<float>{12, 24, 36}));
}

TEST(Replay, ZeroTripLeavesOutputs) {
  auto c = compileCorpus("saxpy.f90");
  ASSERT_TRUE(c.ok());
  auto run = driver::runOnDevice(*c, saxpyInputs(0), {});
  ASSERT_TRUE(run.ok() && run->ok()) << (run.ok() ? run->message : "");
  EXPECT_EQ(run->arrays.at("y"), (std::vector<float>{10, 20, 30}));
  auto ref = interpretStd(c->initial, saxpyInputs(0));
  ASSERT_TRUE(ref.ok());
  EXPECT_EQ(ref->at("y"), (std::vector<float>{10, 20, 30}));
}

TEST(Replay, OpenCloseOnly) {
  HostProgram p;
  p.calls = {{"tt_rt_open_device", {}, {}}, {"tt_rt_close_device", {}, {}}};
  HostRun run = replayHost(p, {}, {}, {});
  EXPECT_TRUE(run.ok()) << run.message;
  EXPECT_TRUE(run.arrays.empty());
  EXPECT_EQ(run.steps, 0u);
}

std::string replayError(std::vector<RuntimeCall> calls, const ir::Module &m = {},
                        DeviceConfig config = {}) {
  HostProgram p;
  p.calls = std::move(calls);
  HostRun run = replayHost(p, m, config, {{"x", {1, 2, 3, 4}}});
  EXPECT_EQ(run.status, RunStatus::Error);
  return run.message;
}

RuntimeCall call(std::string abi, std::vector<CallArg> args = {},
                 std::optional<std::string> kernel = std::nullopt) {
  return {std::move(abi), std::move(args), std::move(kernel)};
}

TEST(Replay, HostErrors) {
  RuntimeCall open = call("tt_rt_open_device");
  EXPECT_NE(replayError({call("tt_rt_create_buffer", {CallArg::ofInt(16)})})
                .find("before tt_rt_open_device"),
            std::string::npos);
  EXPECT_NE(replayError({open, call("tt_rt_write_buffer", {CallArg::ofInt(3), CallArg::ofArray("x")})})
                .find("unknown buffer id 3"),
            std::string::npos);
  EXPECT_NE(replayError({open, call("tt_rt_launch")}).find("launch without kernels"),
            std::string::npos);
  EXPECT_NE(replayError({open, call("tt_rt_create_buffer", {CallArg::ofInt(16)}),
                         call("tt_rt_create_cb", {CallArg::ofInt(0), CallArg::ofInt(0),
                                                  CallArg::ofInt(2)}),
                         call("tt_rt_launch")})
                .find("launch without kernels"),
            std::string::npos);
  EXPECT_NE(replayError({open, call("tt_rt_create_cb", {CallArg::ofInt(128), CallArg::ofInt(0),
                                                        CallArg::ofInt(2)})})
                .find("outside [0, 128)"),
            std::string::npos);
  EXPECT_NE(replayError({open, call("tt_rt_create_buffer", {CallArg()})}).find("known integer"),
            std::string::npos);
  EXPECT_NE(replayError({open, call("tt_rt_frobnicate")}).find("unknown runtime function"),
            std::string::npos);
}

TEST(Replay, ReadBeforeWait) {
  auto c = compileCorpus("saxpy.f90");
  ASSERT_TRUE(c.ok());
  auto program = emitter::emitHostProgram(c->lowered.module, saxpyInputs(3));
  ASSERT_TRUE(program.ok());
  auto &calls = program->calls;
  auto wait = std::find_if(calls.begin(), calls.end(),
                           [](const RuntimeCall &c) { return c.abi == "tt_rt_wait"; });
  ASSERT_NE(wait, calls.end());
  calls.erase(wait);
  HostRun run = replayHost(*program, c->lowered.module, {}, saxpyInputs(3).arrays);
  EXPECT_EQ(run.status, RunStatus::Error);
  EXPECT_NE(run.message.find("read before wait"), std::string::npos) << run.message;
}

TEST(Replay, KernelSignatureAndTileWidthMismatch) {
  auto c = compileCorpus("saxpy.f90");
  ASSERT_TRUE(c.ok());
  auto program = emitter::emitHostProgram(c->lowered.module, saxpyInputs(3));
  ASSERT_TRUE(program.ok());

  HostProgram dropped = *program;
  for (RuntimeCall &rc : dropped.calls)
    if (rc.abi == "tt_rt_set_runtime_args")
      rc.args.pop_back();
  HostRun run = replayHost(dropped, c->lowered.module, {}, saxpyInputs(3).arrays);
  EXPECT_NE(run.message.find("kernel signature mismatch"), std::string::npos) << run.message;

  HostProgram swapped = *program;
  for (RuntimeCall &rc : swapped.calls)
    if (rc.abi == "tt_rt_set_runtime_args")
      rc.args.back() = CallArg::ofInt(2);
  run = replayHost(swapped, c->lowered.module, {}, saxpyInputs(3).arrays);
  EXPECT_NE(run.message.find("kernel signature mismatch"), std::string::npos) << run.message;

  DeviceConfig narrow;
  narrow.tileElems = 512;
  run = replayHost(*program, c->lowered.module, narrow, saxpyInputs(3).arrays);
  EXPECT_EQ(run.status, RunStatus::Error);
  EXPECT_NE(run.message.find("tt.tile_elems = 1024"), std::string::npos) << run.message;
}

TEST(Device, ReaderBlocksOnSpaceWithThreeTiles) {
  auto c = compileFile("corpus/saxpy.f90", DeviceConfig{.tileElems = 4});
  ASSERT_FALSE(c.ok()); // simdlen(32) does not divide 4

  DeviceConfig small{.tileElems = 32};
  c = compileFile("corpus/saxpy.f90", small);
  ASSERT_TRUE(c.ok()) << joinDiagnostics(c.diagnostics());
  exec::Inputs in = randomInputs(c->initial, 96, 5); // 3 tiles of 32
  TraceSink trace;
  auto run = driver::runOnDevice(*c, in, small, &trace);
  ASSERT_TRUE(run.ok() && run->ok());
  bool blocked = false;
  for (const std::string &line : trace)
    blocked |= line.find("ENGINE reader OP tt_cb.reserve BLOCK cb=0 need=1 kind=space") !=
               std::string::npos;
  EXPECT_TRUE(blocked);
}

TEST(Device, DeadlockCorpus) {
  DeviceConfig config{.tileElems = 4};
  struct Expect {
    std::string file, kernel;
    int64_t cb, need;
    BlockKind kind;
  } cases[] = {
      {"never_pushed", "never_pushed_compute", 1, 1, BlockKind::Data},
      {"oversized_reserve", "oversized_reserve_reader", 0, 2, BlockKind::Space},
      {"misordered", "misordered_compute", 1, 1, BlockKind::Data},
      {"writer_wants_two", "writer_wants_two_writer", 2, 2, BlockKind::Data},
  };
  for (const Expect &e : cases)
    for (int64_t n : {12, 16, 40}) { // misordered needs more tiles than cb0 holds
      auto c = compileFile("corpus/deadlock/" + e.file + ".tir", config);
      ASSERT_TRUE(c.ok()) << e.file << joinDiagnostics(c.diagnostics());
      exec::Inputs in;
      in.scalars["n"] = std::to_string(n);
      in.arrays["x"] = std::vector<float>(n, 1.0f);
      auto run = driver::runOnDevice(*c, in, config);
      ASSERT_TRUE(run.ok());
      ASSERT_EQ(run->status, RunStatus::Deadlock) << e.file << " n=" << n << run->message;
      EXPECT_LT(run->steps, static_cast<uint64_t>(config.maxSteps));
      bool named = false;
      for (const DeadlockReport::Entry &b : run->deadlock.blocked)
        named |= b.kernel == e.kernel && b.block.cb == e.cb && b.block.need == e.need &&
                 b.block.kind == e.kind;
      EXPECT_TRUE(named) << e.file << ":\n" << run->deadlock.str();
      EXPECT_NE(run->message.find("cb=" + std::to_string(e.cb)), std::string::npos);
    }
}

TEST(Device, StepBudget) {
  DeviceConfig config{.tileElems = 32, .maxSteps = 500};
  auto c = compileFile("corpus/saxpy.f90", config);
  ASSERT_TRUE(c.ok());
  auto run = driver::runOnDevice(*c, randomInputs(c->initial, 32 * 40, 1), config);
  ASSERT_TRUE(run.ok());
  EXPECT_EQ(run->status, RunStatus::StepBudget);
  EXPECT_EQ(run->steps, 500u);
  EXPECT_NE(run->message.find("step budget of 500"), std::string::npos);
}

TEST(Device, CopyPreservesTileOrder) {
  DeviceConfig config{.tileElems = 4};
  auto c = compileFile("corpus/device/copy_fifo.tir", config);
  ASSERT_TRUE(c.ok()) << joinDiagnostics(c.diagnostics());
  exec::Inputs in;
  in.scalars["n"] = "64";
  for (int i = 0; i < 64; ++i)
    in.arrays["x"].push_back(static_cast<float>(i / 4)); // stamp = tile index
  auto run = driver::runOnDevice(*c, in, config);
  ASSERT_TRUE(run.ok() && run->ok()) << (run.ok() ? run->message : "");
  EXPECT_EQ(run->arrays.at("x"), in.arrays.at("x"));
}

ir::Module deviceModule(const std::string &kernelBody, const std::string &args = "") {
  std::string text = "module {\n  func @k(" + args +
                     ") attributes {tt.kernel_kind = \"compute\"} {\n" + kernelBody +
                     "    func.return() : () -> ()\n  }\n}\n";
  auto m = ir::parseModule(text);
  EXPECT_TRUE(m.ok()) << joinDiagnostics(m.diagnostics());
  return *m;
}

TEST(Device, ProtocolViolationIsAnError) {
  ir::Module m = deviceModule("    tt_cb.push() {cb = 0, n = 1} : () -> ()\n");
  DeviceState state;
  state.tileElems = 4;
  CoreState &core = state.core(0);
  core.cbs[0] = CircularBuffer(2);
  core.engines[1] = Engine(dialects::KernelKind::Compute, m.functions[0], {});
  DeviceRun run = runDevice(state, {});
  EXPECT_EQ(run.status, RunStatus::Error);
  EXPECT_NE(run.message.find("protocol violation on cb 0"), std::string::npos) << run.message;
  EXPECT_NE(run.message.find("core 0 compute @k"), std::string::npos) << run.message;
}

TEST(Device, EmptyEnginesFinishImmediately) {
  ir::Module m = deviceModule("");
  DeviceState state;
  for (int c = 0; c < 8; ++c)
    for (int k = 0; k < 3; ++k)
      state.core(c).engines[k] = Engine(static_cast<dialects::KernelKind>(k), m.functions[0], {});
  TraceSink trace;
  DeviceRun run = runDevice(state, {}, &trace);
  EXPECT_EQ(run.status, RunStatus::Ok);
  EXPECT_EQ(state.steps, 24u); // one func.return per engine
  EXPECT_EQ(trace.front(), "STEP 1 CORE 0 ENGINE reader OP func.return");
  EXPECT_EQ(trace.back(), "STEP 24 CORE 7 ENGINE writer OP func.return");
}

TEST(Device, OutOfBoundsTileRead) {
  ir::Module m = deviceModule(
      "    %0 = arith.constant() {value = 1} : () -> (index)\n"
      "    %1 = arith.constant() {value = 4} : () -> (index)\n"
      "    tt_cb.reserve() {cb = 0, n = 1} : () -> ()\n"
      "    tt_dm.read_tile(%arg0, %0, %1) {cb = 0, pad = 0.0} : (i32, index, index) -> ()\n",
      "%arg0: i32");
  m.functions[0].attrs["tt.kernel_kind"] = std::string("reader");
  DeviceState state;
  state.tileElems = 4;
  state.dram[0] = std::vector<uint8_t>(16);
  state.core(0).cbs[0] = CircularBuffer(1);
  state.core(0).engines[0] =
      Engine(dialects::KernelKind::Reader, m.functions[0], {exec::RtValue::ofInt(0)});
  DeviceRun run = runDevice(state, {});
  EXPECT_EQ(run.status, RunStatus::Error);
  EXPECT_NE(run.message.find("out of bounds of buffer 0"), std::string::npos) << run.message;
}

//===----------------------------------------------------------------------===//
// Reference interpreter
//===----------------------------------------------------------------------===//

TEST(Interpreter, OutOfBoundsIsLocated) {
  auto m = frontend::compileFortran("subroutine s(x, n)\n real :: x(n)\n integer :: n\n"
                                    " integer :: i\n do i = 1, n\n  x(i + 1) = x(i)\n"
                                    " end do\nend subroutine\n");
  ASSERT_TRUE(m.ok());
  exec::Inputs in;
  in.arrays["x"] = {1, 2, 3};
  in.scalars["n"] = "3";
  auto r = interpretStd(*m, in);
  ASSERT_FALSE(r.ok());
  const Diagnostic &d = r.diagnostics()[0];
  EXPECT_NE(d.message.find("index 4 into array 'x' of 3 elements"), std::string::npos)
      << d.message;
  EXPECT_EQ(d.location.function, "s");
  EXPECT_GE(d.location.path.size(), 3u);
}

TEST(Interpreter, MissingBinding) {
  auto c = compileCorpus("saxpy.f90");
  ASSERT_TRUE(c.ok());
  exec::Inputs in = saxpyInputs(3);
  in.scalars.erase("a");
  auto r = interpretStd(c->initial, in);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.diagnostics()[0].message.find("'a'"), std::string::npos);
}

//===----------------------------------------------------------------------===//
// Oracle equivalence, conservation and determinism
//===----------------------------------------------------------------------===//

TEST(Equivalence, CorpusAcrossSizesAndConfigs) {
  for (const std::string &name : corpusPrograms())
    for (DeviceConfig config : {DeviceConfig{}, DeviceConfig{.tileElems = 64, .cbCapacity = 1},
                                DeviceConfig{.tileElems = 32, .cbCapacity = 3}})
      for (int64_t n : {0, 1, 31, 32, 33, 1023, 1024, 1025, 3000}) {
        auto c = compileCorpus(name, config);
        ASSERT_TRUE(c.ok()) << name << joinDiagnostics(c.diagnostics());
        auto outcome = driver::check(*c, randomInputs(c->initial, n, n * 31 + 7), config);
        ASSERT_TRUE(outcome.ok()) << name << joinDiagnostics(outcome.diagnostics());
        ASSERT_TRUE(outcome->device.has_value());
        EXPECT_TRUE(outcome->device->ok()) << name << " n=" << n << outcome->device->message;
        EXPECT_FALSE(outcome->mismatch) << name << " n=" << n << " tile=" << config.tileElems
                                        << ": " << outcome->mismatch->str();
      }
}

TEST(Equivalence, RandomProgramsMatchDirectEvaluation) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 25; ++i) {
    GenProgram p = generateProgram(rng, 3000);
    DeviceConfig config{.tileElems = 256};
    passes::PassPipeline pipeline;
    pipeline.passes = passes::defaultPipeline();
    auto c = driver::compile(p.source, driver::InputKind::Fortran, pipeline, config);
    ASSERT_TRUE(c.ok()) << p.source << joinDiagnostics(c.diagnostics());
    auto outcome = driver::check(*c, p.bindings(), config);
    ASSERT_TRUE(outcome.ok()) << p.source << joinDiagnostics(outcome.diagnostics());
    ASSERT_TRUE(outcome->passed()) << p.source
                                   << (outcome->mismatch ? outcome->mismatch->str() : "");
    std::vector<float> expected = p.expected();
    const std::vector<float> &got = outcome->device->arrays.at(p.output);
    ASSERT_EQ(got.size(), expected.size());
    EXPECT_EQ(std::memcmp(got.data(), expected.data(), got.size() * 4), 0) << p.source;
  }
}

TEST(Equivalence, TailNeverLeaksPadding) {
  // Arrays longer than n: everything past n must come back untouched.
  DeviceConfig config{.tileElems = 16};
  auto c = compileFile("corpus/axpby_div.f90", config);
  ASSERT_TRUE(c.ok());
  exec::Inputs in = randomInputs(c->initial, 37, 9);
  for (auto &[name, data] : in.arrays)
    data.resize(48, -123.0f);
  auto run = driver::runOnDevice(*c, in, config);
  ASSERT_TRUE(run.ok() && run->ok());
  for (const auto &[name, data] : run->arrays)
    for (std::size_t i = 37; i < 48; ++i)
      EXPECT_EQ(data[i], -123.0f) << name << "[" << i << "]";
}

TEST(Determinism, TracesAndOutputsRepeat) {
  for (const std::string &name : corpusPrograms()) {
    DeviceConfig config{.tileElems = 32};
    auto c = compileCorpus(name, config);
    ASSERT_TRUE(c.ok());
    exec::Inputs in = randomInputs(c->initial, 100, 3);
    TraceSink t1, t2;
    auto r1 = driver::runOnDevice(*c, in, config, &t1);
    auto r2 = driver::runOnDevice(*c, in, config, &t2);
    ASSERT_TRUE(r1.ok() && r2.ok());
    EXPECT_EQ(t1, t2) << name;
    EXPECT_EQ(r1->arrays, r2->arrays) << name;
    EXPECT_FALSE(t1.empty());
  }
}

} // namespace
