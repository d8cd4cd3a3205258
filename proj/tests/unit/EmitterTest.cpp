// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "Corpus.h"
#include "TestUtil.h"

#include "tenflow/Dialects/Builtin.h"
#include "tenflow/Emitter/DeviceSource.h"
#include "tenflow/Emitter/HostProgram.h"
#include "tenflow/IR/Parser.h"
#include "tenflow/IR/Printer.h"

#include <gtest/gtest.h>

#include <set>

using namespace tenflow;
using namespace tenflow::emitter;
using namespace tenflow::testing;

namespace {

exec::Inputs saxpyInputs() {
  exec::Inputs in;
  in.scalars["a"] = "2.0";
  in.scalars["n"] = "3";
  in.arrays["x"] = {1, 2, 3};
  in.arrays["y"] = {10, 20, 30};
  return in;
}

ir::Module deviceModule() {
  auto m = ir::parseModule(readData("corpus/device/all_ops.tir"));
  EXPECT_TRUE(m.ok()) << joinDiagnostics(m.diagnostics());
  return std::move(*m);
}

TEST(EmitterGolden, SaxpyStages) {
  auto c = compileCorpus("saxpy.f90");
  ASSERT_TRUE(c.ok()) << joinDiagnostics(c.diagnostics());
  expectGolden("golden/saxpy.input.tir", ir::printModule(c->initial));
  for (const passes::PassDump &dump : c->lowered.dumps)
    expectGolden("golden/saxpy." + dump.pass + ".tir", dump.text);
}

TEST(EmitterGolden, SaxpyDeviceSources) {
  auto c = compileCorpus("saxpy.f90");
  ASSERT_TRUE(c.ok());
  auto units = emitAllDeviceSources(c->lowered.module);
  ASSERT_TRUE(units.ok()) << joinDiagnostics(units.diagnostics());
  ASSERT_EQ(units->size(), 3u);
  for (const DeviceSourceUnit &u : *units)
    expectGolden("golden/" + u.fileName(), u.text);

  const DeviceSourceUnit &compute = (*units)[1];
  EXPECT_EQ(compute.kind, dialects::KernelKind::Compute);
  for (const char *call : {"mul_scalar_tile(", "add_tiles(", "pack_tile("})
    EXPECT_NE(compute.text.find(call), std::string::npos) << call;
}

TEST(EmitterGolden, AllDeviceOps) {
  auto units = emitAllDeviceSources(deviceModule());
  ASSERT_TRUE(units.ok()) << joinDiagnostics(units.diagnostics());
  for (const DeviceSourceUnit &u : *units)
    expectGolden("golden/" + u.fileName(), u.text);
}

TEST(EmitterGolden, SaxpyHostTrace) {
  auto c = compileCorpus("saxpy.f90");
  ASSERT_TRUE(c.ok());
  auto program = emitHostProgram(c->lowered.module, saxpyInputs());
  ASSERT_TRUE(program.ok()) << joinDiagnostics(program.diagnostics());
  expectGolden("golden/saxpy.n3.host.trace", program->trace());
}

TEST(DeviceSource, CoversEveryDeviceOp) {
  // Union of ops over every module that has golden sources.
  std::set<std::string> seen;
  auto collect = [&](const ir::Module &m) {
    ir::walkOps(m, [&](const ir::Operation &op) { seen.insert(op.fullName()); });
  };
  collect(deviceModule());
  collect(compileCorpus("saxpy.f90")->lowered.module);
  const ir::DialectRegistry &registry = dialects::builtinRegistry();
  for (const char *dialect : {"tt_dm", "tt_cb", "tt_compute"})
    for (const ir::OpSpec *spec : registry.opsOf(dialect))
      EXPECT_TRUE(seen.count(spec->fullName())) << spec->fullName() << " has no golden source";
}

TEST(DeviceSource, LineMapping) {
  auto unit = emitDeviceSource(deviceModule(), "all_ops_compute");
  ASSERT_TRUE(unit.ok());
  const std::string &t = unit->text;
  for (const char *line : {"cb_wait_front(0, 1);", "cb_pop_front(0, 1);",
                           "cb_reserve_back(1, 2);", "cb_push_back(1, 2);", "fill_tile(s)",
                           "for (int64_t "})
    EXPECT_NE(t.find(line), std::string::npos) << line;

  auto reader = emitDeviceSource(deviceModule(), "all_ops_reader");
  ASSERT_TRUE(reader.ok());
  std::size_t read = reader->text.find("noc_async_read_tile(");
  ASSERT_NE(read, std::string::npos);
  EXPECT_EQ(reader->text.find("noc_async_read_barrier();", read),
            reader->text.find('\n', read) + 5);

  auto writer = emitDeviceSource(deviceModule(), "all_ops_writer");
  ASSERT_TRUE(writer.ok());
  EXPECT_NE(writer->text.find("noc_async_write_barrier();"), std::string::npos);
  EXPECT_NE(writer->text.find("noc_async_full_barrier();"), std::string::npos);
  EXPECT_EQ(writer->fileName(), "all_ops_writer.cpp.txt");
}

TEST(DeviceSource, EmptyKernelHasOnlyPrologueAndEpilogue) {
  auto m = ir::parseModule(R"(module {
  func @k() attributes {tt.kernel_kind = "writer"} {
    func.return() : () -> ()
  }
})");
  ASSERT_TRUE(m.ok());
  auto unit = emitDeviceSource(*m, "k");
  ASSERT_TRUE(unit.ok());
  EXPECT_EQ(unit->text, "// writer kernel @k\n#include \"tt_mock_api.h\"\n\n"
                        "void kernel_main() {\n}\n");
  EXPECT_TRUE(unit->apiCalls.empty());
}

TEST(DeviceSource, Errors) {
  auto m = ir::parseModule(R"(module {
  func @k(%arg0: i32) attributes {tt.kernel_kind = "reader"} {
    %0 = tt_host.create_buffer(%arg0) : (i32) -> (i32)
    func.return() : () -> ()
  }
  func @h() {
    func.return() : () -> ()
  }
})");
  ASSERT_TRUE(m.ok());
  auto unit = emitDeviceSource(*m, "k");
  ASSERT_FALSE(unit.ok());
  EXPECT_NE(unit.diagnostics()[0].message.find("tt_host.create_buffer"), std::string::npos);
  EXPECT_FALSE(emitDeviceSource(*m, "h").ok());
  EXPECT_FALSE(emitDeviceSource(*m, "missing").ok());
}

TEST(DeviceSource, Deterministic) {
  for (const std::string &name : corpusPrograms()) {
    auto a = compileCorpus(name), b = compileCorpus(name);
    ASSERT_TRUE(a.ok() && b.ok());
    auto ua = emitAllDeviceSources(a->lowered.module),
         ub = emitAllDeviceSources(b->lowered.module);
    ASSERT_TRUE(ua.ok() && ub.ok());
    ASSERT_EQ(ua->size(), ub->size());
    for (std::size_t i = 0; i < ua->size(); ++i)
      EXPECT_EQ((*ua)[i].text, (*ub)[i].text) << name;
  }
}

TEST(HostProgram, TwoCoreCallListPrefix) {
  auto c = compileCorpus("saxpy_teams2.f90");
  ASSERT_TRUE(c.ok()) << joinDiagnostics(c.diagnostics());
  exec::Inputs in;
  in.scalars = {{"a", "2"}, {"n", "2500"}};
  in.arrays["x"] = std::vector<float>(2500, 1.0f);
  in.arrays["y"] = std::vector<float>(2500, 1.0f);
  auto program = emitHostProgram(c->lowered.module, in);
  ASSERT_TRUE(program.ok()) << joinDiagnostics(program.diagnostics());
  const auto &calls = program->calls;
  ASSERT_GE(calls.size(), 5u);
  // 2500 f32 elements are 10000 bytes.
  EXPECT_EQ(calls[0].str(), "CALL tt_rt_open_device");
  EXPECT_EQ(calls[1].str(), "CALL tt_rt_create_buffer 10000");
  EXPECT_EQ(calls[2].str(), "CALL tt_rt_create_buffer 10000");
  EXPECT_EQ(calls[3].str(), "CALL tt_rt_write_buffer 0 data:x");
  EXPECT_EQ(calls[4].str(), "CALL tt_rt_write_buffer 1 data:y");

  // ceil(2500 / 1024) = 3 tiles: core 0 takes tiles [0, 2), core 1 takes the
  // partial tile 2 holding 2500 - 2048 = 452 elements.
  std::vector<std::string> args;
  for (const RuntimeCall &call : calls)
    if (call.abi == "tt_rt_set_runtime_args" && call.kernel->ends_with("_reader"))
      args.push_back(call.str());
  EXPECT_EQ(args, (std::vector<std::string>{
                      "CALL tt_rt_set_runtime_args 0 @saxpy_offload0_reader 0 1 0 2 0 2.0",
                      "CALL tt_rt_set_runtime_args 1 @saxpy_offload0_reader 0 1 2 1 452 2.0"}));
}

TEST(HostProgram, Errors) {
  auto c = compileCorpus("saxpy.f90");
  ASSERT_TRUE(c.ok());
  exec::Inputs in = saxpyInputs();
  in.arrays.erase("x");
  auto missing = emitHostProgram(c->lowered.module, in);
  ASSERT_FALSE(missing.ok());
  EXPECT_NE(missing.diagnostics()[0].message.find("'x'"), std::string::npos);

  in = saxpyInputs();
  in.arrays["y"] = {1, 2};
  auto shortPayload = emitHostProgram(c->lowered.module, in);
  ASSERT_FALSE(shortPayload.ok());
  EXPECT_NE(shortPayload.diagnostics()[0].message.find("payload length mismatch"),
            std::string::npos);
}

TEST(HostProgram, UnboundValuesStaySymbolic) {
  auto c = compileCorpus("saxpy.f90");
  ASSERT_TRUE(c.ok());
  HostEmitOptions options;
  options.allowUnbound = true;
  auto program = emitHostProgram(c->lowered.module, {}, options);
  ASSERT_TRUE(program.ok()) << joinDiagnostics(program.diagnostics());
  EXPECT_EQ(program->calls[1].str(), "CALL tt_rt_create_buffer ?");
  EXPECT_EQ(program->calls[5].str(), "CALL tt_rt_create_cb 0 0 2");
}

TEST(HostProgram, EmptyModule) {
  auto program = emitHostProgram(ir::Module{}, {});
  ASSERT_TRUE(program.ok());
  EXPECT_TRUE(program->calls.empty());
  EXPECT_EQ(program->trace(), "");
}

TEST(HostProgram, IdBeforeCreateAndCallBeforeOpen) {
  auto early = ir::parseModule(R"(module {
  func @h(%arg0: i32) {
    %0 = func.call(%arg0) {callee = @tt_rt_create_buffer} : (i32) -> (i32)
    func.return() : () -> ()
  }
})");
  ASSERT_TRUE(early.ok());
  exec::Inputs in;
  in.scalars["arg0"] = "4";
  auto r = emitHostProgram(*early, in);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.diagnostics()[0].message.find("before tt_rt_open_device"), std::string::npos);

  auto bad = ir::parseModule(R"(module {
  func @h(%arg0: i32, %arg1: memref<?xf32>) {
    %0 = func.call() {callee = @tt_rt_open_device} : () -> (i32)
    func.call(%arg0, %arg1) {callee = @tt_rt_write_buffer} : (i32, memref<?xf32>) -> ()
    func.return() : () -> ()
  }
})");
  ASSERT_TRUE(bad.ok());
  in.scalars["arg0"] = "7";
  in.arrays["arg1"] = {1};
  r = emitHostProgram(*bad, in);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.diagnostics()[0].message.find("buffer 7 before it is created"), std::string::npos);
}

} // namespace
