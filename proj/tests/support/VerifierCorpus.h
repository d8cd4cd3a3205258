// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

// Negative verification corpus: one or more malformed snippets per op of
// every builtin dialect. Shared by the unit and acceptance suites.

#ifndef TENFLOW_TESTS_VERIFIERCORPUS_H
#define TENFLOW_TESTS_VERIFIERCORPUS_H

#include <string>
#include <vector>

namespace tenflow::testing {

struct NegativeCase {
  std::string op;       // dialect.opname under test
  std::string body;     // ops placed before the terminating func.return
  std::string expected; // substring of the diagnostic message
  bool device = false;  // wrap in a compute kernel instead of a host function
  bool raw = false;     // `body` is a complete module
};

inline std::string wrapNegativeCase(const NegativeCase &c) {
  if (c.raw)
    return c.body;
  if (c.device)
    return "module {\n  func @kernel(%i: i32, %s: f32) attributes {tt.kernel_kind = "
           "\"compute\"} {\n    %t = tt_compute.fill(%s) : (f32) -> (tile<f32>)\n" +
           c.body + "\n    func.return() : () -> ()\n  }\n}\n";
  return "module {\n  func @host(%a: f32, %i: i32, %x: memref<?xf32>, %n: index) {\n" +
         c.body + "\n    func.return() : () -> ()\n  }\n}\n";
}

inline const std::vector<NegativeCase> &negativeCorpus() {
  static const std::vector<NegativeCase> cases = {
      // ftn
      {"ftn.subroutine", "ftn.subroutine() ({\n ftn.end() : () -> ()\n }) : () -> ()",
       "missing required attribute 'name'"},
      {"ftn.do_loop",
       "ftn.do_loop(%n, %n, %n) ({\n ^bb0(%k: index):\n }) : (index, index, index) -> ()",
       "must end with 'ftn.end'"},
      {"ftn.load", "%v = ftn.load(%x, %a) : (memref<?xf32>, f32) -> (f32)",
       "operand #1 type mismatch"},
      {"ftn.store", "ftn.store(%i, %x, %n) : (i32, memref<?xf32>, index) -> ()",
       "element type mismatch"},
      {"ftn.end", "ftn.end() : () -> ()", "must terminate an ftn.subroutine"},
      // func
      {"func.func", "module {\n  func @f() {\n  }\n}\n",
       "function body must end with 'func.return'", false, true},
      {"func.return", "func.return() : () -> ()\n %z = arith.constant() {value = 0} : () -> (i32)",
       "must terminate the function body"},
      {"func.call", "func.call() {callee = @nowhere} : () -> ()", "does not resolve"},
      // arith
      {"arith.constant", "%c = arith.constant() {value = 1} : () -> (f32)",
       "f32 constant requires a float"},
      {"arith.addf", "%r = arith.addf(%i, %i) : (i32, i32) -> (f32)", "type mismatch"},
      {"arith.subf", "%r = arith.subf(%a) : (f32) -> (f32)", "operand count mismatch"},
      {"arith.mulf", "%r = arith.mulf(%a, %a) : (f32, f32) -> (i32)", "result #0 type mismatch"},
      {"arith.divf", "%r = arith.divf(%a, %n) : (f32, index) -> (f32)", "type mismatch"},
      {"arith.addi", "%r = arith.addi(%i, %n) : (i32, index) -> (i32)",
       "operand and result types must match"},
      {"arith.subi", "%r = arith.subi(%a, %a) : (f32, f32) -> (f32)", "type mismatch"},
      {"arith.muli", "%r = arith.muli(%i, %i) : (i32, i32) -> (index)",
       "operand and result types must match"},
      {"arith.divsi", "%r = arith.divsi(%i) : (i32) -> (i32)", "operand count mismatch"},
      {"arith.remsi", "%r = arith.remsi(%n, %n) : (index, index) -> (f32)", "type mismatch"},
      {"arith.cmpi", "%r = arith.cmpi(%i, %i) {predicate = \"ult\"} : (i32, i32) -> (i1)",
       "unknown cmpi predicate"},
      {"arith.select", "%r = arith.select(%i, %a, %a) : (i32, f32, f32) -> (f32)",
       "operand #0 type mismatch"},
      {"arith.index_cast", "%r = arith.index_cast(%i) : (i32) -> (i32)",
       "must convert between index and i32"},
      // scf
      {"scf.for", "scf.for(%n, %n, %n) ({\n scf.yield() : () -> ()\n }) : (index, index, index) -> ()",
       "must take one index argument"},
      {"scf.yield", "scf.yield() : () -> ()", "must terminate an scf.for body"},
      // memref
      {"memref.alloc", "%m = memref.alloc() : () -> (memref<?xf32>)",
       "expected 1 dynamic size operands"},
      {"memref.load", "%v = memref.load(%x) : (memref<?xf32>) -> (f32)",
       "expected 1 indices"},
      {"memref.store", "memref.store(%i, %x, %n) : (i32, memref<?xf32>, index) -> ()",
       "element type mismatch"},
      {"memref.dim", "%d = memref.dim(%x) {index = 1} : (memref<?xf32>) -> (index)",
       "out of range"},
      // offload
      {"offload.target",
       "offload.target(%x) ({\n ^bb0(%y: memref<?xf32>):\n }) : (memref<?xf32>) -> ()",
       "missing required attribute 'map'"},
      {"offload.target",
       "offload.target(%x, %x) {map_to = [0]} ({\n ^bb0(%y: memref<?xf32>, %z: memref<?xf32>):\n }) "
       ": (memref<?xf32>, memref<?xf32>) -> ()",
       "must appear in exactly one map list"},
      {"offload.target",
       "offload.target(%x) {map_to = [0]} ({\n ^bb0(%y: memref<?xf32>):\n"
       " %v = memref.load(%x, %n) : (memref<?xf32>, index) -> (f32)\n }) : (memref<?xf32>) -> ()",
       "uses a value defined outside it"},
      // tt_host
      {"tt_host.open_device", "%d = tt_host.open_device() : () -> (i32)",
       "op not allowed in device context", true},
      {"tt_host.create_buffer", "%b = tt_host.create_buffer(%a) : (f32) -> (i32)",
       "operand #0 type mismatch"},
      {"tt_host.write_buffer", "tt_host.write_buffer(%i, %a) : (i32, f32) -> ()",
       "operand #1 type mismatch"},
      {"tt_host.read_buffer", "tt_host.read_buffer(%i) : (i32) -> ()", "operand count mismatch"},
      {"tt_host.create_cb", "tt_host.create_cb() {capacity = 0, cb_id = 0, core = 0} : () -> ()",
       "capacity must be at least 1"},
      {"tt_host.create_kernel",
       "tt_host.create_kernel() {core = 0, kind = \"dsp\", kernel = @k} : () -> ()",
       "unknown kernel kind"},
      {"tt_host.set_runtime_args",
       "tt_host.set_runtime_args(%i) {core = 0, kernel = @missing} : (i32) -> ()",
       "does not resolve"},
      {"tt_host.launch", "tt_host.launch() : () -> ()", "op not allowed in device context", true},
      {"tt_host.wait", "tt_host.wait(%i) : (i32) -> ()",
       "operand count mismatch"},
      {"tt_host.close_device", "tt_host.close_device() : () -> ()",
       "op not allowed in device context", true},
      // tt_dm
      {"tt_dm.read_tile",
       "%g = arith.index_cast(%i) : (i32) -> (index)\n tt_dm.read_tile(%i, %g, %g) {cb = 0} : "
       "(i32, index, index) -> ()",
       "missing required attribute 'pad'", true},
      {"tt_dm.write_tile",
       "%g = arith.index_cast(%i) : (i32) -> (index)\n tt_dm.write_tile(%i, %g, %g) {cb = 40} : "
       "(i32, index, index) -> ()",
       "out of range", true},
      {"tt_dm.barrier", "tt_dm.barrier() : () -> ()", "op not allowed in host context"},
      // tt_cb
      {"tt_cb.reserve", "tt_cb.reserve() {cb = 0, n = 0} : () -> ()", "at least 1", true},
      {"tt_cb.push", "tt_cb.push() {cb = 0, n = 1} : () -> ()", "op not allowed in host context"},
      {"tt_cb.wait", "tt_cb.wait() {cb = 32, n = 1} : () -> ()", "out of range", true},
      {"tt_cb.pop", "tt_cb.pop() {cb = 0} : () -> ()", "missing required attribute 'n'", true},
      {"tt_cb.write_slot", "tt_cb.write_slot(%s) {cb = 0} : (f32) -> ()", "type mismatch", true},
      {"tt_cb.read_slot", "%r = tt_cb.read_slot() {cb = 0} : () -> (tile<f32>)",
       "op not allowed in host context"},
      // tt_compute
      {"tt_compute.init", "tt_compute.init() : () -> ()", "op not allowed in host context"},
      {"tt_compute.copy_in", "%r = tt_compute.copy_in() : () -> (tile<f32>)",
       "missing required attribute 'cb'", true},
      {"tt_compute.add_tiles", "%r = tt_compute.add_tiles(%t, %s) : (tile<f32>, f32) -> (tile<f32>)",
       "operand #1 type mismatch", true},
      {"tt_compute.mul_tiles", "%r = tt_compute.mul_tiles(%t) : (tile<f32>) -> (tile<f32>)",
       "operand count mismatch", true},
      {"tt_compute.sub_tiles", "%r = tt_compute.sub_tiles(%t, %t) : (tile<f32>, tile<f32>) -> (f32)",
       "result #0 type mismatch", true},
      {"tt_compute.div_tiles",
       "tt_compute.div_tiles(%t, %t) : (tile<f32>, tile<f32>) -> ()",
       "result count mismatch", true},
      {"tt_compute.mul_scalar",
       "%r = tt_compute.mul_scalar(%t, %t) : (tile<f32>, tile<f32>) -> (tile<f32>)",
       "operand #1 type mismatch", true},
      {"tt_compute.add_scalar",
       "%r = tt_compute.add_scalar(%s, %s) : (f32, f32) -> (tile<f32>)",
       "operand #0 type mismatch", true},
      {"tt_compute.fill", "%r = tt_compute.fill(%i) : (i32) -> (tile<f32>)",
       "operand #0 type mismatch", true},
      {"tt_compute.pack_out", "tt_compute.pack_out(%t) {cb = -1} : (tile<f32>) -> ()",
       "out of range", true},
  };
  return cases;
}

} // namespace tenflow::testing

#endif // TENFLOW_TESTS_VERIFIERCORPUS_H
