// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Dialects/Builtin.h"
#include "tenflow/IR/Equivalence.h"
#include "tenflow/IR/Parser.h"
#include "tenflow/IR/Printer.h"
#include "tenflow/IR/Rewrite.h"
#include "tenflow/IR/Verifier.h"

#include <gtest/gtest.h>

using namespace tenflow;
using namespace tenflow::ir;

namespace {

const char *kScaleModule = R"(module {
  func @scale(%x: memref<?xf32>, %n: index) {
    %c0 = arith.constant() {value = 0} : () -> (index)
    %c1 = arith.constant() {value = 1} : () -> (index)
    %two = arith.constant() {value = 2.0} : () -> (f32)
    scf.for(%c0, %n, %c1) ({
    ^bb0(%i: index):
      %v = memref.load(%x, %i) : (memref<?xf32>, index) -> (f32)
      %m = arith.mulf(%v, %two) : (f32, f32) -> (f32)
      memref.store(%m, %x, %i) : (f32, memref<?xf32>, index) -> ()
      scf.yield() : () -> ()
    }) : (index, index, index) -> ()
    func.return() : () -> ()
  }
}
)";

Module parseOk(const std::string &text) {
  auto parsed = parseModule(text);
  EXPECT_TRUE(parsed.ok()) << (parsed.ok() ? "" : parsed.diagnostics()[0].str());
  return parsed.ok() ? std::move(parsed).value() : Module{};
}

} // namespace

TEST(Parser, EmptyModule) {
  Module m = parseOk("module { }");
  EXPECT_TRUE(m.functions.empty());
  EXPECT_EQ(printModule(m), "module {\n}\n");
}

TEST(Parser, SingleConstant) {
  Module m = parseOk(R"(module {
    func @f() {
      %0 = arith.constant() {value = 2.0} : () -> (f32)
      func.return() : () -> ()
    }
  })");
  ASSERT_EQ(m.functions.size(), 1u);
  const Operation &op = m.functions[0].entry().ops[0];
  EXPECT_EQ(op.fullName(), "arith.constant");
  ASSERT_EQ(op.results.size(), 1u);
  EXPECT_TRUE(m.functions[0].typeOf(op.results[0]).isF32());
  EXPECT_DOUBLE_EQ(op.getAttr("value")->getFloat(), 2.0);
}

TEST(Parser, SyntaxErrorHasLineAndColumn) {
  auto parsed = parseModule("module {\n  func @f() {\n    %0 = arith.constant( : () -> (f32)\n");
  ASSERT_FALSE(parsed.ok());
  const Diagnostic &d = parsed.diagnostics()[0];
  EXPECT_EQ(d.location.line, 3);
  EXPECT_GT(d.location.column, 0);
}

TEST(Parser, UnknownTypeKind) {
  auto parsed = parseModule("module { func @f(%a: f64) { func.return() : () -> () } }");
  ASSERT_FALSE(parsed.ok());
  EXPECT_NE(parsed.diagnostics()[0].message.find("unknown type 'f64'"), std::string::npos);
}

TEST(Parser, DuplicateValueName) {
  auto parsed = parseModule(R"(module { func @f() {
    %a = arith.constant() {value = 1} : () -> (i32)
    %a = arith.constant() {value = 2} : () -> (i32)
    func.return() : () -> ()
  } })");
  ASSERT_FALSE(parsed.ok());
  EXPECT_NE(parsed.diagnostics()[0].message.find("duplicate value name"), std::string::npos);
  EXPECT_EQ(parsed.diagnostics()[0].location.line, 3);
}

TEST(Parser, UndefinedValue) {
  auto parsed = parseModule(R"(module { func @f() {
    %a = arith.addi(%x, %x) : (i32, i32) -> (i32)
    func.return() : () -> ()
  } })");
  ASSERT_FALSE(parsed.ok());
  EXPECT_NE(parsed.diagnostics()[0].message.find("undefined value '%x'"), std::string::npos);
}

TEST(Parser, AllAttributeKinds) {
  Module m = parseOk(R"(module attributes {tag = "t"} {
    func @f() attributes {a = 1, b = -2.5e-3, c = "s\"q", d = @g, e = [1, [2.0], "x"], f = {k = 3, l = @h}, g = nan, h = -inf} {
      func.return() : () -> ()
    }
  })");
  Module again = parseOk(printModule(m));
  std::string why;
  EXPECT_TRUE(structurallyEqual(m, again, &why)) << why;
  EXPECT_EQ(printModule(m), printModule(again));
}

TEST(Printer, Deterministic) {
  Module m = parseOk(kScaleModule);
  EXPECT_EQ(printModule(m), printModule(m));
}

TEST(Printer, NumbersValuesInDefinitionOrder) {
  Module m = parseOk(kScaleModule);
  std::string text = printModule(m);
  EXPECT_NE(text.find("func @scale(%arg0: memref<?xf32>, %arg1: index)"), std::string::npos);
  EXPECT_NE(text.find("%0 = arith.constant() {value = 0}"), std::string::npos);
  EXPECT_NE(text.find("^bb0(%3: index):"), std::string::npos);
  EXPECT_NE(text.find("%5 = arith.mulf(%4, %2)"), std::string::npos);
}

TEST(Printer, InvalidReferencePrintsMarker) {
  Module m = parseOk(kScaleModule);
  m.functions[0].entry().ops[0].results.clear();
  m.functions[0].entry().ops[3].operands[0] = 999;
  std::string text = printModule(m);
  EXPECT_NE(text.find("<<invalid>>"), std::string::npos);
}

TEST(RoundTrip, ParsePrintParse) {
  Module m = parseOk(kScaleModule);
  Module again = parseOk(printModule(m));
  std::string why;
  EXPECT_TRUE(structurallyEqual(m, again, &why)) << why;
}

TEST(Equivalence, DetectsDifferentOperandWiring) {
  Module a = parseOk(kScaleModule);
  Module b = a;
  // Swap the mulf operands.
  auto &loop = b.functions[0].entry().ops[3];
  auto &mul = loop.regions[0].front().ops[1];
  std::swap(mul.operands[0], mul.operands[1]);
  EXPECT_FALSE(structurallyEqual(a, b));
}

TEST(Equivalence, DistinctModulesPrintDistinctly) {
  Module a = parseOk(kScaleModule);
  Module b = a;
  b.functions[0].entry().ops[2].attrs["value"] = Attribute(3.0);
  EXPECT_FALSE(structurallyEqual(a, b));
  EXPECT_NE(printModule(a), printModule(b));
}

TEST(Verify, WellFormedModule) {
  Module m = parseOk(kScaleModule);
  EXPECT_TRUE(verify(m, dialects::builtinRegistry()).empty());
}

TEST(Verify, AddfArity) {
  Module m = parseOk(R"(module { func @f(%a: f32) {
    %0 = arith.addf(%a) : (f32) -> (f32)
    func.return() : () -> ()
  } })");
  DiagnosticList diags = verify(m, dialects::builtinRegistry());
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_NE(diags[0].message.find("operand count mismatch"), std::string::npos);
  EXPECT_EQ(diags[0].location.function, "f");
  EXPECT_EQ(diags[0].location.opIndex(), 0);
}

TEST(Verify, DeviceOpInHostFunction) {
  Module m = parseOk(R"(module { func @host() {
    tt_cb.push() {cb = 0, n = 1} : () -> ()
    func.return() : () -> ()
  } })");
  DiagnosticList diags = verify(m, dialects::builtinRegistry());
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].message, "op not allowed in host context");
}

TEST(Verify, UseOutOfScope) {
  Module m = parseOk(R"(module { func @f(%n: index) {
    %c0 = arith.constant() {value = 0} : () -> (index)
    scf.for(%c0, %n, %c0) ({
    ^bb0(%i: index):
      %inner = arith.addi(%i, %i) : (index, index) -> (index)
      scf.yield() : () -> ()
    }) : (index, index, index) -> ()
    %bad = arith.addi(%inner, %c0) : (index, index) -> (index)
    func.return() : () -> ()
  } })");
  DiagnosticList diags = verify(m, dialects::builtinRegistry());
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_NE(diags[0].message.find("not defined in scope"), std::string::npos);
}

TEST(Verify, Deterministic) {
  Module m = parseOk(R"(module { func @f(%a: f32) {
    %0 = arith.addf(%a) : (f32) -> (f32)
    %1 = arith.bogus(%a) : (f32) -> (f32)
  } })");
  DiagnosticList first = verify(m, dialects::builtinRegistry());
  EXPECT_EQ(first.size(), 3u);
  EXPECT_EQ(first, verify(m, dialects::builtinRegistry()));
}

TEST(WalkReplace, NothingMatches) {
  Module m = parseOk(kScaleModule);
  auto out = walkReplace(
      m, [](const Operation &) { return false; },
      [](Operation op, RewriteContext &) { return std::vector<Operation>{op}; });
  ASSERT_TRUE(out.ok());
  EXPECT_TRUE(structurallyEqual(m, *out));
}

TEST(WalkReplace, IdentityRewrite) {
  Module m = parseOk(kScaleModule);
  auto out = walkReplace(
      m, [](const Operation &op) { return op.is("arith", "mulf"); },
      [](Operation op, RewriteContext &) { return std::vector<Operation>{op}; });
  ASSERT_TRUE(out.ok());
  EXPECT_TRUE(structurallyEqual(m, *out));
}

TEST(WalkReplace, ReplaceWithRemappedValue) {
  Module m = parseOk(kScaleModule);
  // Rewrite x*2 as x+x.
  auto out = walkReplace(
      m, [](const Operation &op) { return op.is("arith", "mulf"); },
      [](Operation op, RewriteContext &ctx) {
        Operation add("arith", "addf");
        add.operands = {op.operands[0], op.operands[0]};
        ValueId sum = ctx.newValue(Type::f32());
        add.results = {sum};
        ctx.replaceAllUsesWith(op.results[0], sum);
        return std::vector<Operation>{add};
      });
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(countOps(*out, "arith", "mulf"), 0u);
  EXPECT_EQ(countOps(*out, "arith", "addf"), 1u);
  EXPECT_TRUE(verify(*out, dialects::builtinRegistry()).empty());
}

TEST(WalkReplace, DanglingUseLeavesModuleUnchanged) {
  Module m = parseOk(kScaleModule);
  auto out = walkReplace(
      m, [](const Operation &op) { return op.is("arith", "mulf"); },
      [](Operation, RewriteContext &) { return std::vector<Operation>{}; });
  ASSERT_FALSE(out.ok());
  EXPECT_NE(out.diagnostics()[0].message.find("dangling"), std::string::npos);
  EXPECT_EQ(countOps(m, "arith", "mulf"), 1u);
}

TEST(WalkReplace, PostOrderSeesRewrittenChildren) {
  Module m = parseOk(kScaleModule);
  std::vector<std::string> order;
  auto out = walkReplace(
      m,
      [](const Operation &op) { return op.is("scf", "for") || op.is("arith", "mulf"); },
      [&](Operation op, RewriteContext &) {
        order.push_back(op.fullName());
        return std::vector<Operation>{op};
      });
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(order, (std::vector<std::string>{"arith.mulf", "scf.for"}));
}
