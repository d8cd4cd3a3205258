// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Passes/Passes.h"

#include <functional>
#include <set>

using namespace tenflow;
using namespace tenflow::ir;

namespace {

class FtnLowering {
public:
  explicit FtnLowering(Function &fn) : fn(fn) {}

  /// Returns false if an ftn op without a lowering was found.
  bool run() {
    fn.body = lowerRegion(fn.body);
    return failures.empty();
  }

  std::vector<std::string> failures;

private:
  ValueId constant(std::vector<Operation> &out, int64_t value) {
    Operation op("arith", "constant");
    op.attrs["value"] = value;
    ValueId v = fn.newValue(Type::index());
    op.results = {v};
    out.push_back(std::move(op));
    return v;
  }

  /// Zero-based element offset for a 1-based Fortran subscript.
  ValueId offset(std::vector<Operation> &out, ValueId index) {
    auto it = ivMap.find(index);
    if (it != ivMap.end())
      return it->second;
    ValueId one = constant(out, 1);
    Operation sub("arith", "subi");
    sub.operands = {index, one};
    ValueId v = fn.newValue(Type::index());
    sub.results = {v};
    out.push_back(std::move(sub));
    return v;
  }

  /// True if `iv` is used other than as a load/store subscript anywhere in
  /// `region`.
  static bool hasNonSubscriptUse(const Region &region, ValueId iv) {
    bool found = false;
    walkOps(region, [&](const Operation &op) {
      for (std::size_t i = 0; i < op.operands.size(); ++i) {
        if (op.operands[i] != iv)
          continue;
        bool subscript = (op.is("ftn", "load") && i == 1) ||
                         (op.is("ftn", "store") && i == 2);
        if (!subscript)
          found = true;
      }
    });
    return found;
  }

  Region lowerRegion(const Region &region) {
    Region out;
    for (const Block &block : region.blocks) {
      Block nb;
      nb.args = block.args;
      lowerOps(block.ops, nb.ops);
      out.blocks.push_back(std::move(nb));
    }
    return out;
  }

  void lowerOps(const std::vector<Operation> &ops, std::vector<Operation> &out) {
    for (const Operation &op : ops)
      lowerOp(op, out);
  }

  void lowerOp(const Operation &op, std::vector<Operation> &out) {
    if (op.dialect != "ftn") {
      Operation copy = op;
      copy.regions.clear();
      for (const Region &r : op.regions)
        copy.regions.push_back(lowerRegion(r));
      out.push_back(std::move(copy));
      return;
    }
    if (op.is("ftn", "subroutine")) {
      for (const Block &block : op.regions.front().blocks)
        for (const Operation &inner : block.ops)
          if (!inner.is("ftn", "end"))
            lowerOp(inner, out);
      return;
    }
    if (op.is("ftn", "load")) {
      Operation load("memref", "load");
      load.operands = {op.operands[0], offset(out, op.operands[1])};
      load.results = op.results;
      out.push_back(std::move(load));
      return;
    }
    if (op.is("ftn", "store")) {
      Operation store("memref", "store");
      store.operands = {op.operands[0], op.operands[1], offset(out, op.operands[2])};
      out.push_back(std::move(store));
      return;
    }
    if (op.is("ftn", "do_loop")) {
      lowerLoop(op, out);
      return;
    }
    if (op.is("ftn", "end")) {
      out.emplace_back("scf", "yield");
      return;
    }
    failures.push_back(op.fullName());
  }

  void lowerLoop(const Operation &op, std::vector<Operation> &out) {
    // Constant-fold the common `lb = 1` case so the loop starts at 0.
    ValueId lb = op.operands[0];
    ValueId zeroBased;
    std::optional<int64_t> lbConst;
    for (const Operation &prev : out)
      if (prev.results.size() == 1 && prev.results[0] == lb &&
          prev.is("arith", "constant"))
        lbConst = prev.getIntAttr("value");
    if (lbConst) {
      zeroBased = constant(out, *lbConst - 1);
    } else {
      ValueId one = constant(out, 1);
      Operation sub("arith", "subi");
      sub.operands = {lb, one};
      zeroBased = fn.newValue(Type::index());
      sub.results = {zeroBased};
      out.push_back(std::move(sub));
    }

    Operation loop("scf", "for");
    loop.operands = {zeroBased, op.operands[1], op.operands[2]};
    const Block &oldBody = op.regions.front().front();
    ValueId oldIv = oldBody.args[0];
    ValueId newIv = fn.newValue(Type::index());

    Block body;
    body.args = {newIv};
    if (hasNonSubscriptUse(op.regions.front(), oldIv)) {
      // Keep the Fortran-visible value alive as j + 1, reusing its id.
      ValueId one = constant(body.ops, 1);
      Operation add("arith", "addi");
      add.operands = {newIv, one};
      add.results = {oldIv};
      body.ops.push_back(std::move(add));
    }
    ivMap[oldIv] = newIv;
    lowerOps(oldBody.ops, body.ops);
    ivMap.erase(oldIv);
    loop.regions.push_back(Region{{std::move(body)}});
    out.push_back(std::move(loop));
  }

  Function &fn;
  std::map<ValueId, ValueId> ivMap;
};

} // namespace

Result<Module> passes::ftnToStd(const Module &module) {
  Module out = module;
  DiagnosticList diags;
  for (Function &fn : out.functions) {
    FtnLowering lowering(fn);
    if (!lowering.run())
      for (const std::string &name : lowering.failures)
        diags.push_back(Diagnostic::error("unexpected ftn op '" + name +
                                              "' has no standard-dialect lowering",
                                          Location::inFunction(fn.name)));
  }
  if (!diags.empty())
    return diags;
  return out;
}
