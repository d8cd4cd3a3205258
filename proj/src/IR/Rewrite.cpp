// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/IR/Rewrite.h"

#include "tenflow/IR/Verifier.h"

namespace tenflow::ir {

namespace {

void collectDefs(const Region &region,
                 std::unordered_map<ValueId, const Operation *> &defs) {
  for (const Block &block : region.blocks)
    for (const Operation &op : block.ops) {
      for (ValueId r : op.results)
        defs.emplace(r, &op);
      for (const Region &nested : op.regions)
        collectDefs(nested, defs);
    }
}

void rewriteRegion(Region &region, const OpMatcher &matcher,
                   const OpRewriter &rewriter, RewriteContext &ctx) {
  for (Block &block : region.blocks) {
    std::vector<Operation> rewritten;
    rewritten.reserve(block.ops.size());
    for (Operation &op : block.ops) {
      for (Region &nested : op.regions)
        rewriteRegion(nested, matcher, rewriter, ctx);
      if (matcher(op)) {
        std::vector<Operation> replacement = rewriter(std::move(op), ctx);
        for (Operation &r : replacement)
          rewritten.push_back(std::move(r));
      } else {
        rewritten.push_back(std::move(op));
      }
    }
    block.ops = std::move(rewritten);
  }
}

ValueId resolve(ValueId v, const std::unordered_map<ValueId, ValueId> &remap) {
  // Chains are short; guard against cycles all the same.
  for (std::size_t hops = 0; hops <= remap.size(); ++hops) {
    auto it = remap.find(v);
    if (it == remap.end())
      return v;
    v = it->second;
  }
  return v;
}

void applyRemap(Region &region, const std::unordered_map<ValueId, ValueId> &remap) {
  for (Block &block : region.blocks)
    for (Operation &op : block.ops) {
      for (ValueId &operand : op.operands)
        operand = resolve(operand, remap);
      for (Region &nested : op.regions)
        applyRemap(nested, remap);
    }
}

} // namespace

Result<Module> walkReplace(const Module &module, const OpMatcher &matcher,
                           const OpRewriter &rewriter) {
  Module out = module;
  DiagnosticList diags;
  for (std::size_t f = 0; f < out.functions.size(); ++f) {
    Function &fn = out.functions[f];
    std::unordered_map<ValueId, const Operation *> defs;
    collectDefs(module.functions[f].body, defs);
    RewriteContext ctx(fn, defs);
    rewriteRegion(fn.body, matcher, rewriter, ctx);
    if (!ctx.remapping().empty())
      applyRemap(fn.body, ctx.remapping());
    for (Diagnostic &d : verifyStructure(fn)) {
      d.message = "rewrite produced dangling value use: " + d.message;
      diags.push_back(std::move(d));
    }
  }
  if (!diags.empty())
    return diags;
  return out;
}

} // namespace tenflow::ir
