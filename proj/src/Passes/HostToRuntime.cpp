// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Dialects/RuntimeAbi.h"
#include "tenflow/IR/Builder.h"
#include "tenflow/IR/Rewrite.h"
#include "tenflow/Passes/Passes.h"

using namespace tenflow;
using namespace tenflow::ir;

Result<Module> passes::hostToRuntime(const Module &module) {
  auto matcher = [](const Operation &op) { return op.dialect == "tt_host"; };
  auto rewriter = [](Operation op, RewriteContext &ctx) {
    std::vector<Operation> out;
    OpBuilder b(ctx.function(), out);
    // Attribute-carried integers become leading i32 arguments, in ABI order.
    std::vector<ValueId> operands;
    auto intArg = [&](const char *key) {
      operands.push_back(b.constI32(*op.getIntAttr(key)));
    };
    if (op.name == "create_cb") {
      intArg("core");
      intArg("cb_id");
      intArg("capacity");
    } else if (op.name == "create_kernel") {
      intArg("core");
      auto kind = dialects::parseKernelKind(*op.getStringAttr("kind"));
      operands.push_back(b.constI32(static_cast<int64_t>(*kind)));
    } else if (op.name == "set_runtime_args") {
      intArg("core");
    }
    operands.insert(operands.end(), op.operands.begin(), op.operands.end());

    Operation call("func", "call");
    call.operands = std::move(operands);
    call.results = op.results;
    call.attrs["callee"] = SymbolRef{"tt_rt_" + op.name};
    if (const Attribute *kernel = op.getAttr("kernel"))
      call.attrs["kernel"] = *kernel;
    out.push_back(std::move(call));
    return out;
  };
  return walkReplace(module, matcher, rewriter);
}
