// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_IR_REWRITE_H
#define TENFLOW_IR_REWRITE_H

#include "tenflow/IR/IR.h"
#include "tenflow/Support/Diagnostic.h"

#include <functional>
#include <unordered_map>
#include <vector>

namespace tenflow::ir {

/// Services available to a rewriter while it replaces one op.
class RewriteContext {
public:
  RewriteContext(Function &fn,
                 const std::unordered_map<ValueId, const Operation *> &defs)
      : fn(fn), defs(defs) {}

  Function &function() { return fn; }
  ValueId newValue(Type type) { return fn.newValue(std::move(type)); }
  const Type &typeOf(ValueId v) const { return fn.typeOf(v); }

  /// The op that defined `v` before this walk began, or null for block
  /// arguments and values created during the walk.
  const Operation *definingOp(ValueId v) const {
    auto it = defs.find(v);
    return it == defs.end() ? nullptr : it->second;
  }

  /// Redirects every use of `from` to `to` once the walk finishes.
  void replaceAllUsesWith(ValueId from, ValueId to) { remap[from] = to; }

  const std::unordered_map<ValueId, ValueId> &remapping() const { return remap; }

private:
  Function &fn;
  const std::unordered_map<ValueId, const Operation *> &defs;
  std::unordered_map<ValueId, ValueId> remap;
};

using OpMatcher = std::function<bool(const Operation &)>;
/// Receives the matched op (its regions already rewritten) and returns the
/// ops that take its place. The replacement must either redefine the
/// matched op's result ids or remap them through the context.
using OpRewriter = std::function<std::vector<Operation>(Operation, RewriteContext &)>;

/// Post-order rewrite over every function. Each matched op is replaced
/// exactly once; unmatched ops are untouched. If the result has dangling or
/// out-of-scope uses, the input is left as is and diagnostics are returned.
Result<Module> walkReplace(const Module &module, const OpMatcher &matcher,
                           const OpRewriter &rewriter);

} // namespace tenflow::ir

#endif // TENFLOW_IR_REWRITE_H
