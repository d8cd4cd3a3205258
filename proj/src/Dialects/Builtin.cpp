// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Dialects/Builtin.h"

#include "tenflow/Dialects/RuntimeAbi.h"

#include <set>

namespace tenflow::dialects {

using namespace ir;

namespace {

using TC = TypeConstraint;

//===----------------------------------------------------------------------===//
// Shared rule helpers
//===----------------------------------------------------------------------===//

/// Checks that `region` is a single block with one index argument ending in
/// `terminator`.
void checkLoopBody(const Operation &op, OpVerifyContext &ctx,
                   const std::string &terminator) {
  const Region &body = op.regions.front();
  if (body.blocks.size() != 1) {
    ctx.emitError("'" + op.fullName() + "' body must have exactly one block");
    return;
  }
  const Block &block = body.front();
  if (block.args.size() != 1 || !ctx.typeOf(block.args[0]).isIndex())
    ctx.emitError("'" + op.fullName() + "' body must take one index argument");
  if (block.ops.empty() || block.ops.back().fullName() != terminator)
    ctx.emitError("'" + op.fullName() + "' body must end with '" + terminator + "'");
}

void checkCbAttr(const Operation &op, OpVerifyContext &ctx, const std::string &key) {
  auto cb = op.getIntAttr(key);
  if (cb && (*cb < 0 || *cb >= kNumCircularBuffers))
    ctx.emitError("circular buffer id " + std::to_string(*cb) + " out of range [0, " +
                  std::to_string(kNumCircularBuffers) + ")");
}

/// For memref accesses: `indices` must match the rank and `element` the
/// element type.
void checkMemrefAccess(OpVerifyContext &ctx, ValueId memref, std::size_t indices,
                       const Type &element) {
  const Type &m = ctx.typeOf(memref);
  if (m.shape().size() != indices)
    ctx.emitError("expected " + std::to_string(m.shape().size()) +
                  " indices for " + m.str() + ", got " + std::to_string(indices));
  if (element.kind() != m.elementKind())
    ctx.emitError("element type mismatch: " + m.str() + " accessed as " + element.str());
}

const Function *lookupKernel(const Operation &op, OpVerifyContext &ctx) {
  auto sym = op.getSymbolAttr("kernel");
  if (!sym || !ctx.module())
    return nullptr;
  const Function *kernel = ctx.module()->lookup(*sym);
  if (!kernel) {
    ctx.emitError("kernel symbol @" + *sym + " does not resolve");
    return nullptr;
  }
  if (!kernel->isDeviceFunction()) {
    ctx.emitError("@" + *sym + " is not a device function");
    return nullptr;
  }
  return kernel;
}

void checkArgsMatch(const std::vector<ValueId> &args, std::size_t skip,
                    const Function &callee, OpVerifyContext &ctx) {
  const auto &params = callee.args();
  if (args.size() - skip != params.size()) {
    ctx.emitError("argument count mismatch for @" + callee.name + ": expected " +
                  std::to_string(params.size()) + ", got " +
                  std::to_string(args.size() - skip));
    return;
  }
  for (std::size_t i = 0; i < params.size(); ++i)
    if (!(ctx.typeOf(args[skip + i]) == callee.typeOf(params[i])))
      ctx.emitError("argument #" + std::to_string(i) + " type mismatch for @" +
                    callee.name + ": expected " + callee.typeOf(params[i]).str() +
                    ", got " + ctx.typeOf(args[skip + i]).str());
}

//===----------------------------------------------------------------------===//
// Rules
//===----------------------------------------------------------------------===//

void registerRules(DialectRegistry &r) {
  r.addRule("func_func", [](const Operation &, OpVerifyContext &ctx) {
    const Function &fn = ctx.function();
    const Block &last = fn.body.blocks.back();
    if (last.ops.empty() || !last.ops.back().is("func", "return"))
      ctx.emitError("function body must end with 'func.return'");
    if (auto kind = fn.kernelKind()) {
      if (!parseKernelKind(*kind))
        ctx.emitError("unknown kernel kind '" + *kind + "'");
      if (fn.resultType)
        ctx.emitError("device function cannot return a value");
      for (ValueId arg : fn.args())
        if (!satisfies(fn.typeOf(arg), TC::RuntimeArg))
          ctx.emitError("device function arguments must be i32 or f32 runtime args");
    } else if (fn.attrs.count("tt.kernel_kind")) {
      ctx.emitError("'tt.kernel_kind' must be a string");
    }
  });

  r.addRule("func_return", [](const Operation &op, OpVerifyContext &ctx) {
    if (ctx.parent() || !ctx.isLastInBlock()) {
      ctx.emitError("'func.return' must terminate the function body");
      return;
    }
    const Function &fn = ctx.function();
    std::size_t expected = fn.resultType ? 1 : 0;
    if (op.operands.size() != expected) {
      ctx.emitError("'func.return' operand count mismatch: expected " +
                    std::to_string(expected) + ", got " +
                    std::to_string(op.operands.size()));
      return;
    }
    if (expected && !(ctx.typeOf(op.operands[0]) == *fn.resultType))
      ctx.emitError("'func.return' type does not match function result type");
  });

  r.addRule("func_call", [](const Operation &op, OpVerifyContext &ctx) {
    auto callee = op.getSymbolAttr("callee");
    if (const RuntimeFunction *rt = lookupRuntimeFunction(*callee)) {
      if (ctx.function().isDeviceFunction()) {
        ctx.emitError("runtime call @" + rt->name + " not allowed in device context");
        return;
      }
      std::size_t fixed = rt->variadic ? rt->operands.size() - 1 : rt->operands.size();
      bool countOk = rt->variadic ? op.operands.size() >= fixed
                                  : op.operands.size() == fixed;
      if (!countOk) {
        ctx.emitError("operand count mismatch for @" + rt->name);
        return;
      }
      for (std::size_t i = 0; i < op.operands.size(); ++i) {
        TC c = i < fixed ? rt->operands[i] : rt->operands.back();
        if (!satisfies(ctx.typeOf(op.operands[i]), c))
          ctx.emitError("operand #" + std::to_string(i) + " of @" + rt->name +
                        " must be " + describe(c));
      }
      if (op.results.size() != (rt->result ? 1u : 0u))
        ctx.emitError("result count mismatch for @" + rt->name);
      else if (rt->result && !satisfies(ctx.typeOf(op.results[0]), *rt->result))
        ctx.emitError("result of @" + rt->name + " must be " + describe(*rt->result));
      if (rt->takesKernel) {
        if (!op.getSymbolAttr("kernel"))
          ctx.emitError("missing required attribute 'kernel'");
        else
          lookupKernel(op, ctx);
      }
      return;
    }
    if (!ctx.module())
      return;
    const Function *target = ctx.module()->lookup(*callee);
    if (!target) {
      ctx.emitError("callee @" + *callee + " does not resolve");
      return;
    }
    checkArgsMatch(op.operands, 0, *target, ctx);
    std::size_t results = target->resultType ? 1 : 0;
    if (op.results.size() != results)
      ctx.emitError("result count mismatch for @" + *callee);
    else if (results && !(ctx.typeOf(op.results[0]) == *target->resultType))
      ctx.emitError("result type mismatch for @" + *callee);
  });

  r.addRule("arith_constant", [](const Operation &op, OpVerifyContext &ctx) {
    const Attribute *value = op.getAttr("value");
    if (!value) {
      ctx.emitError("missing required attribute 'value'");
      return;
    }
    const Type &t = ctx.typeOf(op.results[0]);
    if (t.isF32() && !value->isFloat())
      ctx.emitError("f32 constant requires a float 'value'");
    else if (t.isInteger() && !value->isInteger())
      ctx.emitError("integer constant requires an integer 'value'");
    else if (t.isI1() && value->getInt() != 0 && value->getInt() != 1)
      ctx.emitError("i1 constant must be 0 or 1");
  });

  r.addRule("same_int_type", [](const Operation &op, OpVerifyContext &ctx) {
    const Type &res = ctx.typeOf(op.results[0]);
    for (ValueId v : op.operands)
      if (!(ctx.typeOf(v) == res)) {
        ctx.emitError("operand and result types must match");
        return;
      }
  });

  r.addRule("arith_cmpi", [](const Operation &op, OpVerifyContext &ctx) {
    static const std::set<std::string> predicates = {"eq",  "ne",  "slt",
                                                     "sle", "sgt", "sge"};
    if (!predicates.count(*op.getStringAttr("predicate")))
      ctx.emitError("unknown cmpi predicate '" + *op.getStringAttr("predicate") + "'");
    if (!(ctx.typeOf(op.operands[0]) == ctx.typeOf(op.operands[1])))
      ctx.emitError("cmpi operands must have the same type");
  });

  r.addRule("arith_select", [](const Operation &op, OpVerifyContext &ctx) {
    const Type &res = ctx.typeOf(op.results[0]);
    if (!(ctx.typeOf(op.operands[1]) == res) || !(ctx.typeOf(op.operands[2]) == res))
      ctx.emitError("select branches must match the result type");
  });

  r.addRule("arith_index_cast", [](const Operation &op, OpVerifyContext &ctx) {
    bool fromIndex = ctx.typeOf(op.operands[0]).isIndex();
    bool toIndex = ctx.typeOf(op.results[0]).isIndex();
    if (fromIndex == toIndex)
      ctx.emitError("index_cast must convert between index and i32");
  });

  r.addRule("ftn_subroutine", [](const Operation &op, OpVerifyContext &ctx) {
    const Region &body = op.regions.front();
    if (body.blocks.size() != 1 || body.front().ops.empty() ||
        !body.front().ops.back().is("ftn", "end"))
      ctx.emitError("'ftn.subroutine' body must be one block ending with 'ftn.end'");
  });

  r.addRule("ftn_do_loop", [](const Operation &op, OpVerifyContext &ctx) {
    checkLoopBody(op, ctx, "ftn.end");
  });

  r.addRule("ftn_load", [](const Operation &op, OpVerifyContext &ctx) {
    checkMemrefAccess(ctx, op.operands[0], 1, ctx.typeOf(op.results[0]));
  });

  r.addRule("ftn_store", [](const Operation &op, OpVerifyContext &ctx) {
    checkMemrefAccess(ctx, op.operands[1], 1, ctx.typeOf(op.operands[0]));
  });

  r.addRule("ftn_end", [](const Operation &, OpVerifyContext &ctx) {
    const Operation *parent = ctx.parent();
    if (!parent || !(parent->is("ftn", "subroutine") || parent->is("ftn", "do_loop")))
      ctx.emitError("'ftn.end' must terminate an ftn.subroutine or ftn.do_loop body");
    else if (!ctx.isLastInBlock())
      ctx.emitError("'ftn.end' must be the last op in its block");
  });

  r.addRule("scf_for", [](const Operation &op, OpVerifyContext &ctx) {
    checkLoopBody(op, ctx, "scf.yield");
  });

  r.addRule("scf_yield", [](const Operation &, OpVerifyContext &ctx) {
    const Operation *parent = ctx.parent();
    if (!parent || !parent->is("scf", "for"))
      ctx.emitError("'scf.yield' must terminate an scf.for body");
    else if (!ctx.isLastInBlock())
      ctx.emitError("'scf.yield' must be the last op in its block");
  });

  r.addRule("memref_alloc", [](const Operation &op, OpVerifyContext &ctx) {
    const Type &t = ctx.typeOf(op.results[0]);
    std::size_t dynamic = 0;
    for (int64_t d : t.shape())
      if (d == Type::kDynamic)
        ++dynamic;
    if (op.operands.size() != dynamic)
      ctx.emitError("expected " + std::to_string(dynamic) +
                    " dynamic size operands, got " + std::to_string(op.operands.size()));
  });

  r.addRule("memref_load", [](const Operation &op, OpVerifyContext &ctx) {
    checkMemrefAccess(ctx, op.operands[0], op.operands.size() - 1,
                      ctx.typeOf(op.results[0]));
  });

  r.addRule("memref_store", [](const Operation &op, OpVerifyContext &ctx) {
    checkMemrefAccess(ctx, op.operands[1], op.operands.size() - 2,
                      ctx.typeOf(op.operands[0]));
  });

  r.addRule("memref_dim", [](const Operation &op, OpVerifyContext &ctx) {
    int64_t index = *op.getIntAttr("index");
    int64_t rank = static_cast<int64_t>(ctx.typeOf(op.operands[0]).shape().size());
    if (index < 0 || index >= rank)
      ctx.emitError("dimension index " + std::to_string(index) + " out of range for rank " +
                    std::to_string(rank));
  });

  r.addRule("offload_target", [](const Operation &op, OpVerifyContext &ctx) {
    static const char *kMapKeys[] = {"map_to", "map_from", "map_tofrom"};
    bool anyMap = false;
    std::vector<int> mapCount(op.operands.size(), 0);
    for (const char *key : kMapKeys) {
      const Attribute *attr = op.getAttr(key);
      if (!attr)
        continue;
      anyMap = true;
      auto indices = getIntArray(*attr);
      if (!indices) {
        ctx.emitError(std::string("attribute '") + key +
                      "' must be an array of operand indices");
        continue;
      }
      for (int64_t idx : *indices) {
        if (idx < 0 || idx >= static_cast<int64_t>(op.operands.size())) {
          ctx.emitError(std::string("'") + key + "' index " + std::to_string(idx) +
                        " out of range");
          continue;
        }
        if (!ctx.typeOf(op.operands[idx]).isMemRef())
          ctx.emitError(std::string("'") + key + "' entry " + std::to_string(idx) +
                        " is not an array");
        ++mapCount[idx];
      }
    }
    if (!anyMap) {
      ctx.emitError("missing required attribute 'map' (one of map_to, map_from, "
                    "map_tofrom)");
      return;
    }
    for (std::size_t i = 0; i < op.operands.size(); ++i)
      if (ctx.typeOf(op.operands[i]).isMemRef() && mapCount[i] != 1)
        ctx.emitError("array operand #" + std::to_string(i) +
                      " must appear in exactly one map list");
    for (const char *key : {"num_teams", "num_threads", "simdlen"}) {
      const Attribute *attr = op.getAttr(key);
      if (attr && (!attr->isInteger() || attr->getInt() <= 0))
        ctx.emitError(std::string("'") + key + "' must be a positive integer");
    }

    const Region &region = op.regions.front();
    if (region.blocks.size() != 1) {
      ctx.emitError("'offload.target' region must have exactly one block");
      return;
    }
    const Block &entry = region.front();
    bool argsMatch = entry.args.size() == op.operands.size();
    for (std::size_t i = 0; argsMatch && i < entry.args.size(); ++i)
      argsMatch = ctx.typeOf(entry.args[i]) == ctx.typeOf(op.operands[i]);
    if (!argsMatch) {
      ctx.emitError("'offload.target' region arguments must mirror its operands");
      return;
    }
    // Isolated from above: the region sees only its own block arguments.
    std::set<ValueId> local(entry.args.begin(), entry.args.end());
    bool leaked = false;
    std::function<void(const Region &)> scan = [&](const Region &rgn) {
      for (const Block &block : rgn.blocks) {
        local.insert(block.args.begin(), block.args.end());
        for (const Operation &inner : block.ops) {
          for (ValueId v : inner.operands)
            if (!local.count(v))
              leaked = true;
          for (const Region &nested : inner.regions)
            scan(nested);
          local.insert(inner.results.begin(), inner.results.end());
        }
      }
    };
    scan(region);
    if (leaked)
      ctx.emitError("'offload.target' region uses a value defined outside it");
  });

  r.addRule("tt_cb_ref", [](const Operation &op, OpVerifyContext &ctx) {
    checkCbAttr(op, ctx, "cb");
  });

  r.addRule("tt_cb_count", [](const Operation &op, OpVerifyContext &ctx) {
    checkCbAttr(op, ctx, "cb");
    if (*op.getIntAttr("n") < 1)
      ctx.emitError("tile count must be at least 1");
  });

  r.addRule("tt_host_create_cb", [](const Operation &op, OpVerifyContext &ctx) {
    if (*op.getIntAttr("core") < 0)
      ctx.emitError("core id must be non-negative");
    checkCbAttr(op, ctx, "cb_id");
    if (*op.getIntAttr("capacity") < 1)
      ctx.emitError("circular buffer capacity must be at least 1 tile");
  });

  r.addRule("tt_host_create_kernel", [](const Operation &op, OpVerifyContext &ctx) {
    if (*op.getIntAttr("core") < 0)
      ctx.emitError("core id must be non-negative");
    std::string kind = *op.getStringAttr("kind");
    if (!parseKernelKind(kind)) {
      ctx.emitError("unknown kernel kind '" + kind + "'");
      return;
    }
    if (const Function *kernel = lookupKernel(op, ctx))
      if (kernel->kernelKind() != kind)
        ctx.emitError("kernel @" + kernel->name + " is a " + *kernel->kernelKind() +
                      " kernel, not " + kind);
  });

  r.addRule("tt_host_runtime_args", [](const Operation &op, OpVerifyContext &ctx) {
    if (*op.getIntAttr("core") < 0)
      ctx.emitError("core id must be non-negative");
    if (const Function *kernel = lookupKernel(op, ctx))
      checkArgsMatch(op.operands, 0, *kernel, ctx);
  });
}

//===----------------------------------------------------------------------===//
// Op tables
//===----------------------------------------------------------------------===//

OpSpec op(std::string dialect, std::string name, std::vector<TC> operands,
          std::vector<TC> results, OpContext context = OpContext::Any) {
  OpSpec spec;
  spec.dialect = std::move(dialect);
  spec.name = std::move(name);
  spec.operands = std::move(operands);
  spec.results = std::move(results);
  spec.context = context;
  return spec;
}

OpSpec with(OpSpec spec, std::string rule) {
  spec.rule = std::move(rule);
  return spec;
}

OpSpec attrs(OpSpec spec, std::vector<std::pair<std::string, AttrKind>> required) {
  spec.requiredAttrs = std::move(required);
  return spec;
}

OpSpec regions(OpSpec spec, int count) {
  spec.regionCount = count;
  return spec;
}

OpSpec variadic(OpSpec spec) {
  spec.variadicOperands = true;
  return spec;
}

void registerFtn(DialectRegistry &r) {
  const auto host = OpContext::Host;
  r.addOp(with(regions(attrs(op("ftn", "subroutine", {}, {}, host),
                             {{"name", AttrKind::String}}),
                       1),
               "ftn_subroutine"));
  r.addOp(with(regions(op("ftn", "do_loop", {TC::Index, TC::Index, TC::Index}, {}, host),
                       1),
               "ftn_do_loop"));
  r.addOp(with(op("ftn", "load", {TC::MemRef, TC::Index}, {TC::Scalar}, host),
               "ftn_load"));
  r.addOp(with(op("ftn", "store", {TC::Scalar, TC::MemRef, TC::Index}, {}, host),
               "ftn_store"));
  r.addOp(with(op("ftn", "end", {}, {}, host), "ftn_end"));
}

void registerStandard(DialectRegistry &r) {
  r.addOp(with(regions(op("func", "func", {}, {}), 1), "func_func"));
  r.addOp(with(variadic(op("func", "return", {TC::Any}, {})), "func_return"));
  OpSpec call = attrs(variadic(op("func", "call", {TC::Any}, {TC::Any})),
                      {{"callee", AttrKind::Symbol}});
  call.variadicResults = true;
  r.addOp(with(std::move(call), "func_call"));

  r.addOp(with(op("arith", "constant", {}, {TC::Scalar}), "arith_constant"));
  for (const char *name : {"addf", "subf", "mulf", "divf"})
    r.addOp(op("arith", name, {TC::F32, TC::F32}, {TC::F32}));
  for (const char *name : {"addi", "subi", "muli", "divsi", "remsi"})
    r.addOp(with(op("arith", name, {TC::AnyInt, TC::AnyInt}, {TC::AnyInt}),
                 "same_int_type"));
  r.addOp(with(attrs(op("arith", "cmpi", {TC::AnyInt, TC::AnyInt}, {TC::I1}),
                     {{"predicate", AttrKind::String}}),
               "arith_cmpi"));
  r.addOp(with(op("arith", "select", {TC::I1, TC::Scalar, TC::Scalar}, {TC::Scalar}),
               "arith_select"));
  r.addOp(with(op("arith", "index_cast", {TC::AnyInt}, {TC::AnyInt}),
               "arith_index_cast"));

  r.addOp(with(regions(op("scf", "for", {TC::Index, TC::Index, TC::Index}, {}), 1),
               "scf_for"));
  r.addOp(with(op("scf", "yield", {}, {}), "scf_yield"));

  r.addOp(with(variadic(op("memref", "alloc", {TC::Index}, {TC::MemRef})),
               "memref_alloc"));
  r.addOp(with(variadic(op("memref", "load", {TC::MemRef, TC::Index}, {TC::Scalar})),
               "memref_load"));
  r.addOp(with(variadic(op("memref", "store", {TC::Scalar, TC::MemRef, TC::Index}, {})),
               "memref_store"));
  r.addOp(with(attrs(op("memref", "dim", {TC::MemRef}, {TC::Index}),
                     {{"index", AttrKind::Integer}}),
               "memref_dim"));
}

void registerOffload(DialectRegistry &r) {
  r.addOp(with(regions(variadic(op("offload", "target", {TC::Any}, {}, OpContext::Host)),
                       1),
               "offload_target"));
}

void registerTenstorrent(DialectRegistry &r) {
  const auto host = OpContext::Host;
  const auto device = OpContext::Device;
  const auto I = AttrKind::Integer;

  r.addOp(op("tt_host", "open_device", {}, {TC::I32}, host));
  r.addOp(op("tt_host", "create_buffer", {TC::I32}, {TC::I32}, host));
  r.addOp(op("tt_host", "write_buffer", {TC::I32, TC::MemRef}, {}, host));
  r.addOp(op("tt_host", "read_buffer", {TC::I32, TC::MemRef}, {}, host));
  r.addOp(with(attrs(op("tt_host", "create_cb", {}, {}, host),
                     {{"core", I}, {"cb_id", I}, {"capacity", I}}),
               "tt_host_create_cb"));
  r.addOp(with(attrs(op("tt_host", "create_kernel", {}, {}, host),
                     {{"core", I}, {"kind", AttrKind::String}, {"kernel", AttrKind::Symbol}}),
               "tt_host_create_kernel"));
  OpSpec args = attrs(variadic(op("tt_host", "set_runtime_args", {TC::RuntimeArg}, {}, host)),
                      {{"core", I}, {"kernel", AttrKind::Symbol}});
  r.addOp(with(std::move(args), "tt_host_runtime_args"));
  r.addOp(op("tt_host", "launch", {}, {}, host));
  r.addOp(op("tt_host", "wait", {}, {}, host));
  r.addOp(op("tt_host", "close_device", {}, {}, host));

  r.addOp(with(attrs(op("tt_dm", "read_tile", {TC::I32, TC::Index, TC::Index}, {}, device),
                     {{"cb", I}, {"pad", AttrKind::Float}}),
               "tt_cb_ref"));
  r.addOp(with(attrs(op("tt_dm", "write_tile", {TC::I32, TC::Index, TC::Index}, {}, device),
                     {{"cb", I}}),
               "tt_cb_ref"));
  r.addOp(op("tt_dm", "barrier", {}, {}, device));

  for (const char *name : {"reserve", "push", "wait", "pop"})
    r.addOp(with(attrs(op("tt_cb", name, {}, {}, device), {{"cb", I}, {"n", I}}),
                 "tt_cb_count"));
  r.addOp(with(attrs(op("tt_cb", "write_slot", {TC::Tile}, {}, device), {{"cb", I}}),
               "tt_cb_ref"));
  r.addOp(with(attrs(op("tt_cb", "read_slot", {}, {TC::Tile}, device), {{"cb", I}}),
               "tt_cb_ref"));

  r.addOp(op("tt_compute", "init", {}, {}, device));
  r.addOp(with(attrs(op("tt_compute", "copy_in", {}, {TC::Tile}, device), {{"cb", I}}),
               "tt_cb_ref"));
  for (const char *name : {"add_tiles", "mul_tiles", "sub_tiles", "div_tiles"})
    r.addOp(op("tt_compute", name, {TC::Tile, TC::Tile}, {TC::Tile}, device));
  for (const char *name : {"mul_scalar", "add_scalar"})
    r.addOp(op("tt_compute", name, {TC::Tile, TC::F32}, {TC::Tile}, device));
  r.addOp(op("tt_compute", "fill", {TC::F32}, {TC::Tile}, device));
  r.addOp(with(attrs(op("tt_compute", "pack_out", {TC::Tile}, {}, device), {{"cb", I}}),
               "tt_cb_ref"));
}

} // namespace

DialectRegistry registerBuiltinDialects() {
  DialectRegistry registry;
  registerRules(registry);
  registerFtn(registry);
  registerStandard(registry);
  registerOffload(registry);
  registerTenstorrent(registry);
  return registry;
}

const DialectRegistry &builtinRegistry() {
  static const DialectRegistry registry = registerBuiltinDialects();
  return registry;
}

} // namespace tenflow::dialects
