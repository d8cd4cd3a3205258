// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Dialects/RuntimeAbi.h"
#include "tenflow/IR/Builder.h"
#include "tenflow/Passes/Elementwise.h"
#include "tenflow/Passes/Passes.h"

#include <algorithm>
#include <map>
#include <set>

using namespace tenflow;
using namespace tenflow::ir;
using namespace tenflow::passes;
using dialects::KernelKind;
using dialects::kernelKindName;

namespace {

struct KernelNames {
  std::string reader, compute, writer;
};

/// Argument layout shared by the three kernels of one region:
/// (buffer ids..., start_tile, num_tiles, tail_len, f32 scalars...).
struct KernelAbi {
  std::size_t numBuffers = 0;
  std::size_t numScalars = 0;

  std::size_t startArg() const { return numBuffers; }
  std::size_t numArg() const { return numBuffers + 1; }
  std::size_t tailArg() const { return numBuffers + 2; }
  std::size_t scalarArg(std::size_t i) const { return numBuffers + 3 + i; }
};

class RegionOutliner {
public:
  RegionOutliner(const ElementwiseDag &dag, const Operation &target,
                 const DeviceConfig &config, KernelNames names)
      : dag(dag), target(target), config(config), names(std::move(names)) {
    abi.numBuffers = dag.buffers.size();
    abi.numScalars = dag.scalars.size();
  }

  Function reader() const;
  Function compute() const;
  Function writer() const;
  /// Emits the host launch sequence for this region into `b`.
  void emitHost(OpBuilder &b, bool openDevice, bool closeDevice) const;

  int64_t numCores() const { return *target.getIntAttr("num_teams"); }
  int64_t outputCb() const { return static_cast<int64_t>(dag.inputs.size()); }

private:
  Function makeKernel(const std::string &name, KernelKind kind) const;
  std::size_t bufferArg(int operand) const {
    for (std::size_t i = 0; i < dag.buffers.size(); ++i)
      if (dag.buffers[i].operand == operand)
        return i;
    return 0;
  }

  /// Common prologue of the data-movement kernels. Returns (start, num,
  /// last-tile length) as index values.
  struct TileLoopState {
    ValueId start, num, numMinusOne, lastLen, zero, one, tile;
  };
  TileLoopState tileLoopPrologue(OpBuilder &b) const;
  /// Global tile index and number of valid elements of iteration `t`.
  std::pair<ValueId, ValueId> tileCoords(OpBuilder &b, const TileLoopState &s,
                                         ValueId t) const;

  const ElementwiseDag &dag;
  const Operation &target;
  const DeviceConfig &config;
  KernelNames names;
  KernelAbi abi;
};

Function RegionOutliner::makeKernel(const std::string &name, KernelKind kind) const {
  std::vector<Type> types(abi.numBuffers + 3, Type::i32());
  ArrayAttr argNames;
  for (const DagArray &buf : dag.buffers)
    argNames.emplace_back(buf.name + "_buf");
  argNames.emplace_back("start_tile");
  argNames.emplace_back("num_tiles");
  argNames.emplace_back("tail_len");
  for (const DagScalar &s : dag.scalars) {
    types.push_back(Type::f32());
    argNames.emplace_back(s.name);
  }
  Function fn = makeFunction(name, types);
  fn.attrs["arg_names"] = std::move(argNames);
  fn.attrs["tt.kernel_kind"] = kernelKindName(kind);
  for (const char *key : {"simdlen", "num_threads"})
    if (auto v = target.getIntAttr(key))
      fn.attrs[std::string("tt.") + key] = *v;
  return fn;
}

RegionOutliner::TileLoopState RegionOutliner::tileLoopPrologue(OpBuilder &b) const {
  const Function &fn = b.function();
  TileLoopState s;
  s.start = b.cast(fn.args()[abi.startArg()], Type::index());
  s.num = b.cast(fn.args()[abi.numArg()], Type::index());
  ValueId tail = b.cast(fn.args()[abi.tailArg()], Type::index());
  s.zero = b.constIndex(0);
  s.one = b.constIndex(1);
  s.tile = b.constIndex(config.tileElems);
  s.lastLen = b.select(b.cmp("eq", tail, s.zero), s.tile, tail);
  s.numMinusOne = b.arith("subi", s.num, s.one);
  return s;
}

std::pair<ValueId, ValueId> RegionOutliner::tileCoords(OpBuilder &b,
                                                       const TileLoopState &s,
                                                       ValueId t) const {
  ValueId global = b.arith("addi", s.start, t);
  ValueId valid = b.select(b.cmp("eq", t, s.numMinusOne), s.lastLen, s.tile);
  return {global, valid};
}

Function RegionOutliner::reader() const {
  Function fn = makeKernel(names.reader, KernelKind::Reader);
  OpBuilder b(fn, fn.entry().ops);
  TileLoopState s = tileLoopPrologue(b);
  // Pad lanes never reach memory; 1.0 keeps dead-lane division finite.
  double pad = dag.hasDivision() ? 1.0 : 0.0;
  b.forLoop(s.zero, s.num, s.one, [&](OpBuilder &body, ValueId t) {
    auto [global, valid] = tileCoords(body, s, t);
    for (std::size_t k = 0; k < dag.inputs.size(); ++k) {
      int64_t cb = static_cast<int64_t>(k);
      ValueId buf = fn.args()[bufferArg(dag.inputs[k].operand)];
      body.op("tt_cb", "reserve", {}, {{"cb", cb}, {"n", 1}});
      body.op("tt_dm", "read_tile", {buf, global, valid}, {{"cb", cb}, {"pad", pad}});
      body.op("tt_cb", "push", {}, {{"cb", cb}, {"n", 1}});
    }
  });
  b.op("func", "return");
  return fn;
}

Function RegionOutliner::writer() const {
  Function fn = makeKernel(names.writer, KernelKind::Writer);
  OpBuilder b(fn, fn.entry().ops);
  TileLoopState s = tileLoopPrologue(b);
  int64_t out = outputCb();
  ValueId buf = fn.args()[bufferArg(dag.output.operand)];
  b.forLoop(s.zero, s.num, s.one, [&](OpBuilder &body, ValueId t) {
    auto [global, valid] = tileCoords(body, s, t);
    body.op("tt_cb", "wait", {}, {{"cb", out}, {"n", 1}});
    body.op("tt_dm", "write_tile", {buf, global, valid}, {{"cb", out}});
    body.op("tt_cb", "pop", {}, {{"cb", out}, {"n", 1}});
  });
  b.op("tt_dm", "barrier");
  b.op("func", "return");
  return fn;
}

Function RegionOutliner::compute() const {
  Function fn = makeKernel(names.compute, KernelKind::Compute);
  OpBuilder b(fn, fn.entry().ops);
  ValueId num = b.cast(fn.args()[abi.numArg()], Type::index());
  ValueId zero = b.constIndex(0);
  ValueId one = b.constIndex(1);
  b.op("tt_compute", "init");

  // Loop-invariant part: scalar subexpressions and broadcast tiles.
  std::map<int, ValueId> scalarOf;
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    int id = static_cast<int>(i);
    if (dag.isTileValued(id))
      continue;
    const DagNode &n = dag.nodes[i];
    switch (n.kind) {
    case DagNode::Kind::Scalar:
      scalarOf[id] = fn.args()[abi.scalarArg(n.index)];
      break;
    case DagNode::Kind::Constant:
      scalarOf[id] = b.constF32(n.value);
      break;
    case DagNode::Kind::Binary: {
      const char *name = n.op == '+'   ? "addf"
                         : n.op == '-' ? "subf"
                         : n.op == '*' ? "mulf"
                                       : "divf";
      scalarOf[id] = b.arith(name, scalarOf.at(n.lhs), scalarOf.at(n.rhs));
      break;
    }
    case DagNode::Kind::Input:
      break;
    }
  }
  // Scalars that meet a tile through - or / need a broadcast tile; so does a
  // body that never touches an input.
  std::map<int, ValueId> fillOf;
  auto needFill = [&](int id) {
    if (!fillOf.count(id))
      fillOf[id] = b.value("tt_compute", "fill", {scalarOf.at(id)}, Type::tile());
  };
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const DagNode &n = dag.nodes[i];
    if (n.kind != DagNode::Kind::Binary || !dag.isTileValued(static_cast<int>(i)))
      continue;
    bool lt = dag.isTileValued(n.lhs), rt = dag.isTileValued(n.rhs);
    if (n.op == '-' || n.op == '/') {
      if (!lt)
        needFill(n.lhs);
      if (!rt)
        needFill(n.rhs);
    }
  }
  if (!dag.isTileValued(dag.root))
    needFill(dag.root);

  int64_t out = outputCb();
  b.forLoop(zero, num, one, [&](OpBuilder &body, ValueId) {
    std::map<int, ValueId> tileOf;
    std::vector<ValueId> inputTiles;
    for (std::size_t k = 0; k < dag.inputs.size(); ++k) {
      int64_t cb = static_cast<int64_t>(k);
      body.op("tt_cb", "wait", {}, {{"cb", cb}, {"n", 1}});
      inputTiles.push_back(
          body.value("tt_compute", "copy_in", {}, Type::tile(), {{"cb", cb}}));
    }
    for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
      int id = static_cast<int>(i);
      const DagNode &n = dag.nodes[i];
      if (!dag.isTileValued(id))
        continue;
      if (n.kind == DagNode::Kind::Input) {
        tileOf[id] = inputTiles[n.index];
        continue;
      }
      bool lt = dag.isTileValued(n.lhs), rt = dag.isTileValued(n.rhs);
      if (lt != rt && (n.op == '+' || n.op == '*')) {
        ValueId t = tileOf.at(lt ? n.lhs : n.rhs);
        ValueId s = scalarOf.at(lt ? n.rhs : n.lhs);
        tileOf[id] = body.value("tt_compute", n.op == '+' ? "add_scalar" : "mul_scalar",
                                {t, s}, Type::tile());
        continue;
      }
      const char *name = n.op == '+'   ? "add_tiles"
                         : n.op == '-' ? "sub_tiles"
                         : n.op == '*' ? "mul_tiles"
                                       : "div_tiles";
      ValueId lhs = lt ? tileOf.at(n.lhs) : fillOf.at(n.lhs);
      ValueId rhs = rt ? tileOf.at(n.rhs) : fillOf.at(n.rhs);
      tileOf[id] = body.value("tt_compute", name, {lhs, rhs}, Type::tile());
    }
    for (std::size_t k = 0; k < dag.inputs.size(); ++k)
      body.op("tt_cb", "pop", {}, {{"cb", static_cast<int64_t>(k)}, {"n", 1}});
    ValueId result = dag.isTileValued(dag.root) ? tileOf.at(dag.root)
                                                : fillOf.at(dag.root);
    body.op("tt_cb", "reserve", {}, {{"cb", out}, {"n", 1}});
    body.op("tt_compute", "pack_out", {result}, {{"cb", out}});
    body.op("tt_cb", "push", {}, {{"cb", out}, {"n", 1}});
  });
  b.op("func", "return");
  return fn;
}

void RegionOutliner::emitHost(OpBuilder &b, bool openDevice, bool closeDevice) const {
  Function &fn = b.function();
  auto outer = [&](int operand) { return target.operands[operand]; };

  if (openDevice)
    b.value("tt_host", "open_device", {}, Type::i32());

  ValueId trip = dag.tripOperand ? b.cast(outer(*dag.tripOperand), Type::index())
                                 : b.constIndex(dag.tripConstant);
  ValueId zero = b.constIndex(0);
  ValueId one = b.constIndex(1);
  ValueId n = b.select(b.cmp("slt", trip, zero), zero, trip);
  ValueId bytes = b.cast(b.arith("muli", n, b.constIndex(4)), Type::i32());

  std::vector<ValueId> buffers;
  for (std::size_t i = 0; i < dag.buffers.size(); ++i)
    buffers.push_back(b.value("tt_host", "create_buffer", {bytes}, Type::i32()));
  for (std::size_t i = 0; i < dag.buffers.size(); ++i)
    if (dag.buffers[i].map != MapKind::From)
      b.op("tt_host", "write_buffer", {buffers[i], outer(dag.buffers[i].operand)});

  // Partition arithmetic mirrors computeTilePartition.
  ValueId tileElems = b.constIndex(config.tileElems);
  ValueId total = b.arith(
      "divsi", b.arith("addi", n, b.constIndex(config.tileElems - 1)), tileElems);
  ValueId cores = b.constIndex(numCores());
  ValueId base = b.arith("divsi", total, cores);
  ValueId extra = b.arith("remsi", total, cores);
  ValueId tail = b.arith("remsi", n, tileElems);

  std::vector<ValueId> scalarArgs;
  for (const DagScalar &s : dag.scalars)
    scalarArgs.push_back(outer(s.operand));

  for (int64_t c = 0; c < numCores(); ++c) {
    ValueId core = b.constIndex(c);
    ValueId early = b.cmp("slt", core, extra);
    ValueId count = b.arith("addi", base, b.select(early, one, zero));
    ValueId start = b.arith("addi", b.arith("muli", core, base),
                            b.select(early, core, extra));
    ValueId end = b.arith("addi", start, count);
    ValueId coreTail = b.select(b.cmp("eq", end, total), tail, zero);

    for (int64_t cb = 0; cb <= outputCb(); ++cb)
      b.op("tt_host", "create_cb", {},
           {{"core", c}, {"cb_id", cb}, {"capacity", config.cbCapacity}});
    std::vector<ValueId> args = buffers;
    args.push_back(b.cast(start, Type::i32()));
    args.push_back(b.cast(count, Type::i32()));
    args.push_back(b.cast(coreTail, Type::i32()));
    args.insert(args.end(), scalarArgs.begin(), scalarArgs.end());
    std::pair<KernelKind, const std::string *> kernels[] = {
        {KernelKind::Reader, &names.reader},
        {KernelKind::Compute, &names.compute},
        {KernelKind::Writer, &names.writer}};
    for (auto [kind, name] : kernels)
      b.op("tt_host", "create_kernel", {},
           {{"core", c}, {"kind", kernelKindName(kind)}, {"kernel", SymbolRef{*name}}});
    for (auto [kind, name] : kernels)
      b.op("tt_host", "set_runtime_args", args,
           {{"core", c}, {"kernel", SymbolRef{*name}}});
  }
  b.op("tt_host", "launch");
  b.op("tt_host", "wait");
  for (std::size_t i = 0; i < dag.buffers.size(); ++i)
    if (dag.buffers[i].map != MapKind::To)
      b.op("tt_host", "read_buffer", {buffers[i], outer(dag.buffers[i].operand)});
  if (closeDevice)
    b.op("tt_host", "close_device");
  (void)fn;
}

bool containsOffload(const Region &region) {
  bool found = false;
  walkOps(region, [&](const Operation &op) {
    if (op.is("offload", "target"))
      found = true;
  });
  return found;
}

} // namespace

Result<Module> passes::offloadToTt(const Module &module, const DeviceConfig &config) {
  Module out = module;
  std::vector<Function> kernels;
  DiagnosticList diags;
  std::set<std::string> symbols;
  for (const Function &fn : module.functions)
    symbols.insert(fn.name);

  for (Function &fn : out.functions) {
    if (!containsOffload(fn.body))
      continue;
    Location loc = Location::inFunction(fn.name);
    std::vector<Operation> &ops = fn.entry().ops;
    std::size_t numRegions = 0;
    for (const Operation &op : ops)
      numRegions += op.is("offload", "target");
    std::size_t nested = 0;
    for (const Operation &op : ops)
      for (const Region &r : op.regions)
        nested += !op.is("offload", "target") && containsOffload(r);
    if (nested) {
      diags.push_back(Diagnostic::error(
          "offload region nested inside host control flow is not supported", loc));
      continue;
    }

    std::vector<Operation> rewritten;
    OpBuilder b(fn, rewritten);
    std::size_t index = 0;
    for (const Operation &op : std::vector<Operation>(ops)) {
      if (!op.is("offload", "target")) {
        b.append(op);
        continue;
      }
      std::size_t k = index++;
      int64_t teams = op.getIntAttr("num_teams").value_or(1);
      if (teams > config.numCores) {
        diags.push_back(Diagnostic::error(
            "num_teams(" + std::to_string(teams) + ") exceeds the configured core count " +
                std::to_string(config.numCores),
            loc));
        continue;
      }
      if (auto simd = op.getIntAttr("simdlen"); simd && config.tileElems % *simd != 0) {
        diags.push_back(Diagnostic::error(
            "simdlen(" + std::to_string(*simd) + ") does not divide the tile width " +
                std::to_string(config.tileElems),
            loc));
        continue;
      }
      Result<ElementwiseDag> dag = matchElementwise(fn, op);
      if (!dag) {
        for (const Diagnostic &d : dag.diagnostics())
          diags.push_back(d);
        continue;
      }
      if (static_cast<int64_t>(dag->inputs.size()) + 1 > dialects::kNumCircularBuffers) {
        diags.push_back(Diagnostic::error("offload region reads too many arrays", loc));
        continue;
      }
      Operation target = op;
      target.attrs["num_teams"] = teams;
      std::string prefix = fn.name + "_offload" + std::to_string(k);
      KernelNames names{prefix + "_reader", prefix + "_compute", prefix + "_writer"};
      for (const std::string *name : {&names.reader, &names.compute, &names.writer})
        if (!symbols.insert(*name).second)
          diags.push_back(Diagnostic::error(
              "kernel symbol @" + *name + " collides with an existing function", loc));
      RegionOutliner outliner(*dag, target, config, names);
      outliner.emitHost(b, k == 0, k + 1 == numRegions);
      kernels.push_back(outliner.reader());
      kernels.push_back(outliner.compute());
      kernels.push_back(outliner.writer());
    }
    ops = std::move(rewritten);
  }
  if (!diags.empty())
    return diags;
  if (!kernels.empty())
    out.attrs["tt.tile_elems"] = config.tileElems;
  for (Function &k : kernels)
    out.functions.push_back(std::move(k));
  return out;
}
