// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Passes/Elementwise.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

using namespace tenflow;
using namespace tenflow::ir;
using namespace tenflow::passes;

const char *passes::mapKindName(MapKind kind) {
  switch (kind) {
  case MapKind::To:
    return "to";
  case MapKind::From:
    return "from";
  case MapKind::ToFrom:
    return "tofrom";
  }
  return "?";
}

bool ElementwiseDag::hasDivision() const {
  return std::any_of(nodes.begin(), nodes.end(), [](const DagNode &n) {
    return n.kind == DagNode::Kind::Binary && n.op == '/';
  });
}

bool ElementwiseDag::isTileValued(int id) const {
  const DagNode &n = nodes[id];
  if (n.kind == DagNode::Kind::Input)
    return true;
  if (n.kind != DagNode::Kind::Binary)
    return false;
  return isTileValued(n.lhs) || isTileValued(n.rhs);
}

std::string ElementwiseDag::str() const {
  std::function<std::string(int)> render = [&](int id) -> std::string {
    const DagNode &n = nodes[id];
    switch (n.kind) {
    case DagNode::Kind::Input:
      return inputs[n.index].name;
    case DagNode::Kind::Scalar:
      return scalars[n.index].name;
    case DagNode::Kind::Constant: {
      char buf[32];
      auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), n.value);
      return std::string(buf, end);
    }
    case DagNode::Kind::Binary: {
      const char *name = n.op == '+'   ? "add"
                         : n.op == '-' ? "sub"
                         : n.op == '*' ? "mul"
                                       : "div";
      return std::string(name) + "(" + render(n.lhs) + ", " + render(n.rhs) + ")";
    }
    }
    return "";
  };
  return output.name + " = " + (root < 0 ? std::string("<none>") : render(root));
}

float ElementwiseDag::evaluate(const std::vector<float> &inputValues,
                               const std::vector<float> &scalarValues) const {
  std::vector<float> v(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const DagNode &n = nodes[i];
    switch (n.kind) {
    case DagNode::Kind::Input:
      v[i] = inputValues[n.index];
      break;
    case DagNode::Kind::Scalar:
      v[i] = scalarValues[n.index];
      break;
    case DagNode::Kind::Constant:
      v[i] = n.value;
      break;
    case DagNode::Kind::Binary: {
      float a = v[n.lhs], b = v[n.rhs];
      v[i] = n.op == '+' ? a + b : n.op == '-' ? a - b : n.op == '*' ? a * b : a / b;
      break;
    }
    }
  }
  return v[root];
}

namespace {

struct Unsupported {
  std::string reason;
};

class Matcher {
public:
  Matcher(const Function &fn, const Operation &target) : fn(fn), target(target) {}

  ElementwiseDag run();

private:
  [[noreturn]] void reject(const std::string &reason) { throw Unsupported{reason}; }

  std::string operandName(int k) const {
    ValueId outer = target.operands[k];
    const std::vector<ValueId> &args = fn.args();
    auto it = std::find(args.begin(), args.end(), outer);
    if (it != args.end())
      return fn.argNames()[it - args.begin()];
    return "capture" + std::to_string(k);
  }

  /// Operand index of an entry-block argument, or -1.
  int argIndex(ValueId v) const {
    const std::vector<ValueId> &args = target.regions.front().front().args;
    auto it = std::find(args.begin(), args.end(), v);
    return it == args.end() ? -1 : static_cast<int>(it - args.begin());
  }

  int addNode(DagNode node) {
    dag.nodes.push_back(node);
    return static_cast<int>(dag.nodes.size()) - 1;
  }

  int nodeFor(ValueId v);
  int inputFor(ValueId memref);
  void matchLoop(const Operation &loop);

  const Function &fn;
  const Operation &target;
  ElementwiseDag dag;
  std::map<int, MapKind> mapOf;
  std::map<int, std::size_t> mapPos;
  std::map<ValueId, const Operation *> entryDefs;
  std::map<ValueId, int> nodeOf;
  std::map<int, int> scalarNode;
  std::map<int, int> inputNode;
  std::vector<int> inputOperands;
  ValueId iv = 0;
};

int Matcher::nodeFor(ValueId v) {
  auto it = nodeOf.find(v);
  if (it != nodeOf.end())
    return it->second;
  int arg = argIndex(v);
  if (arg >= 0) {
    if (!fn.typeOf(v).isF32())
      reject("captured value '" + operandName(arg) + "' used as an f32 operand");
    auto sit = scalarNode.find(arg);
    if (sit != scalarNode.end())
      return sit->second;
    DagNode n;
    n.kind = DagNode::Kind::Scalar;
    n.index = arg; // Remapped to a scalar slot once all are known.
    int id = addNode(n);
    scalarNode[arg] = id;
    return id;
  }
  auto def = entryDefs.find(v);
  if (def != entryDefs.end() && def->second->is("arith", "constant") &&
      fn.typeOf(v).isF32()) {
    DagNode n;
    n.kind = DagNode::Kind::Constant;
    n.value = static_cast<float>(def->second->getAttr("value")->getFloat());
    int id = addNode(n);
    nodeOf[v] = id;
    return id;
  }
  reject("value %" + std::to_string(v) + " is not elementwise");
}

int Matcher::inputFor(ValueId memref) {
  int arg = argIndex(memref);
  if (arg < 0)
    reject("array access through a value that is not a captured array");
  if (!mapOf.count(arg))
    reject("array '" + operandName(arg) + "' is not mapped");
  return arg;
}

void Matcher::matchLoop(const Operation &loop) {
  auto constantOf = [&](ValueId v) -> std::optional<int64_t> {
    auto it = entryDefs.find(v);
    if (it == entryDefs.end() || !it->second->is("arith", "constant"))
      return std::nullopt;
    return it->second->getIntAttr("value");
  };
  if (constantOf(loop.operands[0]) != 0 || constantOf(loop.operands[2]) != 1)
    reject("loop must run from 0 with unit step");
  ValueId ub = loop.operands[1];
  if (auto c = constantOf(ub)) {
    dag.tripConstant = *c;
  } else {
    auto it = entryDefs.find(ub);
    int arg = -1;
    if (it != entryDefs.end() && it->second->is("arith", "index_cast"))
      arg = argIndex(it->second->operands[0]);
    if (arg < 0 || !fn.typeOf(target.operands[arg]).isI32())
      reject("loop upper bound must be a captured integer or a constant");
    dag.tripOperand = arg;
  }

  const Block &body = loop.regions.front().front();
  iv = body.args[0];
  bool stored = false;
  for (const Operation &op : body.ops) {
    if (stored && !op.is("scf", "yield"))
      reject("'" + op.fullName() + "' after the store");
    if (op.is("scf", "yield"))
      break;
    if (op.is("scf", "for"))
      reject("nested loops");
    if (op.is("memref", "load")) {
      int arg = inputFor(op.operands[0]);
      if (op.operands.size() != 2 || op.operands[1] != iv)
        reject("access to '" + operandName(arg) +
               "' is not indexed by the induction variable");
      if (mapOf[arg] == MapKind::From)
        reject("array '" + operandName(arg) + "' is mapped 'from' but read");
      auto it = inputNode.find(arg);
      if (it == inputNode.end()) {
        DagNode n;
        n.kind = DagNode::Kind::Input;
        n.index = arg;
        it = inputNode.emplace(arg, addNode(n)).first;
      }
      nodeOf[op.results[0]] = it->second;
      continue;
    }
    if (op.is("arith", "constant")) {
      if (fn.typeOf(op.results[0]).isF32()) {
        DagNode n;
        n.kind = DagNode::Kind::Constant;
        n.value = static_cast<float>(op.getAttr("value")->getFloat());
        nodeOf[op.results[0]] = addNode(n);
      }
      continue;
    }
    static const std::map<std::string, char> binops = {
        {"addf", '+'}, {"subf", '-'}, {"mulf", '*'}, {"divf", '/'}};
    if (op.dialect == "arith" && binops.count(op.name)) {
      DagNode n;
      n.kind = DagNode::Kind::Binary;
      n.op = binops.at(op.name);
      n.lhs = nodeFor(op.operands[0]);
      n.rhs = nodeFor(op.operands[1]);
      nodeOf[op.results[0]] = addNode(n);
      continue;
    }
    if (op.is("memref", "store")) {
      int arg = inputFor(op.operands[1]);
      if (op.operands.size() != 3 || op.operands[2] != iv)
        reject("store to '" + operandName(arg) +
               "' is not indexed by the induction variable");
      if (mapOf[arg] == MapKind::To)
        reject("array '" + operandName(arg) + "' is mapped 'to' but written");
      dag.root = nodeFor(op.operands[0]);
      dag.output = {arg, operandName(arg), mapOf[arg]};
      stored = true;
      continue;
    }
    reject("'" + op.fullName() + "' in the loop body");
  }
  if (!stored)
    reject("loop stores no array element");
}

ElementwiseDag Matcher::run() {
  static const std::pair<const char *, MapKind> lists[] = {
      {"map_to", MapKind::To}, {"map_tofrom", MapKind::ToFrom}, {"map_from", MapKind::From}};
  std::vector<int> bufferOrder;
  for (auto [key, kind] : lists) {
    const Attribute *attr = target.getAttr(key);
    if (!attr)
      continue;
    std::vector<int64_t> indices = *getIntArray(*attr);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      mapOf[static_cast<int>(indices[i])] = kind;
      mapPos[static_cast<int>(indices[i])] = bufferOrder.size();
      bufferOrder.push_back(static_cast<int>(indices[i]));
    }
  }

  const Region &region = target.regions.front();
  const Operation *loop = nullptr;
  for (const Operation &op : region.front().ops) {
    if (op.is("scf", "for")) {
      if (loop)
        reject("more than one loop in the region");
      loop = &op;
      continue;
    }
    if (op.is("arith", "constant") || op.is("arith", "index_cast")) {
      entryDefs[op.results[0]] = &op;
      continue;
    }
    if (op.dialect == "ftn")
      reject("region still contains '" + op.fullName() + "'");
    reject("'" + op.fullName() + "' outside the loop");
  }
  if (!loop)
    reject("region has no loop");
  matchLoop(*loop);

  // Inputs follow map-list order; remap node indices to slots.
  std::vector<int> inputArgs;
  for (auto &[arg, node] : inputNode)
    inputArgs.push_back(arg);
  std::sort(inputArgs.begin(), inputArgs.end(),
            [&](int a, int b) { return mapPos[a] < mapPos[b]; });
  for (std::size_t i = 0; i < inputArgs.size(); ++i) {
    int arg = inputArgs[i];
    dag.inputs.push_back({arg, operandName(arg), mapOf[arg]});
    dag.nodes[inputNode[arg]].index = static_cast<int>(i);
  }
  int slot = 0;
  for (auto &[arg, node] : scalarNode) {
    dag.scalars.push_back({arg, operandName(arg)});
    dag.nodes[node].index = slot++;
  }
  for (int arg : bufferOrder) {
    if (mapOf[arg] == MapKind::From && arg != dag.output.operand)
      reject("array '" + operandName(arg) + "' is mapped 'from' but never written");
    dag.buffers.push_back({arg, operandName(arg), mapOf[arg]});
  }
  return dag;
}

} // namespace

Result<ElementwiseDag> passes::matchElementwise(const Function &fn,
                                                const Operation &target) {
  try {
    return Matcher(fn, target).run();
  } catch (Unsupported &u) {
    return Diagnostic::error("unsupported offload body: " + u.reason,
                             Location::inFunction(fn.name));
  }
}
