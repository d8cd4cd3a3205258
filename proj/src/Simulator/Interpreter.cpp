// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Simulator/Interpreter.h"

#include "tenflow/Emitter/HostProgram.h"

using namespace tenflow;
using namespace tenflow::exec;
using namespace tenflow::ir;
using namespace tenflow::sim;

namespace {

struct InterpFailure {
  std::string message;
};

class Interpreter {
public:
  explicit Interpreter(const Function &fn) : fn(fn), env(fn.valueTypes.size()) {}

  Result<ArrayStore> run(const Inputs &inputs);

private:
  void runBlock(const Block &block, int region, int blockIndex);
  /// Returns false when the op terminates its block.
  bool exec(const Operation &op);
  void loop(const Operation &op, int64_t lb, int64_t step, int64_t trips);
  float &element(const Operation &op, ValueId memref, int64_t index, bool oneBased);

  const Function &fn;
  std::vector<RtValue> env;
  std::vector<std::pair<std::string, std::vector<float>>> arrays;
  std::vector<OpPathStep> path;
};

Result<ArrayStore> Interpreter::run(const Inputs &inputs) {
  std::vector<std::string> names = fn.argNames();
  for (std::size_t i = 0; i < fn.args().size(); ++i) {
    ValueId arg = fn.args()[i];
    const Type &t = fn.typeOf(arg);
    Location loc = Location::inFunction(fn.name);
    if (t.isMemRef()) {
      auto it = inputs.arrays.find(names[i]);
      if (it == inputs.arrays.end())
        return Diagnostic::error("missing input binding for array '" + names[i] + "'", loc);
      env[arg] = RtValue::ofArray(static_cast<int>(arrays.size()));
      arrays.emplace_back(names[i], it->second);
      continue;
    }
    auto it = inputs.scalars.find(names[i]);
    if (it == inputs.scalars.end())
      return Diagnostic::error("missing input binding for scalar '" + names[i] + "'", loc);
    std::string err;
    if (!parseScalar(it->second, t, env[arg], err))
      return Diagnostic::error("binding for '" + names[i] + "': " + err, loc);
  }
  try {
    runBlock(fn.entry(), 0, 0);
  } catch (InterpFailure &f) {
    return Diagnostic::error(f.message, Location::inFunction(fn.name, path));
  }
  ArrayStore out;
  for (auto &[name, data] : arrays)
    out[name] = std::move(data);
  return out;
}

void Interpreter::runBlock(const Block &block, int region, int blockIndex) {
  path.push_back({region, blockIndex, 0});
  for (std::size_t i = 0; i < block.ops.size(); ++i) {
    path.back().op = static_cast<int>(i);
    if (!exec(block.ops[i]))
      break;
  }
  path.pop_back();
}

float &Interpreter::element(const Operation &op, ValueId memref, int64_t index,
                            bool oneBased) {
  const RtValue &ref = env[memref];
  if (ref.kind != RtValue::Kind::Array)
    throw InterpFailure{"'" + op.fullName() + "' on a value that is not an array"};
  auto &[name, data] = arrays[ref.array];
  int64_t i = oneBased ? index - 1 : index;
  if (i < 0 || i >= static_cast<int64_t>(data.size()))
    throw InterpFailure{"out-of-bounds access: index " + std::to_string(index) +
                        " into array '" + name + "' of " + std::to_string(data.size()) +
                        " elements"};
  return data[i];
}

void Interpreter::loop(const Operation &op, int64_t lb, int64_t step, int64_t trips) {
  const Block &body = op.regions.front().front();
  int64_t iv = lb;
  for (int64_t t = 0; t < trips; ++t, iv += step) {
    env[body.args[0]] = RtValue::ofInt(iv);
    runBlock(body, 0, 0);
  }
}

bool Interpreter::exec(const Operation &op) {
  auto in = [&](std::size_t i) -> const RtValue & { return env[op.operands[i]]; };

  if (op.dialect == "arith") {
    std::vector<RtValue> operands;
    for (ValueId v : op.operands)
      operands.push_back(env[v]);
    std::string err;
    if (!evalArith(op, operands, fn.typeOf(op.results[0]), env[op.results[0]], err))
      throw InterpFailure{err};
    return true;
  }
  if (op.is("scf", "for")) {
    int64_t lb = in(0).i, ub = in(1).i, step = in(2).i;
    if (step <= 0)
      throw InterpFailure{"scf.for step must be positive"};
    loop(op, lb, step, ub > lb ? (ub - lb + step - 1) / step : 0);
    return true;
  }
  if (op.is("ftn", "do_loop")) {
    int64_t lb = in(0).i, ub = in(1).i, step = in(2).i;
    if (step == 0)
      throw InterpFailure{"do loop step must not be zero"};
    loop(op, lb, step, std::max<int64_t>(0, (ub - lb + step) / step));
    return true;
  }
  if (op.is("ftn", "subroutine")) {
    runBlock(op.regions.front().front(), 0, 0);
    return true;
  }
  if (op.is("offload", "target")) {
    const Block &body = op.regions.front().front();
    for (std::size_t i = 0; i < body.args.size(); ++i)
      env[body.args[i]] = in(i);
    runBlock(body, 0, 0);
    return true;
  }
  if (op.is("ftn", "load") || op.is("memref", "load")) {
    env[op.results[0]] =
        RtValue::ofFloat(element(op, op.operands[0], in(1).i, op.dialect == "ftn"));
    return true;
  }
  if (op.is("ftn", "store") || op.is("memref", "store")) {
    element(op, op.operands[1], in(2).i, op.dialect == "ftn") = in(0).f;
    return true;
  }
  if (op.is("memref", "dim")) {
    const RtValue &ref = in(0);
    env[op.results[0]] =
        RtValue::ofInt(static_cast<int64_t>(arrays.at(ref.array).second.size()));
    return true;
  }
  if (op.is("memref", "alloc")) {
    int64_t n = op.operands.empty() ? 0 : in(0).i;
    if (n < 0)
      throw InterpFailure{"negative allocation size"};
    env[op.results[0]] = RtValue::ofArray(static_cast<int>(arrays.size()));
    arrays.emplace_back("%alloc" + std::to_string(op.results[0]), std::vector<float>(n));
    return true;
  }
  if (op.is("ftn", "end") || op.is("scf", "yield") || op.is("func", "return"))
    return false;
  throw InterpFailure{"'" + op.fullName() + "' is not supported by the reference interpreter"};
}

} // namespace

Result<ArrayStore> sim::interpretStd(const Module &module, const Inputs &inputs) {
  const Function *fn = emitter::hostEntry(module);
  if (!fn)
    return Diagnostic::error("module has no host function");
  Result<ArrayStore> result = Interpreter(*fn).run(inputs);
  if (!result)
    return result;
  // Scratch allocations are not part of the observable result.
  for (auto it = result->begin(); it != result->end();)
    it = it->first.starts_with("%alloc") ? result->erase(it) : std::next(it);
  return result;
}
