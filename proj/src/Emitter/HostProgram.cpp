// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Emitter/HostProgram.h"

#include "tenflow/Dialects/RuntimeAbi.h"

#include <map>

using namespace tenflow;
using namespace tenflow::emitter;
using namespace tenflow::exec;
using namespace tenflow::ir;

std::string CallArg::str() const {
  switch (kind) {
  case Kind::Int:
    return std::to_string(i);
  case Kind::Float:
    return formatF32(f);
  case Kind::Array:
    return "data:" + array;
  case Kind::Unknown:
    return "?";
  }
  return "?";
}

std::string RuntimeCall::str() const {
  std::string out = "CALL " + abi;
  // set_runtime_args names its kernel right after the core id;
  // create_kernel takes it last.
  std::size_t kernelPos = abi == "tt_rt_set_runtime_args" ? 1 : args.size();
  for (std::size_t i = 0; i <= args.size(); ++i) {
    if (kernel && i == kernelPos)
      out += " @" + *kernel;
    if (i < args.size())
      out += " " + args[i].str();
  }
  return out;
}

std::string HostProgram::trace() const {
  std::string out;
  for (const RuntimeCall &call : calls)
    out += call.str() + "\n";
  return out;
}

const Function *emitter::hostEntry(const Module &module) {
  for (const Function &fn : module.functions)
    if (!fn.isDeviceFunction())
      return &fn;
  return nullptr;
}

Result<HostProgram> emitter::emitHostProgram(const Module &module, const Inputs &inputs,
                                             const HostEmitOptions &options) {
  HostProgram program;
  const Function *fn = hostEntry(module);
  if (!fn)
    return program;
  program.function = fn->name;
  Location loc = Location::inFunction(fn->name);
  auto fail = [&](const std::string &msg) {
    return Result<HostProgram>(Diagnostic::error(msg, loc));
  };

  std::vector<RtValue> env(fn->valueTypes.size());
  std::vector<std::string> names = fn->argNames();
  // Array slot -> (name, bound length if known).
  std::vector<std::pair<std::string, std::optional<std::size_t>>> arrays;
  for (std::size_t i = 0; i < fn->args().size(); ++i) {
    ValueId arg = fn->args()[i];
    const Type &t = fn->typeOf(arg);
    const std::string &name = names[i];
    if (t.isMemRef()) {
      auto it = inputs.arrays.find(name);
      if (it == inputs.arrays.end() && !options.allowUnbound)
        return fail("missing input binding for array '" + name + "'");
      std::optional<std::size_t> len;
      if (it != inputs.arrays.end())
        len = it->second.size();
      env[arg] = RtValue::ofArray(static_cast<int>(arrays.size()));
      arrays.emplace_back(name, len);
      continue;
    }
    auto it = inputs.scalars.find(name);
    if (it == inputs.scalars.end()) {
      if (!options.allowUnbound)
        return fail("missing input binding for scalar '" + name + "'");
      continue;
    }
    std::string err;
    if (!parseScalar(it->second, t, env[arg], err))
      return fail("binding for '" + name + "': " + err);
  }

  // Buffer id -> size in bytes (if known).
  std::map<int64_t, std::optional<int64_t>> buffers;
  int64_t nextBuffer = 0;
  bool deviceOpen = false;

  for (const Operation &op : fn->entry().ops) {
    if (op.is("func", "return"))
      break;
    if (op.dialect == "arith") {
      std::vector<RtValue> operands;
      for (ValueId v : op.operands)
        operands.push_back(env[v]);
      std::string err;
      if (!evalArith(op, operands, fn->typeOf(op.results[0]), env[op.results[0]], err))
        return fail(err);
      continue;
    }
    std::optional<std::string> callee =
        op.is("func", "call") ? op.getSymbolAttr("callee") : std::nullopt;
    if (!callee || !dialects::lookupRuntimeFunction(*callee))
      return fail("host program may only contain runtime calls and integer "
                  "arithmetic, found '" +
                  op.fullName() + (callee ? " @" + *callee : std::string()) + "'");

    RuntimeCall call;
    call.abi = *callee;
    call.kernel = op.getSymbolAttr("kernel");
    for (ValueId v : op.operands) {
      const RtValue &value = env[v];
      switch (value.kind) {
      case RtValue::Kind::Int:
        call.args.push_back(CallArg::ofInt(value.i));
        break;
      case RtValue::Kind::Float:
        call.args.push_back(CallArg::ofFloat(value.f));
        break;
      case RtValue::Kind::Array:
        call.args.push_back(CallArg::ofArray(arrays[value.array].first));
        break;
      default:
        call.args.push_back(CallArg());
        break;
      }
    }

    const std::string &abi = call.abi;
    if (abi != "tt_rt_open_device" && !deviceOpen)
      return fail("'" + abi + "' called before tt_rt_open_device");
    if (abi == "tt_rt_open_device") {
      deviceOpen = true;
      env[op.results[0]] = RtValue::ofInt(0);
    } else if (abi == "tt_rt_close_device") {
      deviceOpen = false;
    } else if (abi == "tt_rt_create_buffer") {
      std::optional<int64_t> bytes;
      if (call.args[0].kind == CallArg::Kind::Int)
        bytes = call.args[0].i;
      buffers[nextBuffer] = bytes;
      env[op.results[0]] = RtValue::ofInt(nextBuffer++);
    } else if (abi == "tt_rt_write_buffer" || abi == "tt_rt_read_buffer") {
      const CallArg &id = call.args[0];
      if (id.kind == CallArg::Kind::Int) {
        auto it = buffers.find(id.i);
        if (it == buffers.end())
          return fail("'" + abi + "' uses buffer " + std::to_string(id.i) +
                      " before it is created");
        const RtValue &payload = env[op.operands[1]];
        const auto &[name, len] = arrays[payload.array];
        if (it->second && len && static_cast<int64_t>(*len) * 4 < *it->second)
          return fail("payload length mismatch for '" + name + "': buffer " +
                      std::to_string(id.i) + " holds " +
                      std::to_string(*it->second / 4) + " elements but the array has " +
                      std::to_string(*len));
      }
    } else if (!op.results.empty()) {
      env[op.results[0]] = RtValue();
    }
    program.calls.push_back(std::move(call));
  }
  return program;
}
