// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Driver/Driver.h"

#include "tenflow/Emitter/HostProgram.h"
#include "tenflow/Frontend/Lowering.h"
#include "tenflow/IR/Parser.h"
#include "tenflow/Simulator/Interpreter.h"

#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

using namespace tenflow;
using namespace tenflow::driver;
using namespace tenflow::ir;

InputKind driver::inputKindFor(const std::string &path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".tir") == 0 ? InputKind::Tir
                                                                           : InputKind::Fortran;
}

bool Compilation::hasOffload() const { return countOps(initial, "offload") > 0; }

bool Compilation::hasKernels() const {
  for (const Function &fn : lowered.module.functions)
    if (fn.isDeviceFunction())
      return true;
  return false;
}

Result<Compilation> driver::compile(std::string_view text, InputKind kind,
                                    const passes::PassPipeline &pipeline,
                                    const DeviceConfig &config) {
  Result<Module> initial =
      kind == InputKind::Tir ? parseModule(text) : frontend::compileFortran(text);
  if (!initial)
    return initial.takeDiagnostics();
  Result<passes::PipelineResult> lowered = passes::runPipeline(*initial, pipeline, config);
  if (!lowered)
    return lowered.takeDiagnostics();
  return Compilation{std::move(*initial), std::move(*lowered)};
}

Result<std::vector<float>> driver::readF32File(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return Diagnostic::error("cannot open '" + path + "'");
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() % 4 != 0)
    return Diagnostic::error("'" + path + "' holds " + std::to_string(bytes.size()) +
                             " bytes, not a whole number of f32 values");
  std::vector<float> data(bytes.size() / 4);
  if (!bytes.empty())
    std::memcpy(data.data(), bytes.data(), bytes.size());
  return data;
}

bool driver::writeF32File(const std::string &path, const std::vector<float> &data) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char *>(data.data()),
            static_cast<std::streamsize>(data.size() * 4));
  return static_cast<bool>(out);
}

static Result<std::vector<float>> parseList(const std::string &text) {
  std::string body = text.substr(1, text.size() - 2);
  std::vector<float> values;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      if (values.empty() && ss.eof())
        break;
      return Diagnostic::error("empty element in list '" + text + "'");
    }
    item = item.substr(b, e - b + 1);
    exec::RtValue v;
    std::string err;
    if (!exec::parseScalar(item, Type::f32(), v, err))
      return Diagnostic::error("in list '" + text + "': " + err);
    values.push_back(v.f);
  }
  return values;
}

Result<exec::Inputs> driver::parseBindings(const std::vector<std::string> &specs,
                                           const Module &module) {
  exec::Inputs inputs;
  const Function *host = emitter::hostEntry(module);
  std::vector<std::string> names;
  if (host)
    names = host->argNames();
  DiagnosticList diags;
  for (const std::string &spec : specs) {
    std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
      diags.push_back(Diagnostic::error("binding '" + spec + "' is not of the form name=value"));
      continue;
    }
    std::string name = spec.substr(0, eq), value = spec.substr(eq + 1);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      diags.push_back(Diagnostic::error("binding for unknown argument '" + name + "'"));
      continue;
    }
    if (inputs.arrays.count(name) || inputs.scalars.count(name)) {
      diags.push_back(Diagnostic::error("argument '" + name + "' is bound twice"));
      continue;
    }
    const Type &type = host->typeOf(host->args()[it - names.begin()]);
    if (type.isMemRef()) {
      Result<std::vector<float>> data = Diagnostic::error("");
      if (!value.empty() && value.front() == '@')
        data = readF32File(value.substr(1));
      else if (value.size() >= 2 && value.front() == '[' && value.back() == ']')
        data = parseList(value);
      else
        data = Diagnostic::error("array '" + name + "' must be bound to @file or [list]");
      if (!data) {
        for (const Diagnostic &d : data.diagnostics())
          diags.push_back(d);
        continue;
      }
      inputs.arrays[name] = std::move(*data);
      continue;
    }
    exec::RtValue parsed;
    std::string err;
    if (!exec::parseScalar(value, type, parsed, err)) {
      diags.push_back(Diagnostic::error("binding for '" + name + "': " + err));
      continue;
    }
    inputs.scalars[name] = value;
  }
  if (!diags.empty())
    return diags;
  return inputs;
}

std::string Mismatch::str() const {
  return "mismatch in '" + array + "' at index " + std::to_string(index) + ": expected " +
         exec::formatF32(expected) + ", got " + exec::formatF32(actual);
}

std::optional<Mismatch> driver::firstMismatch(const sim::ArrayStore &expected,
                                              const sim::ArrayStore &actual) {
  for (const auto &[name, want] : expected) {
    auto it = actual.find(name);
    if (it == actual.end())
      return Mismatch{name, 0, want.empty() ? 0.0f : want[0], 0.0f};
    const std::vector<float> &got = it->second;
    std::size_t n = std::max(want.size(), got.size());
    for (std::size_t i = 0; i < n; ++i) {
      float w = i < want.size() ? want[i] : 0.0f, g = i < got.size() ? got[i] : 0.0f;
      if (i >= want.size() || i >= got.size() || std::memcmp(&w, &g, sizeof(float)) != 0)
        return Mismatch{name, i, w, g};
    }
  }
  return std::nullopt;
}

Result<sim::HostRun> driver::runOnDevice(const Compilation &compilation,
                                         const exec::Inputs &inputs,
                                         const DeviceConfig &config, sim::TraceSink *trace) {
  Result<emitter::HostProgram> program =
      emitter::emitHostProgram(compilation.lowered.module, inputs);
  if (!program)
    return program.takeDiagnostics();
  return sim::replayHost(*program, compilation.lowered.module, config, inputs.arrays, trace);
}

Result<CheckOutcome> driver::check(const Compilation &compilation, const exec::Inputs &inputs,
                                   const DeviceConfig &config, sim::TraceSink *trace) {
  Result<sim::ArrayStore> reference = sim::interpretStd(compilation.initial, inputs);
  if (!reference)
    return reference.takeDiagnostics();
  CheckOutcome outcome;
  outcome.reference = std::move(*reference);
  if (!compilation.hasOffload())
    return outcome;
  Result<sim::HostRun> device = runOnDevice(compilation, inputs, config, trace);
  if (!device)
    return device.takeDiagnostics();
  outcome.device = std::move(*device);
  if (outcome.device->ok())
    outcome.mismatch = firstMismatch(outcome.reference, outcome.device->arrays);
  return outcome;
}

ExitCode driver::exitCodeFor(const CheckOutcome &outcome) {
  if (outcome.device && !outcome.device->ok())
    return outcome.device->status == sim::RunStatus::Error ? kExitDiagnostics
                                                           : kExitDeviceFailure;
  return outcome.mismatch ? kExitMismatch : kExitOk;
}
