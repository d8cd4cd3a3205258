// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Passes/Pipeline.h"

#include "tenflow/Dialects/Builtin.h"
#include "tenflow/IR/Printer.h"
#include "tenflow/IR/Verifier.h"
#include "tenflow/Passes/Passes.h"

using namespace tenflow;
using namespace tenflow::ir;
using namespace tenflow::passes;

const std::vector<std::string> &passes::defaultPipeline() {
  static const std::vector<std::string> names = {"ftn_to_std", "offload_to_tt",
                                                 "host_to_runtime"};
  return names;
}

bool passes::isKnownPass(const std::string &name) {
  const auto &names = defaultPipeline();
  return std::find(names.begin(), names.end(), name) != names.end();
}

static DiagnosticList prefixed(const std::string &prefix, DiagnosticList diags) {
  for (Diagnostic &d : diags)
    d.message = prefix + d.message;
  return diags;
}

Result<PipelineResult> passes::runPipeline(const Module &module,
                                           const PassPipeline &pipeline,
                                           const DeviceConfig &config) {
  DiagnosticList unknown;
  for (const std::string &name : pipeline.passes)
    if (!isKnownPass(name))
      unknown.push_back(Diagnostic::error("unknown pass '" + name + "'"));
  for (const std::string &name : pipeline.dumpAfter)
    if (name != "all" && !isKnownPass(name))
      unknown.push_back(Diagnostic::error("unknown pass '" + name + "' in dump request"));
  if (!unknown.empty())
    return unknown;

  const DialectRegistry &registry = dialects::builtinRegistry();
  DiagnosticList inputErrors = verify(module, registry);
  if (hasErrors(inputErrors))
    return prefixed("input module: ", std::move(inputErrors));

  PipelineResult result{module, {}};
  for (const std::string &name : pipeline.passes) {
    Result<Module> next = name == "ftn_to_std"      ? ftnToStd(result.module)
                          : name == "offload_to_tt" ? offloadToTt(result.module, config)
                                                    : hostToRuntime(result.module);
    if (!next)
      return prefixed("pass '" + name + "' failed: ", next.takeDiagnostics());
    DiagnosticList errors = verify(*next, registry);
    if (hasErrors(errors))
      return prefixed("pass '" + name + "' produced invalid IR: ", std::move(errors));
    result.module = std::move(next.value());
    if (pipeline.dumps(name))
      result.dumps.push_back({name, printModule(result.module)});
  }
  return result;
}
