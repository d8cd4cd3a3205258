// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_PASSES_PIPELINE_H
#define TENFLOW_PASSES_PIPELINE_H

#include "tenflow/IR/IR.h"
#include "tenflow/Support/DeviceConfig.h"
#include "tenflow/Support/Diagnostic.h"

#include <set>
#include <string>
#include <vector>

namespace tenflow::passes {

/// Pass names accepted by runPipeline, in default order.
const std::vector<std::string> &defaultPipeline();
bool isKnownPass(const std::string &name);

struct PassPipeline {
  std::vector<std::string> passes;
  /// Pass names whose output is captured; "all" captures every pass.
  std::set<std::string> dumpAfter;

  bool dumps(const std::string &pass) const {
    return dumpAfter.count("all") || dumpAfter.count(pass);
  }
};

struct PassDump {
  std::string pass;
  std::string text;
};

struct PipelineResult {
  ir::Module module;
  std::vector<PassDump> dumps;
};

/// Verifies the input, then runs each pass and verifies its output. The
/// first failure aborts with a diagnostic naming the pass.
Result<PipelineResult> runPipeline(const ir::Module &module,
                                   const PassPipeline &pipeline,
                                   const DeviceConfig &config);

} // namespace tenflow::passes

#endif // TENFLOW_PASSES_PIPELINE_H
