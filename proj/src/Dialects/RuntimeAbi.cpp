// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Dialects/RuntimeAbi.h"

namespace tenflow::dialects {

using ir::TypeConstraint;

const std::vector<RuntimeFunction> &runtimeAbi() {
  static const std::vector<RuntimeFunction> table = {
      {"tt_rt_open_device", {}, false, TypeConstraint::I32, false},
      {"tt_rt_create_buffer", {TypeConstraint::I32}, false, TypeConstraint::I32, false},
      {"tt_rt_write_buffer", {TypeConstraint::I32, TypeConstraint::MemRef}, false,
       std::nullopt, false},
      {"tt_rt_read_buffer", {TypeConstraint::I32, TypeConstraint::MemRef}, false,
       std::nullopt, false},
      {"tt_rt_create_cb",
       {TypeConstraint::I32, TypeConstraint::I32, TypeConstraint::I32},
       false,
       std::nullopt,
       false},
      {"tt_rt_create_kernel", {TypeConstraint::I32, TypeConstraint::I32}, false,
       std::nullopt, true},
      {"tt_rt_set_runtime_args", {TypeConstraint::I32, TypeConstraint::RuntimeArg},
       true, std::nullopt, true},
      {"tt_rt_launch", {}, false, std::nullopt, false},
      {"tt_rt_wait", {}, false, std::nullopt, false},
      {"tt_rt_close_device", {}, false, std::nullopt, false},
  };
  return table;
}

const RuntimeFunction *lookupRuntimeFunction(std::string_view name) {
  for (const RuntimeFunction &fn : runtimeAbi())
    if (fn.name == name)
      return &fn;
  return nullptr;
}

std::optional<KernelKind> parseKernelKind(std::string_view text) {
  if (text == "reader")
    return KernelKind::Reader;
  if (text == "compute")
    return KernelKind::Compute;
  if (text == "writer")
    return KernelKind::Writer;
  return std::nullopt;
}

const char *kernelKindName(KernelKind kind) {
  switch (kind) {
  case KernelKind::Reader:
    return "reader";
  case KernelKind::Compute:
    return "compute";
  case KernelKind::Writer:
    return "writer";
  }
  return "?";
}

} // namespace tenflow::dialects
