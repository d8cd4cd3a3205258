// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_EXEC_INPUTS_H
#define TENFLOW_EXEC_INPUTS_H

#include "tenflow/Exec/Value.h"

#include <map>
#include <string>
#include <vector>

namespace tenflow::exec {

/// Named inputs for a function, keyed by source-level argument name. Scalars
/// are kept as decimal text and parsed against the argument's type.
struct Inputs {
  std::map<std::string, std::vector<float>> arrays;
  std::map<std::string, std::string> scalars;
};

/// Parses `text` as a value of scalar type `type` (f32, i32, index, i1).
bool parseScalar(const std::string &text, const ir::Type &type, RtValue &out,
                 std::string &error);

} // namespace tenflow::exec

#endif // TENFLOW_EXEC_INPUTS_H
