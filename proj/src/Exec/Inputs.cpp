// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Exec/Inputs.h"

#include <cerrno>
#include <cstdlib>

using namespace tenflow;
using namespace tenflow::exec;

bool exec::parseScalar(const std::string &text, const ir::Type &type, RtValue &out,
                       std::string &error) {
  const char *begin = text.c_str();
  char *end = nullptr;
  errno = 0;
  if (type.isF32()) {
    float v = std::strtof(begin, &end);
    if (end == begin || *end != '\0') {
      error = "'" + text + "' is not a valid f32";
      return false;
    }
    out = RtValue::ofFloat(v);
    return true;
  }
  long long v = std::strtoll(begin, &end, 10);
  if (end == begin || *end != '\0' || errno == ERANGE) {
    error = "'" + text + "' is not a valid integer";
    return false;
  }
  if (type.isI32() && (v < INT32_MIN || v > INT32_MAX)) {
    error = "'" + text + "' does not fit in i32";
    return false;
  }
  out = RtValue::ofInt(wrapInteger(v, type));
  return true;
}
