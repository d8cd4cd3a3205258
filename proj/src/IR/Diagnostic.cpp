// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Support/Diagnostic.h"

#include <sstream>

namespace tenflow {

std::string Location::str() const {
  std::ostringstream os;
  if (!function.empty()) {
    os << '@' << function;
    for (const OpPathStep &step : path)
      os << ":r" << step.region << ".b" << step.block << ".op" << step.op;
  }
  if (line > 0) {
    if (!function.empty())
      os << ' ';
    os << "line " << line;
    if (column > 0)
      os << ", col " << column;
  }
  return os.str();
}

std::string Diagnostic::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Diagnostic &diag) {
  os << (diag.severity == Severity::Error ? "error" : "warning");
  if (!diag.location.empty())
    os << " at " << diag.location.str();
  return os << ": " << diag.message;
}

} // namespace tenflow
