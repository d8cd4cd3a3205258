// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_IR_PRINTER_H
#define TENFLOW_IR_PRINTER_H

#include "tenflow/IR/IR.h"

#include <string>
#include <unordered_map>

namespace tenflow::ir {

/// Textual names for the values of one function: `%argN` for function
/// arguments and `%N` for everything else, numbered in textual definition
/// order.
class ValueNames {
public:
  explicit ValueNames(const Function &fn);

  /// `%arg0`, `%3`, or `<<invalid>>` for ids the function never defines.
  std::string name(ValueId v) const;
  /// Bare number for non-argument values, -1 otherwise.
  int number(ValueId v) const;
  bool isArgument(ValueId v) const;

private:
  std::unordered_map<ValueId, int> numbers;
  std::unordered_map<ValueId, int> argNumbers;
};

std::string printModule(const Module &module);
std::string printFunction(const Function &fn);

} // namespace tenflow::ir

#endif // TENFLOW_IR_PRINTER_H
