// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_IR_IR_H
#define TENFLOW_IR_IR_H

#include "tenflow/IR/Attribute.h"
#include "tenflow/IR/Type.h"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tenflow::ir {

/// Index into the owning Function's value table. Values never cross function
/// boundaries, so a function (and a module) is a plain value type that can be
/// copied and compared.
using ValueId = uint32_t;

struct Region;

struct Operation {
  std::string dialect;
  std::string name;
  std::vector<ValueId> operands;
  std::vector<ValueId> results;
  AttrMap attrs;
  std::vector<Region> regions;

  Operation() = default;
  Operation(std::string dialect, std::string name)
      : dialect(std::move(dialect)), name(std::move(name)) {}

  std::string fullName() const { return dialect + "." + name; }
  bool is(std::string_view d, std::string_view n) const {
    return dialect == d && name == n;
  }

  bool hasAttr(const std::string &key) const { return attrs.count(key) != 0; }
  const Attribute *getAttr(const std::string &key) const;
  std::optional<int64_t> getIntAttr(const std::string &key) const;
  std::optional<std::string> getStringAttr(const std::string &key) const;
  std::optional<std::string> getSymbolAttr(const std::string &key) const;
};

struct Block {
  std::vector<ValueId> args;
  std::vector<Operation> ops;
};

struct Region {
  std::vector<Block> blocks;

  bool empty() const { return blocks.empty(); }
  Block &front() { return blocks.front(); }
  const Block &front() const { return blocks.front(); }
};

/// A `func.func`: symbol, typed arguments, optional single result type,
/// attributes, and a body region. Owns the type table for every value defined
/// inside it.
struct Function {
  std::string name;
  std::optional<Type> resultType;
  AttrMap attrs;
  Region body;
  std::vector<Type> valueTypes;

  /// Allocates a fresh value of the given type.
  ValueId newValue(Type type);
  const Type &typeOf(ValueId v) const { return valueTypes.at(v); }
  bool isValidValue(ValueId v) const { return v < valueTypes.size(); }

  /// Arguments live in the entry block of the body.
  const std::vector<ValueId> &args() const { return body.front().args; }
  Block &entry() { return body.front(); }
  const Block &entry() const { return body.front(); }

  /// Returns the `tt.kernel_kind` attribute when present.
  std::optional<std::string> kernelKind() const;
  bool isDeviceFunction() const { return kernelKind().has_value(); }

  /// Source-level argument names (`arg_names` attribute), falling back to
  /// `argN`.
  std::vector<std::string> argNames() const;
};

struct Module {
  std::vector<Function> functions;
  AttrMap attrs;

  Function *lookup(std::string_view name);
  const Function *lookup(std::string_view name) const;
};

/// Creates a function with an entry block holding one argument per type.
Function makeFunction(std::string name, const std::vector<Type> &argTypes);

//===----------------------------------------------------------------------===//
// Traversal helpers
//===----------------------------------------------------------------------===//

/// Pre-order walk over every op in a region tree.
void walkOps(const Region &region,
             const std::function<void(const Operation &)> &fn);
void walkOps(const Function &fn,
             const std::function<void(const Operation &)> &callback);
void walkOps(const Module &module,
             const std::function<void(const Operation &)> &fn);

/// Counts ops by dialect name over the whole module.
std::size_t countOps(const Module &module, std::string_view dialect);
std::size_t countOps(const Module &module, std::string_view dialect,
                     std::string_view name);

} // namespace tenflow::ir

#endif // TENFLOW_IR_IR_H
