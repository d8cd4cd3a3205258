// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/IR/IR.h"

namespace tenflow::ir {

const Attribute *Operation::getAttr(const std::string &key) const {
  auto it = attrs.find(key);
  return it == attrs.end() ? nullptr : &it->second;
}

std::optional<int64_t> Operation::getIntAttr(const std::string &key) const {
  const Attribute *attr = getAttr(key);
  if (!attr || !attr->isInteger())
    return std::nullopt;
  return attr->getInt();
}

std::optional<std::string> Operation::getStringAttr(const std::string &key) const {
  const Attribute *attr = getAttr(key);
  if (!attr || !attr->isString())
    return std::nullopt;
  return attr->getString();
}

std::optional<std::string> Operation::getSymbolAttr(const std::string &key) const {
  const Attribute *attr = getAttr(key);
  if (!attr || !attr->isSymbol())
    return std::nullopt;
  return attr->getSymbol().name;
}

ValueId Function::newValue(Type type) {
  valueTypes.push_back(std::move(type));
  return static_cast<ValueId>(valueTypes.size() - 1);
}

std::optional<std::string> Function::kernelKind() const {
  auto it = attrs.find("tt.kernel_kind");
  if (it == attrs.end() || !it->second.isString())
    return std::nullopt;
  return it->second.getString();
}

std::vector<std::string> Function::argNames() const {
  std::vector<std::string> names;
  const std::vector<ValueId> &fnArgs = args();
  auto it = attrs.find("arg_names");
  for (std::size_t i = 0; i < fnArgs.size(); ++i) {
    std::string name = "arg" + std::to_string(i);
    if (it != attrs.end() && it->second.isArray() &&
        i < it->second.getArray().size() && it->second.getArray()[i].isString())
      name = it->second.getArray()[i].getString();
    names.push_back(std::move(name));
  }
  return names;
}

Function *Module::lookup(std::string_view name) {
  for (Function &fn : functions)
    if (fn.name == name)
      return &fn;
  return nullptr;
}

const Function *Module::lookup(std::string_view name) const {
  for (const Function &fn : functions)
    if (fn.name == name)
      return &fn;
  return nullptr;
}

Function makeFunction(std::string name, const std::vector<Type> &argTypes) {
  Function fn;
  fn.name = std::move(name);
  fn.body.blocks.emplace_back();
  for (const Type &t : argTypes)
    fn.body.blocks.front().args.push_back(fn.newValue(t));
  return fn;
}

void walkOps(const Region &region,
             const std::function<void(const Operation &)> &fn) {
  for (const Block &block : region.blocks) {
    for (const Operation &op : block.ops) {
      fn(op);
      for (const Region &nested : op.regions)
        walkOps(nested, fn);
    }
  }
}

void walkOps(const Function &fn,
             const std::function<void(const Operation &)> &callback) {
  walkOps(fn.body, callback);
}

void walkOps(const Module &module,
             const std::function<void(const Operation &)> &fn) {
  for (const Function &f : module.functions)
    walkOps(f.body, fn);
}

std::size_t countOps(const Module &module, std::string_view dialect) {
  std::size_t n = 0;
  walkOps(module, [&](const Operation &op) {
    if (op.dialect == dialect)
      ++n;
  });
  return n;
}

std::size_t countOps(const Module &module, std::string_view dialect,
                     std::string_view name) {
  std::size_t n = 0;
  walkOps(module, [&](const Operation &op) {
    if (op.is(dialect, name))
      ++n;
  });
  return n;
}

} // namespace tenflow::ir
