// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/IR/OpSpec.h"

#include <set>

namespace tenflow::ir {

bool satisfies(const Type &type, TypeConstraint constraint) {
  switch (constraint) {
  case TypeConstraint::Any:
    return true;
  case TypeConstraint::F32:
    return type.isF32();
  case TypeConstraint::I32:
    return type.isI32();
  case TypeConstraint::I1:
    return type.isI1();
  case TypeConstraint::Index:
    return type.isIndex();
  case TypeConstraint::AnyInt:
    return type.isI32() || type.isIndex();
  case TypeConstraint::Scalar:
    return type.isF32() || type.isInteger();
  case TypeConstraint::RuntimeArg:
    return type.isI32() || type.isF32();
  case TypeConstraint::MemRef:
    return type.isMemRef();
  case TypeConstraint::Tile:
    return type.isTile();
  }
  return false;
}

const char *describe(TypeConstraint constraint) {
  switch (constraint) {
  case TypeConstraint::Any:
    return "any type";
  case TypeConstraint::F32:
    return "f32";
  case TypeConstraint::I32:
    return "i32";
  case TypeConstraint::I1:
    return "i1";
  case TypeConstraint::Index:
    return "index";
  case TypeConstraint::AnyInt:
    return "i32 or index";
  case TypeConstraint::Scalar:
    return "scalar";
  case TypeConstraint::RuntimeArg:
    return "i32 or f32";
  case TypeConstraint::MemRef:
    return "memref";
  case TypeConstraint::Tile:
    return "tile";
  }
  return "?";
}

void DialectRegistry::addOp(OpSpec spec) {
  auto key = std::make_pair(spec.dialect, spec.name);
  specs.insert_or_assign(std::move(key), std::move(spec));
}

void DialectRegistry::addRule(std::string id, OpRule rule) {
  rules.insert_or_assign(std::move(id), std::move(rule));
}

const OpSpec *DialectRegistry::lookup(const std::string &dialect,
                                      const std::string &name) const {
  auto it = specs.find({dialect, name});
  return it == specs.end() ? nullptr : &it->second;
}

const OpRule *DialectRegistry::rule(const std::string &id) const {
  auto it = rules.find(id);
  return it == rules.end() ? nullptr : &it->second;
}

std::vector<std::string> DialectRegistry::dialects() const {
  std::set<std::string> names;
  for (const auto &[key, spec] : specs)
    names.insert(key.first);
  return {names.begin(), names.end()};
}

std::vector<const OpSpec *> DialectRegistry::opsOf(const std::string &dialect) const {
  std::vector<const OpSpec *> out;
  for (const auto &[key, spec] : specs)
    if (key.first == dialect)
      out.push_back(&spec);
  return out;
}

} // namespace tenflow::ir
