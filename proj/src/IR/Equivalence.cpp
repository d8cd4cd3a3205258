// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/IR/Equivalence.h"

#include <unordered_map>

namespace tenflow::ir {

namespace {

class Matcher {
public:
  Matcher(const Function &lhs, const Function &rhs, std::string *why)
      : lhs(lhs), rhs(rhs), why(why) {}

  bool run() {
    if (lhs.name != rhs.name)
      return fail("function name @" + lhs.name + " vs @" + rhs.name);
    if (lhs.resultType != rhs.resultType)
      return fail("result type of @" + lhs.name);
    if (lhs.attrs != rhs.attrs)
      return fail("attributes of @" + lhs.name);
    return matchRegion(lhs.body, rhs.body);
  }

private:
  bool fail(const std::string &msg) {
    if (why && why->empty())
      *why = msg;
    return false;
  }

  bool bind(ValueId a, ValueId b) {
    if (!lhs.isValidValue(a) || !rhs.isValidValue(b))
      return fail("invalid value definition");
    if (!(lhs.typeOf(a) == rhs.typeOf(b)))
      return fail("value type " + lhs.typeOf(a).str() + " vs " + rhs.typeOf(b).str());
    if (!forward.emplace(a, b).second || !backward.emplace(b, a).second)
      return fail("value defined twice");
    return true;
  }

  bool sameUse(ValueId a, ValueId b) {
    auto it = forward.find(a);
    if (it == forward.end() || it->second != b)
      return fail("operand mismatch in @" + lhs.name);
    return true;
  }

  bool matchRegion(const Region &a, const Region &b) {
    if (a.blocks.size() != b.blocks.size())
      return fail("block count in @" + lhs.name);
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
      const Block &ba = a.blocks[i], &bb = b.blocks[i];
      if (ba.args.size() != bb.args.size() || ba.ops.size() != bb.ops.size())
        return fail("block shape in @" + lhs.name);
      for (std::size_t j = 0; j < ba.args.size(); ++j)
        if (!bind(ba.args[j], bb.args[j]))
          return false;
      for (std::size_t j = 0; j < ba.ops.size(); ++j)
        if (!matchOp(ba.ops[j], bb.ops[j]))
          return false;
    }
    return true;
  }

  bool matchOp(const Operation &a, const Operation &b) {
    if (a.dialect != b.dialect || a.name != b.name)
      return fail("op " + a.fullName() + " vs " + b.fullName());
    if (a.attrs != b.attrs)
      return fail("attributes of " + a.fullName());
    if (a.operands.size() != b.operands.size() || a.results.size() != b.results.size() ||
        a.regions.size() != b.regions.size())
      return fail("shape of " + a.fullName());
    for (std::size_t i = 0; i < a.operands.size(); ++i) {
      // Operands may refer to values defined later (malformed IR); fall back
      // to type comparison plus a deferred binding.
      ValueId va = a.operands[i], vb = b.operands[i];
      if (forward.count(va)) {
        if (!sameUse(va, vb))
          return false;
      } else if (!bind(va, vb)) {
        return false;
      }
    }
    for (std::size_t i = 0; i < a.results.size(); ++i) {
      ValueId ra = a.results[i], rb = b.results[i];
      auto it = forward.find(ra);
      if (it != forward.end()) {
        if (it->second != rb)
          return fail("result mismatch in " + a.fullName());
      } else if (!bind(ra, rb)) {
        return false;
      }
    }
    for (std::size_t i = 0; i < a.regions.size(); ++i)
      if (!matchRegion(a.regions[i], b.regions[i]))
        return false;
    return true;
  }

  const Function &lhs;
  const Function &rhs;
  std::string *why;
  std::unordered_map<ValueId, ValueId> forward;
  std::unordered_map<ValueId, ValueId> backward;
};

} // namespace

bool structurallyEqual(const Function &lhs, const Function &rhs, std::string *why) {
  return Matcher(lhs, rhs, why).run();
}

bool structurallyEqual(const Module &lhs, const Module &rhs, std::string *why) {
  if (lhs.attrs != rhs.attrs) {
    if (why)
      *why = "module attributes";
    return false;
  }
  if (lhs.functions.size() != rhs.functions.size()) {
    if (why)
      *why = "function count";
    return false;
  }
  for (std::size_t i = 0; i < lhs.functions.size(); ++i)
    if (!structurallyEqual(lhs.functions[i], rhs.functions[i], why))
      return false;
  return true;
}

} // namespace tenflow::ir
