// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Exec/Value.h"

#include <charconv>
#include <cmath>
#include <cstring>

using namespace tenflow;
using namespace tenflow::exec;
using namespace tenflow::ir;

int64_t exec::wrapInteger(int64_t v, const Type &t) {
  if (t.isI32())
    return static_cast<int32_t>(static_cast<uint32_t>(static_cast<uint64_t>(v)));
  if (t.isI1())
    return v & 1;
  return v;
}

std::string exec::formatF32(float v) {
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v < 0 ? "-inf" : "inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string out(buf, end);
  if (out.find_first_of(".e") == std::string::npos)
    out += ".0";
  return out;
}

namespace {

/// Wrapping arithmetic on the 64-bit container; narrowed afterwards.
int64_t wrapAdd(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) + static_cast<uint64_t>(b));
}
int64_t wrapSub(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) - static_cast<uint64_t>(b));
}
int64_t wrapMul(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) * static_cast<uint64_t>(b));
}

} // namespace

bool exec::evalArith(const Operation &op, const std::vector<RtValue> &operands,
                     const Type &resultType, RtValue &result, std::string &error) {
  const std::string &name = op.name;
  if (op.dialect != "arith") {
    error = "'" + op.fullName() + "' is not an arith op";
    return false;
  }
  if (name == "constant") {
    const Attribute *value = op.getAttr("value");
    if (resultType.isF32())
      result = RtValue::ofFloat(static_cast<float>(value->getFloat()));
    else
      result = RtValue::ofInt(wrapInteger(value->getInt(), resultType));
    return true;
  }
  for (const RtValue &v : operands)
    if (!v.known()) {
      result = RtValue();
      return true;
    }

  if (name == "addf" || name == "subf" || name == "mulf" || name == "divf") {
    float a = operands[0].f, b = operands[1].f;
    float r = name == "addf"   ? a + b
              : name == "subf" ? a - b
              : name == "mulf" ? a * b
                               : a / b;
    result = RtValue::ofFloat(r);
    return true;
  }
  if (name == "addi" || name == "subi" || name == "muli") {
    int64_t a = operands[0].i, b = operands[1].i;
    int64_t r = name == "addi" ? wrapAdd(a, b) : name == "subi" ? wrapSub(a, b) : wrapMul(a, b);
    result = RtValue::ofInt(wrapInteger(r, resultType));
    return true;
  }
  if (name == "divsi" || name == "remsi") {
    int64_t a = operands[0].i, b = operands[1].i;
    if (b == 0) {
      error = "integer division by zero in '" + op.fullName() + "'";
      return false;
    }
    if (b == -1) {
      // Avoid INT64_MIN / -1; the wrapped results are well defined.
      result = RtValue::ofInt(wrapInteger(name == "divsi" ? wrapSub(0, a) : 0, resultType));
      return true;
    }
    result = RtValue::ofInt(wrapInteger(name == "divsi" ? a / b : a % b, resultType));
    return true;
  }
  if (name == "cmpi") {
    int64_t a = operands[0].i, b = operands[1].i;
    std::string pred = *op.getStringAttr("predicate");
    bool r = pred == "eq"    ? a == b
             : pred == "ne"  ? a != b
             : pred == "slt" ? a < b
             : pred == "sle" ? a <= b
             : pred == "sgt" ? a > b
                             : a >= b;
    result = RtValue::ofInt(r ? 1 : 0);
    return true;
  }
  if (name == "select") {
    result = operands[0].i ? operands[1] : operands[2];
    return true;
  }
  if (name == "index_cast") {
    result = RtValue::ofInt(wrapInteger(operands[0].i, resultType));
    return true;
  }
  error = "unsupported arith op '" + op.fullName() + "'";
  return false;
}
