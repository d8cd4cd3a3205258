// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/IR/Attribute.h"

#include <charconv>
#include <cmath>
#include <cstring>

namespace tenflow::ir {

std::string formatFloat(double v) {
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v < 0 ? "-inf" : "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string out(buf, ptr);
  // Keep floats lexically distinct from integers.
  if (out.find_first_of(".e") == std::string::npos)
    out += ".0";
  return out;
}

namespace {

std::string quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
    case '"':
      out += "\\\"";
      break;
    case '\\':
      out += "\\\\";
      break;
    case '\n':
      out += "\\n";
      break;
    default:
      out += c;
    }
  }
  return out + "\"";
}

} // namespace

std::string Attribute::str() const {
  switch (kind()) {
  case AttrKind::Integer:
    return std::to_string(getInt());
  case AttrKind::Float:
    return formatFloat(getFloat());
  case AttrKind::String:
    return quote(getString());
  case AttrKind::Symbol:
    return "@" + getSymbol().name;
  case AttrKind::Array: {
    std::string out = "[";
    const ArrayAttr &arr = getArray();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (i)
        out += ", ";
      out += arr[i].str();
    }
    return out + "]";
  }
  case AttrKind::Dict: {
    std::string out = "{";
    const DictAttr &dict = getDict();
    for (std::size_t i = 0; i < dict.size(); ++i) {
      if (i)
        out += ", ";
      out += dict[i].first + " = " + dict[i].second.str();
    }
    return out + "}";
  }
  }
  return "<<invalid>>";
}

bool Attribute::operator==(const Attribute &other) const {
  if (kind() != other.kind())
    return false;
  if (isFloat()) {
    // Bitwise, so NaN payloads and signed zeros survive round-trips.
    double a = getFloat(), b = other.getFloat();
    return std::memcmp(&a, &b, sizeof(double)) == 0;
  }
  return value == other.value;
}

ArrayAttr makeIntArray(const std::vector<int64_t> &values) {
  ArrayAttr out;
  out.reserve(values.size());
  for (int64_t v : values)
    out.emplace_back(v);
  return out;
}

std::optional<std::vector<int64_t>> getIntArray(const Attribute &attr) {
  if (!attr.isArray())
    return std::nullopt;
  std::vector<int64_t> out;
  for (const Attribute &elt : attr.getArray()) {
    if (!elt.isInteger())
      return std::nullopt;
    out.push_back(elt.getInt());
  }
  return out;
}

} // namespace tenflow::ir
