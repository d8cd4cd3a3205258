// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_IR_ATTRIBUTE_H
#define TENFLOW_IR_ATTRIBUTE_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tenflow::ir {

class Attribute;

/// Reference to a module-level symbol, printed `@name`.
struct SymbolRef {
  std::string name;
  bool operator==(const SymbolRef &) const = default;
};

using ArrayAttr = std::vector<Attribute>;
using DictAttr = std::vector<std::pair<std::string, Attribute>>;

enum class AttrKind { Integer, Float, String, Symbol, Array, Dict };

class Attribute {
public:
  Attribute() : value(int64_t{0}) {}
  Attribute(int64_t v) : value(v) {}
  Attribute(int v) : value(int64_t{v}) {}
  Attribute(double v) : value(v) {}
  Attribute(std::string v) : value(std::move(v)) {}
  Attribute(const char *v) : value(std::string(v)) {}
  Attribute(SymbolRef v) : value(std::move(v)) {}
  Attribute(ArrayAttr v) : value(std::move(v)) {}
  Attribute(DictAttr v) : value(std::move(v)) {}

  AttrKind kind() const { return static_cast<AttrKind>(value.index()); }

  bool isInteger() const { return kind() == AttrKind::Integer; }
  bool isFloat() const { return kind() == AttrKind::Float; }
  bool isString() const { return kind() == AttrKind::String; }
  bool isSymbol() const { return kind() == AttrKind::Symbol; }
  bool isArray() const { return kind() == AttrKind::Array; }
  bool isDict() const { return kind() == AttrKind::Dict; }

  int64_t getInt() const { return std::get<int64_t>(value); }
  double getFloat() const { return std::get<double>(value); }
  const std::string &getString() const { return std::get<std::string>(value); }
  const SymbolRef &getSymbol() const { return std::get<SymbolRef>(value); }
  const ArrayAttr &getArray() const { return std::get<ArrayAttr>(value); }
  const DictAttr &getDict() const { return std::get<DictAttr>(value); }

  std::string str() const;

  bool operator==(const Attribute &other) const;

private:
  std::variant<int64_t, double, std::string, SymbolRef, ArrayAttr, DictAttr>
      value;
};

/// Attributes keyed by name; ordered so printing is deterministic.
using AttrMap = std::map<std::string, Attribute>;

/// Shortest round-trip spelling; always contains '.', 'e', or is one of
/// nan/inf/-inf so it never reads back as an integer.
std::string formatFloat(double v);

/// Builds an integer array attribute.
ArrayAttr makeIntArray(const std::vector<int64_t> &values);

/// Reads an integer array attribute, or nullopt if `attr` is not one.
std::optional<std::vector<int64_t>> getIntArray(const Attribute &attr);

} // namespace tenflow::ir

#endif // TENFLOW_IR_ATTRIBUTE_H
