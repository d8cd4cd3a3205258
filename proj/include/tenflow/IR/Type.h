// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_IR_TYPE_H
#define TENFLOW_IR_TYPE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tenflow::ir {

enum class TypeKind { None, F32, I32, I1, Index, MemRef, Tile };

/// IR value type. Scalars carry only a kind; memrefs add a shape and element
/// kind; tiles add an element kind.
class Type {
public:
  static constexpr int64_t kDynamic = -1;

  Type() = default;
  static Type none() { return Type(TypeKind::None); }
  static Type f32() { return Type(TypeKind::F32); }
  static Type i32() { return Type(TypeKind::I32); }
  static Type i1() { return Type(TypeKind::I1); }
  static Type index() { return Type(TypeKind::Index); }
  static Type memref(std::vector<int64_t> shape, TypeKind element = TypeKind::F32);
  static Type dynamicMemref(TypeKind element = TypeKind::F32) {
    return memref({kDynamic}, element);
  }
  static Type tile(TypeKind element = TypeKind::F32);

  TypeKind kind() const { return kind_; }
  const std::vector<int64_t> &shape() const { return shape_; }
  TypeKind elementKind() const { return element_; }

  bool isF32() const { return kind_ == TypeKind::F32; }
  bool isI32() const { return kind_ == TypeKind::I32; }
  bool isI1() const { return kind_ == TypeKind::I1; }
  bool isIndex() const { return kind_ == TypeKind::Index; }
  bool isInteger() const { return isI32() || isI1() || isIndex(); }
  bool isMemRef() const { return kind_ == TypeKind::MemRef; }
  bool isTile() const { return kind_ == TypeKind::Tile; }

  std::string str() const;
  bool operator==(const Type &) const = default;

  /// Parses the textual spelling (`f32`, `memref<?xf32>`, ...).
  static std::optional<Type> parse(std::string_view text);

private:
  explicit Type(TypeKind kind) : kind_(kind) {}

  TypeKind kind_ = TypeKind::None;
  std::vector<int64_t> shape_;
  TypeKind element_ = TypeKind::None;
};

} // namespace tenflow::ir

#endif // TENFLOW_IR_TYPE_H
