// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/IR/Type.h"

#include <charconv>

namespace tenflow::ir {

namespace {

const char *scalarSpelling(TypeKind kind) {
  switch (kind) {
  case TypeKind::None:
    return "none";
  case TypeKind::F32:
    return "f32";
  case TypeKind::I32:
    return "i32";
  case TypeKind::I1:
    return "i1";
  case TypeKind::Index:
    return "index";
  default:
    return "<<invalid>>";
  }
}

std::optional<TypeKind> parseScalarKind(std::string_view text) {
  if (text == "f32")
    return TypeKind::F32;
  if (text == "i32")
    return TypeKind::I32;
  if (text == "i1")
    return TypeKind::I1;
  if (text == "index")
    return TypeKind::Index;
  if (text == "none")
    return TypeKind::None;
  return std::nullopt;
}

} // namespace

Type Type::memref(std::vector<int64_t> shape, TypeKind element) {
  Type t(TypeKind::MemRef);
  t.shape_ = std::move(shape);
  t.element_ = element;
  return t;
}

Type Type::tile(TypeKind element) {
  Type t(TypeKind::Tile);
  t.element_ = element;
  return t;
}

std::string Type::str() const {
  switch (kind_) {
  case TypeKind::MemRef: {
    std::string out = "memref<";
    for (int64_t dim : shape_) {
      out += dim == kDynamic ? "?" : std::to_string(dim);
      out += 'x';
    }
    out += scalarSpelling(element_);
    return out + ">";
  }
  case TypeKind::Tile:
    return std::string("tile<") + scalarSpelling(element_) + ">";
  default:
    return scalarSpelling(kind_);
  }
}

std::optional<Type> Type::parse(std::string_view text) {
  if (auto kind = parseScalarKind(text))
    return Type(*kind);

  auto unwrap = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (text.size() < prefix.size() + 2 || text.substr(0, prefix.size()) != prefix)
      return std::nullopt;
    if (text[prefix.size()] != '<' || text.back() != '>')
      return std::nullopt;
    return text.substr(prefix.size() + 1, text.size() - prefix.size() - 2);
  };

  if (auto body = unwrap("tile")) {
    // Tiles hold f32 lanes only.
    if (*body != "f32")
      return std::nullopt;
    return tile(TypeKind::F32);
  }

  if (auto body = unwrap("memref")) {
    std::vector<int64_t> shape;
    std::string_view rest = *body;
    while (true) {
      std::size_t x = rest.find('x');
      if (x == std::string_view::npos)
        break;
      std::string_view dim = rest.substr(0, x);
      if (dim == "?") {
        shape.push_back(kDynamic);
      } else {
        int64_t value = 0;
        auto [ptr, ec] = std::from_chars(dim.data(), dim.data() + dim.size(), value);
        if (ec != std::errc() || ptr != dim.data() + dim.size() || value <= 0)
          return std::nullopt;
        shape.push_back(value);
      }
      rest = rest.substr(x + 1);
    }
    auto element = parseScalarKind(rest);
    if (!element || *element == TypeKind::None)
      return std::nullopt;
    return memref(std::move(shape), *element);
  }
  return std::nullopt;
}

} // namespace tenflow::ir
