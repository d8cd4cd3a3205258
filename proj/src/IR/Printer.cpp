// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/IR/Printer.h"

#include <sstream>

namespace tenflow::ir {

namespace {

void numberRegion(const Region &region, std::unordered_map<ValueId, int> &out,
                  int &next) {
  for (const Block &block : region.blocks) {
    for (ValueId arg : block.args)
      out.emplace(arg, next++);
    for (const Operation &op : block.ops) {
      for (ValueId r : op.results)
        out.emplace(r, next++);
      for (const Region &nested : op.regions)
        numberRegion(nested, out, next);
    }
  }
}

std::string printAttrMap(const AttrMap &attrs) {
  std::string out = "{";
  bool first = true;
  for (const auto &[key, value] : attrs) {
    if (!first)
      out += ", ";
    first = false;
    out += key + " = " + value.str();
  }
  return out + "}";
}

class FunctionPrinter {
public:
  FunctionPrinter(const Function &fn, std::ostream &os)
      : fn(fn), names(fn), os(os) {}

  void print() {
    os << "  func @" << fn.name << "(";
    if (!fn.body.empty()) {
      const auto &args = fn.entry().args;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i)
          os << ", ";
        os << names.name(args[i]) << ": " << typeName(args[i]);
      }
    }
    os << ")";
    if (fn.resultType)
      os << " -> " << fn.resultType->str();
    if (!fn.attrs.empty())
      os << " attributes " << printAttrMap(fn.attrs);
    os << " {\n";
    for (std::size_t b = 0; b < fn.body.blocks.size(); ++b)
      printBlock(fn.body.blocks[b], b, 2, /*isFunctionEntry=*/b == 0);
    os << "  }\n";
  }

private:
  std::string typeName(ValueId v) const {
    return fn.isValidValue(v) ? fn.typeOf(v).str() : "<<invalid>>";
  }

  void indent(int level) {
    for (int i = 0; i < level; ++i)
      os << "  ";
  }

  void printBlock(const Block &block, std::size_t index, int level,
                  bool isFunctionEntry) {
    if (!isFunctionEntry && (index > 0 || !block.args.empty())) {
      indent(level - 1);
      os << "^bb" << index;
      if (!block.args.empty()) {
        os << "(";
        for (std::size_t i = 0; i < block.args.size(); ++i) {
          if (i)
            os << ", ";
          os << names.name(block.args[i]) << ": " << typeName(block.args[i]);
        }
        os << ")";
      }
      os << ":\n";
    }
    for (const Operation &op : block.ops)
      printOp(op, level);
  }

  void printOp(const Operation &op, int level) {
    indent(level);
    if (!op.results.empty()) {
      for (std::size_t i = 0; i < op.results.size(); ++i) {
        if (i)
          os << ", ";
        os << names.name(op.results[i]);
      }
      os << " = ";
    }
    os << op.dialect << "." << op.name << "(";
    for (std::size_t i = 0; i < op.operands.size(); ++i) {
      if (i)
        os << ", ";
      os << names.name(op.operands[i]);
    }
    os << ")";
    if (!op.attrs.empty())
      os << " " << printAttrMap(op.attrs);
    if (!op.regions.empty()) {
      os << " (";
      for (std::size_t r = 0; r < op.regions.size(); ++r) {
        if (r)
          os << ", ";
        os << "{\n";
        const Region &region = op.regions[r];
        for (std::size_t b = 0; b < region.blocks.size(); ++b)
          printBlock(region.blocks[b], b, level + 1, false);
        indent(level);
        os << "}";
      }
      os << ")";
    }
    os << " : (";
    for (std::size_t i = 0; i < op.operands.size(); ++i) {
      if (i)
        os << ", ";
      os << typeName(op.operands[i]);
    }
    os << ") -> (";
    for (std::size_t i = 0; i < op.results.size(); ++i) {
      if (i)
        os << ", ";
      os << typeName(op.results[i]);
    }
    os << ")\n";
  }

  const Function &fn;
  ValueNames names;
  std::ostream &os;
};

} // namespace

ValueNames::ValueNames(const Function &fn) {
  if (fn.body.empty())
    return;
  const auto &args = fn.entry().args;
  for (std::size_t i = 0; i < args.size(); ++i)
    argNumbers.emplace(args[i], static_cast<int>(i));
  int next = 0;
  for (std::size_t b = 0; b < fn.body.blocks.size(); ++b) {
    const Block &block = fn.body.blocks[b];
    if (b > 0)
      for (ValueId arg : block.args)
        numbers.emplace(arg, next++);
    for (const Operation &op : block.ops) {
      for (ValueId r : op.results)
        numbers.emplace(r, next++);
      for (const Region &nested : op.regions)
        numberRegion(nested, numbers, next);
    }
  }
}

std::string ValueNames::name(ValueId v) const {
  if (auto it = argNumbers.find(v); it != argNumbers.end())
    return "%arg" + std::to_string(it->second);
  if (auto it = numbers.find(v); it != numbers.end())
    return "%" + std::to_string(it->second);
  return "<<invalid>>";
}

int ValueNames::number(ValueId v) const {
  auto it = numbers.find(v);
  return it == numbers.end() ? -1 : it->second;
}

bool ValueNames::isArgument(ValueId v) const { return argNumbers.count(v) != 0; }

std::string printFunction(const Function &fn) {
  std::ostringstream os;
  FunctionPrinter(fn, os).print();
  return os.str();
}

std::string printModule(const Module &module) {
  std::ostringstream os;
  os << "module";
  if (!module.attrs.empty())
    os << " attributes " << printAttrMap(module.attrs);
  os << " {\n";
  for (const Function &fn : module.functions)
    FunctionPrinter(fn, os).print();
  os << "}\n";
  return os.str();
}

} // namespace tenflow::ir
