// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/IR/Verifier.h"

#include "tenflow/IR/Printer.h"

#include <set>
#include <unordered_set>

namespace tenflow::ir {

namespace {

const char *attrKindName(AttrKind kind) {
  switch (kind) {
  case AttrKind::Integer:
    return "an integer";
  case AttrKind::Float:
    return "a float";
  case AttrKind::String:
    return "a string";
  case AttrKind::Symbol:
    return "a symbol reference";
  case AttrKind::Array:
    return "an array";
  case AttrKind::Dict:
    return "a dictionary";
  }
  return "?";
}

/// Walks one function checking SSA reference consistency and, when a
/// registry is present, every op against its schema.
class FunctionVerifier {
public:
  FunctionVerifier(const Module *module, const Function &fn,
                   const DialectRegistry *registry, DiagnosticList &diags)
      : module(module), fn(fn), registry(registry), diags(diags), names(fn) {}

  void run() {
    if (fn.body.empty()) {
      diags.push_back(Diagnostic::error("function has no body",
                                        Location::inFunction(fn.name)));
      return;
    }
    if (registry) {
      if (const OpSpec *spec = registry->lookup("func", "func")) {
        OpSite site;
        site.module = module;
        site.function = &fn;
        site.location = Location::inFunction(fn.name);
        if (const OpRule *rule = registry->rule(spec->rule)) {
          OpVerifyContext ctx(site, diags);
          Operation placeholder("func", "func");
          (*rule)(placeholder, ctx);
        }
      }
    }
    std::vector<OpPathStep> path;
    walkRegion(fn.body, 0, nullptr, path);
  }

private:
  bool visible(ValueId v) const {
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it)
      if (it->count(v))
        return true;
    return false;
  }

  void defineValue(ValueId v, const Location &loc) {
    if (!fn.isValidValue(v)) {
      diags.push_back(Diagnostic::error("definition of unknown value id " +
                                            std::to_string(v),
                                        loc));
      return;
    }
    if (!defined.insert(v).second)
      diags.push_back(
          Diagnostic::error("value " + names.name(v) + " is defined more than once", loc));
    scopes.back().insert(v);
  }

  void walkRegion(const Region &region, int regionIndex, const Operation *parent,
                  std::vector<OpPathStep> &path) {
    for (std::size_t b = 0; b < region.blocks.size(); ++b) {
      const Block &block = region.blocks[b];
      scopes.emplace_back();
      Location blockLoc = Location::inFunction(fn.name, path);
      for (ValueId arg : block.args)
        defineValue(arg, blockLoc);
      for (std::size_t i = 0; i < block.ops.size(); ++i) {
        const Operation &op = block.ops[i];
        path.push_back({regionIndex, static_cast<int>(b), static_cast<int>(i)});
        Location loc = Location::inFunction(fn.name, path);
        for (ValueId operand : op.operands) {
          if (!fn.isValidValue(operand))
            diags.push_back(Diagnostic::error(
                "operand refers to unknown value id " + std::to_string(operand), loc));
          else if (!visible(operand))
            diags.push_back(Diagnostic::error(
                "use of value " + names.name(operand) + " that is not defined in scope",
                loc));
        }
        if (registry)
          checkOp(op, parent, block, i, loc);
        for (std::size_t r = 0; r < op.regions.size(); ++r)
          walkRegion(op.regions[r], static_cast<int>(r), &op, path);
        for (ValueId result : op.results)
          defineValue(result, loc);
        path.pop_back();
      }
      scopes.pop_back();
    }
  }

  void checkOp(const Operation &op, const Operation *parent, const Block &block,
               std::size_t index, const Location &loc) {
    const OpSpec *spec = registry->lookup(op.dialect, op.name);
    if (!spec) {
      diags.push_back(
          Diagnostic::error("unknown operation '" + op.fullName() + "'", loc));
      return;
    }
    OpSite site;
    site.module = module;
    site.function = &fn;
    site.parent = parent;
    site.block = &block;
    site.opIndex = index;
    site.location = loc;
    DiagnosticList opDiags = verifyOp(op, *spec, *registry, site);
    diags.insert(diags.end(), opDiags.begin(), opDiags.end());
  }

  const Module *module;
  const Function &fn;
  const DialectRegistry *registry;
  DiagnosticList &diags;
  ValueNames names;
  std::unordered_set<ValueId> defined;
  std::vector<std::unordered_set<ValueId>> scopes;
};

void checkTypes(const std::string &what, const std::vector<ValueId> &values,
                const std::vector<TypeConstraint> &constraints, bool variadic,
                const Function &fn, OpVerifyContext &ctx) {
  std::size_t fixed = variadic ? constraints.size() - 1 : constraints.size();
  bool countOk = variadic ? values.size() >= fixed : values.size() == fixed;
  if (!countOk) {
    ctx.emitError(what + " count mismatch: expected " + (variadic ? "at least " : "") +
                  std::to_string(fixed) + ", got " + std::to_string(values.size()));
    return;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!fn.isValidValue(values[i]))
      continue;
    TypeConstraint c = i < fixed ? constraints[i] : constraints.back();
    const Type &t = fn.typeOf(values[i]);
    if (!satisfies(t, c))
      ctx.emitError(what + " #" + std::to_string(i) + " type mismatch: expected " +
                    describe(c) + ", got " + t.str());
  }
}

} // namespace

DiagnosticList verifyOp(const Operation &op, const OpSpec &spec,
                        const DialectRegistry &registry, const OpSite &site) {
  DiagnosticList diags;
  OpVerifyContext ctx(site, diags);
  const Function &fn = *site.function;

  checkTypes("operand", op.operands, spec.operands, spec.variadicOperands, fn, ctx);
  checkTypes("result", op.results, spec.results, spec.variadicResults, fn, ctx);

  for (const auto &[key, kind] : spec.requiredAttrs) {
    const Attribute *attr = op.getAttr(key);
    if (!attr)
      ctx.emitError("missing required attribute '" + key + "'");
    else if (attr->kind() != kind)
      ctx.emitError("attribute '" + key + "' must be " + attrKindName(kind));
  }

  if (static_cast<int>(op.regions.size()) != spec.regionCount)
    ctx.emitError("region count mismatch: expected " + std::to_string(spec.regionCount) +
                  ", got " + std::to_string(op.regions.size()));

  bool device = fn.isDeviceFunction();
  if (spec.context == OpContext::Device && !device)
    ctx.emitError("op not allowed in host context");
  else if (spec.context == OpContext::Host && device)
    ctx.emitError("op not allowed in device context");

  // Rules assume the schema holds; skip them on malformed ops.
  if (diags.empty() && !spec.rule.empty())
    if (const OpRule *rule = registry.rule(spec.rule))
      (*rule)(op, ctx);
  return diags;
}

DiagnosticList verifyStructure(const Function &fn) {
  DiagnosticList diags;
  FunctionVerifier(nullptr, fn, nullptr, diags).run();
  return diags;
}

DiagnosticList verifyStructure(const Module &module) {
  DiagnosticList diags;
  for (const Function &fn : module.functions)
    FunctionVerifier(&module, fn, nullptr, diags).run();
  return diags;
}

DiagnosticList verify(const Module &module, const DialectRegistry &registry) {
  DiagnosticList diags;
  std::set<std::string> seen;
  for (const Function &fn : module.functions) {
    if (!seen.insert(fn.name).second)
      diags.push_back(Diagnostic::error("duplicate function symbol @" + fn.name,
                                        Location::inFunction(fn.name)));
    FunctionVerifier(&module, fn, &registry, diags).run();
  }
  return diags;
}

} // namespace tenflow::ir
