// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Frontend/Lowering.h"

#include "tenflow/Frontend/Parser.h"

#include <algorithm>
#include <map>
#include <set>

using namespace tenflow;
using namespace tenflow::frontend;
using namespace tenflow::ir;

namespace {

/// Variables referenced anywhere in a loop nest, including bounds.
void collectNames(const Expr &e, std::set<std::string> &names) {
  if (e.kind == Expr::Kind::Variable || e.kind == Expr::Kind::ArrayElement)
    names.insert(e.name);
  for (const Expr &sub : e.operands)
    collectNames(sub, names);
}

void collectNames(const std::vector<Statement> &body, std::set<std::string> &names,
                  std::set<std::string> &written);

void collectNames(const DoLoop &loop, std::set<std::string> &names,
                  std::set<std::string> &written) {
  collectNames(loop.lower, names);
  collectNames(loop.upper, names);
  if (loop.step)
    collectNames(*loop.step, names);
  collectNames(loop.body, names, written);
}

void collectNames(const std::vector<Statement> &body, std::set<std::string> &names,
                  std::set<std::string> &written) {
  for (const Statement &s : body) {
    if (auto *a = std::get_if<Assignment>(&s.node)) {
      collectNames(a->target, names);
      collectNames(a->value, names);
      written.insert(a->target.name);
    } else if (auto *l = std::get_if<DoLoop>(&s.node)) {
      collectNames(*l, names, written);
    } else {
      collectNames(std::get<OffloadRegion>(s.node).loop, names, written);
    }
  }
}

class Lowerer {
public:
  Lowerer(const Subroutine &sub, Function &fn) : sub(sub), fn(fn) {}

  void run() {
    for (std::size_t i = 0; i < sub.params.size(); ++i)
      env[sub.params[i].name] = fn.args()[i];

    Operation subroutine("ftn", "subroutine");
    subroutine.attrs["name"] = sub.name;
    Block body;
    lowerBody(sub.body, body);
    body.ops.emplace_back("ftn", "end");
    subroutine.regions.push_back(Region{{std::move(body)}});
    fn.entry().ops.push_back(std::move(subroutine));
    fn.entry().ops.emplace_back("func", "return");
  }

private:
  ValueId emit(Block &block, Operation op, std::optional<Type> result) {
    ValueId v = 0;
    if (result) {
      v = fn.newValue(*result);
      op.results.push_back(v);
    }
    block.ops.push_back(std::move(op));
    return v;
  }

  ValueId constantIndex(Block &block, int64_t value) {
    Operation op("arith", "constant");
    op.attrs["value"] = value;
    return emit(block, std::move(op), Type::index());
  }

  /// Integer expressions are evaluated in `index`.
  ValueId lowerInt(const Expr &e, Block &block) {
    switch (e.kind) {
    case Expr::Kind::IntLiteral:
      return constantIndex(block, e.integer);
    case Expr::Kind::Variable: {
      ValueId v = env.at(e.name);
      if (fn.typeOf(v).isIndex())
        return v;
      Operation cast("arith", "index_cast");
      cast.operands = {v};
      return emit(block, std::move(cast), Type::index());
    }
    case Expr::Kind::Binary: {
      static const std::map<char, const char *> ops = {
          {'+', "addi"}, {'-', "subi"}, {'*', "muli"}};
      ValueId lhs = lowerInt(e.operands[0], block);
      ValueId rhs = lowerInt(e.operands[1], block);
      Operation op("arith", ops.at(e.op));
      op.operands = {lhs, rhs};
      return emit(block, std::move(op), Type::index());
    }
    default:
      break;
    }
    return constantIndex(block, 0);
  }

  ValueId lowerReal(const Expr &e, Block &block) {
    switch (e.kind) {
    case Expr::Kind::RealLiteral:
    case Expr::Kind::IntLiteral: {
      double v = e.kind == Expr::Kind::RealLiteral ? e.real
                                                   : static_cast<double>(e.integer);
      Operation op("arith", "constant");
      op.attrs["value"] = static_cast<double>(static_cast<float>(v));
      return emit(block, std::move(op), Type::f32());
    }
    case Expr::Kind::Variable:
      return env.at(e.name);
    case Expr::Kind::ArrayElement: {
      ValueId idx = lowerInt(e.operands[0], block);
      Operation op("ftn", "load");
      op.operands = {env.at(e.name), idx};
      return emit(block, std::move(op), Type::f32());
    }
    case Expr::Kind::Binary: {
      static const std::map<char, const char *> ops = {
          {'+', "addf"}, {'-', "subf"}, {'*', "mulf"}, {'/', "divf"}};
      ValueId lhs = lowerReal(e.operands[0], block);
      ValueId rhs = lowerReal(e.operands[1], block);
      Operation op("arith", ops.at(e.op));
      op.operands = {lhs, rhs};
      return emit(block, std::move(op), Type::f32());
    }
    }
    return 0;
  }

  void lowerLoop(const DoLoop &loop, Block &block) {
    ValueId lb = lowerInt(loop.lower, block);
    ValueId ub = lowerInt(loop.upper, block);
    ValueId step = loop.step ? lowerInt(*loop.step, block) : constantIndex(block, 1);
    Operation op("ftn", "do_loop");
    op.operands = {lb, ub, step};
    Block body;
    ValueId iv = fn.newValue(Type::index());
    body.args.push_back(iv);
    std::optional<ValueId> shadowed;
    if (env.count(loop.var))
      shadowed = env[loop.var];
    env[loop.var] = iv;
    lowerBody(loop.body, body);
    body.ops.emplace_back("ftn", "end");
    if (shadowed)
      env[loop.var] = *shadowed;
    else
      env.erase(loop.var);
    op.regions.push_back(Region{{std::move(body)}});
    block.ops.push_back(std::move(op));
  }

  void lowerOffload(const OffloadRegion &region, Block &block) {
    std::set<std::string> names, written;
    collectNames(region.loop, names, written);
    const OffloadClauses &c = region.clauses;
    for (const auto *list : {&c.mapTo, &c.mapFrom, &c.mapTofrom})
      names.insert(list->begin(), list->end());
    names.erase(region.loop.var);

    // Captures follow dummy-argument order so the layout is stable.
    std::vector<std::string> captured;
    for (const Param &p : sub.params)
      if (names.count(p.name))
        captured.push_back(p.name);

    auto listed = [](const std::vector<std::string> &list, const std::string &n) {
      return std::find(list.begin(), list.end(), n) != list.end();
    };
    std::vector<int64_t> mapTo, mapFrom, mapTofrom;
    Operation op("offload", "target");
    Block body;
    std::map<std::string, ValueId> saved = env;
    for (std::size_t i = 0; i < captured.size(); ++i) {
      const std::string &n = captured[i];
      ValueId outer = env.at(n);
      op.operands.push_back(outer);
      ValueId inner = fn.newValue(fn.typeOf(outer));
      body.args.push_back(inner);
      env[n] = inner;
      if (sub.param(n)->kind != ParamKind::RealArray)
        continue;
      int64_t idx = static_cast<int64_t>(i);
      if (listed(c.mapTo, n))
        mapTo.push_back(idx);
      else if (listed(c.mapFrom, n))
        mapFrom.push_back(idx);
      else if (listed(c.mapTofrom, n) || written.count(n))
        mapTofrom.push_back(idx);
      else
        mapTo.push_back(idx);
    }
    lowerLoop(region.loop, body);
    env = std::move(saved);

    if (!mapTo.empty())
      op.attrs["map_to"] = makeIntArray(mapTo);
    if (!mapFrom.empty())
      op.attrs["map_from"] = makeIntArray(mapFrom);
    if (!mapTofrom.empty() || (mapTo.empty() && mapFrom.empty()))
      op.attrs["map_tofrom"] = makeIntArray(mapTofrom);
    op.attrs["num_teams"] = c.numTeams;
    if (c.numThreads)
      op.attrs["num_threads"] = *c.numThreads;
    if (c.simdlen)
      op.attrs["simdlen"] = *c.simdlen;
    op.regions.push_back(Region{{std::move(body)}});
    block.ops.push_back(std::move(op));
  }

  void lowerBody(const std::vector<Statement> &stmts, Block &block) {
    for (const Statement &s : stmts) {
      if (auto *a = std::get_if<Assignment>(&s.node)) {
        ValueId value = lowerReal(a->value, block);
        ValueId idx = lowerInt(a->target.operands[0], block);
        Operation store("ftn", "store");
        store.operands = {value, env.at(a->target.name), idx};
        block.ops.push_back(std::move(store));
      } else if (auto *l = std::get_if<DoLoop>(&s.node)) {
        lowerLoop(*l, block);
      } else {
        lowerOffload(std::get<OffloadRegion>(s.node), block);
      }
    }
  }

  const Subroutine &sub;
  Function &fn;
  std::map<std::string, ValueId> env;
};

Type paramType(ParamKind kind) {
  switch (kind) {
  case ParamKind::RealScalar:
    return Type::f32();
  case ParamKind::RealArray:
    return Type::dynamicMemref();
  case ParamKind::IntScalar:
    return Type::i32();
  }
  return Type::none();
}

} // namespace

Module frontend::lowerAst(const FortranAst &ast) {
  Module module;
  for (const Subroutine &sub : ast.subroutines) {
    std::vector<Type> types;
    ArrayAttr names;
    for (const Param &p : sub.params) {
      types.push_back(paramType(p.kind));
      names.emplace_back(p.name);
    }
    Function fn = makeFunction(sub.name, types);
    fn.attrs["arg_names"] = std::move(names);
    Lowerer(sub, fn).run();
    module.functions.push_back(std::move(fn));
  }
  return module;
}

Result<Module> frontend::compileFortran(std::string_view source) {
  Result<FortranAst> ast = parseFortran(source);
  if (!ast)
    return ast.takeDiagnostics();
  return lowerAst(*ast);
}
