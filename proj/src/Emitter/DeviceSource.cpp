// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Emitter/DeviceSource.h"

#include "tenflow/Exec/Value.h"
#include "tenflow/IR/Printer.h"

#include <algorithm>
#include <map>
#include <sstream>

using namespace tenflow;
using namespace tenflow::emitter;
using namespace tenflow::ir;

namespace {

struct EmitError {
  std::string message;
};

class SourceWriter {
public:
  explicit SourceWriter(const Function &fn) : fn(fn), names(fn), argNames(fn.argNames()) {}

  DeviceSourceUnit run();

private:
  std::string var(ValueId v) const {
    const std::vector<ValueId> &args = fn.args();
    auto it = std::find(args.begin(), args.end(), v);
    if (it != args.end())
      return argNames[it - args.begin()];
    int n = names.number(v);
    return n < 0 ? "undef" : "v" + std::to_string(n);
  }

  static std::string cType(const Type &t) {
    if (t.isF32())
      return "float";
    if (t.isI32())
      return "int32_t";
    if (t.isI1())
      return "bool";
    if (t.isIndex())
      return "int64_t";
    if (t.isTile())
      return "Tile";
    return "auto";
  }

  void line(const std::string &text) {
    out << std::string(indent * 2, ' ') << text << "\n";
  }

  /// Records a mock API call and returns its name.
  const std::string &api(const std::string &name) {
    if (std::find(apiCalls.begin(), apiCalls.end(), name) == apiCalls.end())
      apiCalls.push_back(name);
    return name;
  }

  std::string def(const Operation &op) const {
    ValueId r = op.results[0];
    return cType(fn.typeOf(r)) + " " + var(r) + " = ";
  }

  std::string cb(const Operation &op, const char *key = "cb") const {
    return std::to_string(*op.getIntAttr(key));
  }

  void emitBlock(const Block &block);
  void emitOp(const Operation &op);
  void emitArith(const Operation &op);

  const Function &fn;
  ValueNames names;
  std::vector<std::string> argNames;
  std::ostringstream out;
  int indent = 0;
  std::vector<std::string> apiCalls;
};

void SourceWriter::emitArith(const Operation &op) {
  static const std::map<std::string, const char *> infix = {
      {"addf", "+"},  {"subf", "-"},  {"mulf", "*"},  {"divf", "/"},
      {"addi", "+"},  {"subi", "-"},  {"muli", "*"},  {"divsi", "/"},
      {"remsi", "%"}};
  static const std::map<std::string, const char *> predicates = {
      {"eq", "=="}, {"ne", "!="}, {"slt", "<"}, {"sle", "<="}, {"sgt", ">"}, {"sge", ">="}};
  const std::vector<ValueId> &o = op.operands;
  if (op.name == "constant") {
    const Attribute *value = op.getAttr("value");
    std::string literal =
        fn.typeOf(op.results[0]).isF32()
            ? exec::formatF32(static_cast<float>(value->getFloat())) + "f"
            : std::to_string(value->getInt());
    line("const " + def(op) + literal + ";");
  } else if (auto it = infix.find(op.name); it != infix.end()) {
    line(def(op) + var(o[0]) + " " + it->second + " " + var(o[1]) + ";");
  } else if (op.name == "cmpi") {
    line(def(op) + var(o[0]) + " " + predicates.at(*op.getStringAttr("predicate")) + " " +
         var(o[1]) + ";");
  } else if (op.name == "select") {
    line(def(op) + var(o[0]) + " ? " + var(o[1]) + " : " + var(o[2]) + ";");
  } else if (op.name == "index_cast") {
    line(def(op) + "static_cast<" + cType(fn.typeOf(op.results[0])) + ">(" + var(o[0]) +
         ");");
  } else {
    throw EmitError{"no rendering for '" + op.fullName() + "'"};
  }
}

void SourceWriter::emitOp(const Operation &op) {
  const std::vector<ValueId> &o = op.operands;
  if (op.dialect == "tt_host" || (op.is("func", "call")))
    throw EmitError{"host-context op '" + op.fullName() + "' inside device function @" +
                    fn.name};
  if (op.dialect == "arith") {
    emitArith(op);
    return;
  }
  if (op.is("scf", "for")) {
    const Block &body = op.regions.front().front();
    std::string iv = var(body.args[0]);
    line("for (int64_t " + iv + " = " + var(o[0]) + "; " + iv + " < " + var(o[1]) + "; " +
         iv + " += " + var(o[2]) + ") {");
    ++indent;
    emitBlock(body);
    --indent;
    line("}");
    return;
  }
  if (op.is("scf", "yield") || op.is("func", "return"))
    return;

  std::string n = op.getIntAttr("n") ? std::to_string(*op.getIntAttr("n")) : "";
  if (op.dialect == "tt_cb") {
    static const std::map<std::string, const char *> calls = {
        {"reserve", "cb_reserve_back"},
        {"push", "cb_push_back"},
        {"wait", "cb_wait_front"},
        {"pop", "cb_pop_front"}};
    if (auto it = calls.find(op.name); it != calls.end()) {
      line(api(it->second) + "(" + cb(op) + ", " + n + ");");
    } else if (op.name == "write_slot") {
      line(api("cb_write_tile") + "(" + cb(op) + ", " + var(o[0]) + ");");
    } else if (op.name == "read_slot") {
      line(def(op) + api("cb_read_tile") + "(" + cb(op) + ");");
    } else {
      throw EmitError{"no rendering for '" + op.fullName() + "'"};
    }
    return;
  }
  if (op.dialect == "tt_dm") {
    if (op.name == "read_tile") {
      std::string pad = exec::formatF32(static_cast<float>(op.getAttr("pad")->getFloat()));
      line(api("noc_async_read_tile") + "(" + var(o[0]) + ", " + var(o[1]) + ", " +
           var(o[2]) + ", " + api("get_write_ptr") + "(" + cb(op) + "), " + pad + "f);");
      line(api("noc_async_read_barrier") + "();");
    } else if (op.name == "write_tile") {
      line(api("noc_async_write_tile") + "(" + var(o[0]) + ", " + var(o[1]) + ", " +
           var(o[2]) + ", " + api("get_read_ptr") + "(" + cb(op) + "));");
      line(api("noc_async_write_barrier") + "();");
    } else if (op.name == "barrier") {
      line(api("noc_async_full_barrier") + "();");
    } else {
      throw EmitError{"no rendering for '" + op.fullName() + "'"};
    }
    return;
  }
  if (op.dialect == "tt_compute") {
    static const std::map<std::string, const char *> binary = {
        {"add_tiles", "add_tiles"},
        {"sub_tiles", "sub_tiles"},
        {"mul_tiles", "mul_tiles"},
        {"div_tiles", "div_tiles"},
        {"mul_scalar", "mul_scalar_tile"},
        {"add_scalar", "add_scalar_tile"}};
    if (op.name == "init") {
      line(api("binary_op_init_common") + "();");
    } else if (op.name == "copy_in") {
      line(def(op) + api("copy_tile") + "(" + cb(op) + ");");
    } else if (auto it = binary.find(op.name); it != binary.end()) {
      line(def(op) + api(it->second) + "(" + var(o[0]) + ", " + var(o[1]) + ");");
    } else if (op.name == "fill") {
      line(def(op) + api("fill_tile") + "(" + var(o[0]) + ");");
    } else if (op.name == "pack_out") {
      line(api("pack_tile") + "(" + var(o[0]) + ", " + cb(op) + ");");
    } else {
      throw EmitError{"no rendering for '" + op.fullName() + "'"};
    }
    return;
  }
  throw EmitError{"'" + op.fullName() + "' cannot be rendered in a device kernel"};
}

void SourceWriter::emitBlock(const Block &block) {
  for (const Operation &op : block.ops)
    emitOp(op);
}

DeviceSourceUnit SourceWriter::run() {
  DeviceSourceUnit unit;
  unit.kernel = fn.name;
  unit.kind = *dialects::parseKernelKind(*fn.kernelKind());

  out << "// " << *fn.kernelKind() << " kernel @" << fn.name << "\n";
  for (const char *key : {"tt.simdlen", "tt.num_threads"})
    if (const Attribute *a = fn.attrs.count(key) ? &fn.attrs.at(key) : nullptr)
      out << "// " << key << " = " << a->str() << "\n";
  out << "#include \"tt_mock_api.h\"\n\n";
  out << "void kernel_main() {\n";
  indent = 1;
  for (std::size_t i = 0; i < fn.args().size(); ++i) {
    std::string type = cType(fn.typeOf(fn.args()[i]));
    line(type + " " + argNames[i] + " = " + api("get_arg_val") + "<" + type + ">(" +
         std::to_string(i) + ");");
  }
  emitBlock(fn.entry());
  indent = 0;
  out << "}\n";
  unit.text = out.str();
  unit.apiCalls = apiCalls;
  return unit;
}

} // namespace

Result<DeviceSourceUnit> emitter::emitDeviceSource(const Module &module,
                                                   const std::string &kernel) {
  const Function *fn = module.lookup(kernel);
  if (!fn)
    return Diagnostic::error("no function @" + kernel);
  if (!fn->isDeviceFunction() || !dialects::parseKernelKind(*fn->kernelKind()))
    return Diagnostic::error("@" + kernel + " is not a device kernel",
                             Location::inFunction(kernel));
  try {
    return SourceWriter(*fn).run();
  } catch (EmitError &e) {
    return Diagnostic::error(e.message, Location::inFunction(kernel));
  }
}

Result<std::vector<DeviceSourceUnit>> emitter::emitAllDeviceSources(const Module &module) {
  std::vector<DeviceSourceUnit> units;
  for (const Function &fn : module.functions) {
    if (!fn.isDeviceFunction())
      continue;
    Result<DeviceSourceUnit> unit = emitDeviceSource(module, fn.name);
    if (!unit)
      return unit.takeDiagnostics();
    units.push_back(std::move(unit.value()));
  }
  return units;
}
