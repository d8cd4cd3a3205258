// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Driver/Driver.h"

#include "tenflow/Emitter/DeviceSource.h"
#include "tenflow/Emitter/HostProgram.h"
#include "tenflow/IR/Printer.h"
#include "tenflow/Simulator/Interpreter.h"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

using namespace tenflow;
using namespace tenflow::driver;
namespace fs = std::filesystem;

namespace {

struct RunSpec {
  std::string mode = "compile";
  std::string input;
  std::vector<std::string> pipeline = passes::defaultPipeline();
  std::vector<std::string> dumpAfter;
  DeviceConfig config;
  std::vector<std::string> bindings;
  std::string outDir;
  std::string tracePath;
};

int report(std::ostream &err, const DiagnosticList &diags) {
  for (const Diagnostic &d : diags)
    err << d.str() << "\n";
  return kExitDiagnostics;
}

bool writeText(const fs::path &path, const std::string &text, std::ostream &err) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    err << "error: cannot write '" << path.string() << "'\n";
    return false;
  }
  return true;
}

bool writeTrace(const RunSpec &spec, const sim::TraceSink &trace, std::ostream &err) {
  if (spec.tracePath.empty())
    return true;
  std::string text;
  for (const std::string &line : trace)
    text += line + "\n";
  return writeText(spec.tracePath, text, err);
}

/// Prints arrays to `out`, and writes them as `<name>.bin` under --out.
bool emitArrays(const RunSpec &spec, const sim::ArrayStore &arrays, std::ostream &out,
                std::ostream &err) {
  for (const auto &[name, data] : arrays) {
    out << name << " = [";
    std::size_t shown = data.size() <= 32 ? data.size() : 8;
    for (std::size_t i = 0; i < shown; ++i)
      out << (i ? ", " : "") << exec::formatF32(data[i]);
    if (shown < data.size())
      out << ", ... (" << data.size() << " elements)";
    out << "]\n";
    if (!spec.outDir.empty()) {
      fs::path path = fs::path(spec.outDir) / (name + ".bin");
      if (!writeF32File(path.string(), data)) {
        err << "error: cannot write '" << path.string() << "'\n";
        return false;
      }
    }
  }
  return true;
}

int deviceFailure(const sim::HostRun &run, std::ostream &err) {
  err << "error: " << run.message << "\n";
  return run.status == sim::RunStatus::Error ? kExitDiagnostics : kExitDeviceFailure;
}

int compileMode(const RunSpec &spec, const Compilation &c, std::ostream &out,
                std::ostream &err) {
  fs::path dir = spec.outDir.empty() ? fs::path("tenflow-out") : fs::path(spec.outDir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create '" << dir.string() << "': " << ec.message() << "\n";
    return kExitDiagnostics;
  }
  std::string stem = fs::path(spec.input).stem().string();
  std::vector<std::pair<fs::path, std::string>> files;
  files.emplace_back(dir / (stem + ".0-input.tir"), ir::printModule(c.initial));
  int index = 1;
  for (const passes::PassDump &dump : c.lowered.dumps)
    files.emplace_back(dir / (stem + "." + std::to_string(index++) + "-" + dump.pass + ".tir"),
                       dump.text);

  auto sources = emitter::emitAllDeviceSources(c.lowered.module);
  if (!sources)
    return report(err, sources.diagnostics());
  for (const emitter::DeviceSourceUnit &unit : *sources)
    files.emplace_back(dir / unit.fileName(), unit.text);

  if (c.hasKernels()) {
    Result<exec::Inputs> inputs = parseBindings(spec.bindings, c.lowered.module);
    if (!inputs)
      return report(err, inputs.diagnostics());
    emitter::HostEmitOptions options;
    options.allowUnbound = true;
    auto program = emitter::emitHostProgram(c.lowered.module, *inputs, options);
    if (!program)
      return report(err, program.diagnostics());
    files.emplace_back(dir / (stem + ".host.trace"), program->trace());
  }

  for (const auto &[path, text] : files) {
    if (!writeText(path, text, err))
      return kExitDiagnostics;
    out << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

int dumpMode(const Compilation &c, std::ostream &out) {
  for (const passes::PassDump &dump : c.lowered.dumps)
    out << "// ---- after " << dump.pass << "\n" << dump.text;
  return kExitOk;
}

int runMode(const RunSpec &spec, const Compilation &c, std::ostream &out, std::ostream &err) {
  Result<exec::Inputs> inputs = parseBindings(spec.bindings, c.lowered.module);
  if (!inputs)
    return report(err, inputs.diagnostics());
  sim::TraceSink trace;
  sim::TraceSink *sink = spec.tracePath.empty() ? nullptr : &trace;
  if (!c.hasOffload() && !c.hasKernels()) {
    out << "note: no offload regions; running the reference interpreter only\n";
    auto result = sim::interpretStd(c.initial, *inputs);
    if (!result)
      return report(err, result.diagnostics());
    return emitArrays(spec, *result, out, err) ? kExitOk : kExitDiagnostics;
  }
  auto run = runOnDevice(c, *inputs, spec.config, sink);
  if (!run)
    return report(err, run.diagnostics());
  if (!writeTrace(spec, trace, err))
    return kExitDiagnostics;
  if (!run->ok())
    return deviceFailure(*run, err);
  out << "simulated " << run->steps << " device steps\n";
  return emitArrays(spec, run->arrays, out, err) ? kExitOk : kExitDiagnostics;
}

int checkMode(const RunSpec &spec, const Compilation &c, std::ostream &out,
              std::ostream &err) {
  Result<exec::Inputs> inputs = parseBindings(spec.bindings, c.lowered.module);
  if (!inputs)
    return report(err, inputs.diagnostics());
  sim::TraceSink trace;
  auto outcome = check(c, *inputs, spec.config, spec.tracePath.empty() ? nullptr : &trace);
  if (!outcome)
    return report(err, outcome.diagnostics());
  if (!writeTrace(spec, trace, err))
    return kExitDiagnostics;
  if (!outcome->device) {
    out << "note: no offload regions; nothing to compare\n";
    return kExitOk;
  }
  if (ExitCode code = exitCodeFor(*outcome); code != kExitOk) {
    err << "error: "
        << (outcome->mismatch ? outcome->mismatch->str() : outcome->device->message) << "\n";
    return code;
  }
  std::size_t elements = 0;
  for (const auto &[name, data] : outcome->reference)
    elements += data.size();
  out << "ok: simulator matches reference on " << outcome->reference.size() << " arrays ("
      << elements << " elements) in " << outcome->device->steps << " device steps\n";
  return kExitOk;
}

} // namespace

int driver::runCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  RunSpec spec;
  std::vector<std::string> positional;
  std::string mode;

  CLI::App app("Compile Fortran offload kernels for a simulated tile accelerator.",
               "tenflow");
  app.add_option("args", positional, "[mode] input (.f90 source or .tir module)")
      ->required()
      ->expected(1, 2);
  app.add_option("--mode", mode, "compile, run, check or dump")
      ->check(CLI::IsMember({"compile", "run", "check", "dump"}));
  app.add_option("--pipeline", spec.pipeline, "Comma-separated pass list")->delimiter(',');
  app.add_option("--dump-after", spec.dumpAfter, "Pass name or 'all' (repeatable)")
      ->delimiter(',');
  app.add_option("--cores", spec.config.numCores, "Number of device cores")
      ->check(CLI::PositiveNumber);
  app.add_option("--tile-elems", spec.config.tileElems, "Elements per tile")
      ->check(CLI::PositiveNumber);
  app.add_option("--cb-capacity", spec.config.cbCapacity, "Circular buffer capacity in tiles")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-steps", spec.config.maxSteps, "Simulator step budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--bind", spec.bindings, "name=value, name=@file.bin or name=[v0,v1,...]");
  app.add_option("--out", spec.outDir, "Output directory");
  app.add_option("--trace", spec.tracePath, "Write the host call and device step trace here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDiagnostics;
  }

  if (positional.size() == 2) {
    if (!mode.empty() && mode != positional[0]) {
      err << "error: mode given twice ('" << positional[0] << "' and '" << mode << "')\n";
      return kExitDiagnostics;
    }
    mode = positional[0];
  }
  spec.input = positional.back();
  if (!mode.empty())
    spec.mode = mode;
  if (spec.mode != "compile" && spec.mode != "run" && spec.mode != "check" &&
      spec.mode != "dump") {
    err << "error: unknown mode '" << spec.mode << "'\n";
    return kExitDiagnostics;
  }

  std::ifstream in(spec.input, std::ios::binary);
  if (!in) {
    err << "error: cannot open '" << spec.input << "'\n";
    return kExitDiagnostics;
  }
  std::stringstream text;
  text << in.rdbuf();

  passes::PassPipeline pipeline;
  pipeline.passes = spec.pipeline;
  if (spec.mode == "compile")
    pipeline.dumpAfter = {"all"};
  else if (spec.mode == "dump")
    pipeline.dumpAfter = spec.dumpAfter.empty()
                             ? std::set<std::string>{"all"}
                             : std::set<std::string>(spec.dumpAfter.begin(),
                                                     spec.dumpAfter.end());
  for (const std::string &name : spec.dumpAfter)
    if (name != "all" && !passes::isKnownPass(name)) {
      err << "error: --dump-after names unknown pass '" << name << "'\n";
      return kExitDiagnostics;
    }

  Result<Compilation> c = compile(text.str(), inputKindFor(spec.input), pipeline, spec.config);
  if (!c) {
    for (const Diagnostic &d : c.diagnostics())
      err << spec.input << ": " << d.str() << "\n";
    return kExitDiagnostics;
  }

  if (spec.mode == "compile")
    return compileMode(spec, *c, out, err);
  if (spec.mode == "dump")
    return dumpMode(*c, out);
  if (spec.mode == "run")
    return runMode(spec, *c, out, err);
  return checkMode(spec, *c, out, err);
}
