// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_FRONTEND_PARSER_H
#define TENFLOW_FRONTEND_PARSER_H

#include "tenflow/Frontend/Ast.h"
#include "tenflow/Support/Diagnostic.h"

#include <string_view>

namespace tenflow::frontend {

/// Parses the supported Fortran subset: subroutines over f32 scalars, 1-D
/// f32 arrays and integer scalars; counted do-loops; elementwise
/// assignments; `!$omp target ...` / `!$omp end target ...` pairs around a
/// loop. Keywords are case-insensitive. Errors carry the source line.
Result<FortranAst> parseFortran(std::string_view source);

/// Parses one directive (continuations already joined). The leading `!$omp`
/// sentinel and a doubled `omp` are optional.
Result<OffloadClauses> parseDirective(std::string_view line);

} // namespace tenflow::frontend

#endif // TENFLOW_FRONTEND_PARSER_H
