// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_TESTS_SUPPORT_PROGRAMGEN_H
#define TENFLOW_TESTS_SUPPORT_PROGRAMGEN_H

#include "tenflow/Exec/Inputs.h"
#include "tenflow/Exec/Value.h"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace tenflow::testing {

/// Expression tree of a generated elementwise loop body, evaluated directly
/// in C++ as an oracle independent of the compiler.
struct GenExpr {
  enum class Kind { Input, Scalar, Literal, Binary };
  Kind kind = Kind::Literal;
  int input = 0;
  float literal = 0;
  char op = '+';
  std::shared_ptr<GenExpr> lhs, rhs;

  std::string str(const std::vector<std::string> &inputs) const {
    switch (kind) {
    case Kind::Input:
      return inputs[input] + "(i)";
    case Kind::Scalar:
      return "s";
    case Kind::Literal:
      return exec::formatF32(literal);
    case Kind::Binary:
      return "(" + lhs->str(inputs) + " " + op + " " + rhs->str(inputs) + ")";
    }
    return "";
  }

  float eval(const std::vector<std::vector<float>> &in, std::size_t i, float s) const {
    switch (kind) {
    case Kind::Input:
      return in[input][i];
    case Kind::Scalar:
      return s;
    case Kind::Literal:
      return literal;
    case Kind::Binary: {
      float a = lhs->eval(in, i, s), b = rhs->eval(in, i, s);
      switch (op) {
      case '+':
        return a + b;
      case '-':
        return a - b;
      case '*':
        return a * b;
      default:
        return a / b;
      }
    }
    }
    return 0;
  }

  bool hasDivision() const {
    return kind == Kind::Binary && (op == '/' || lhs->hasDivision() || rhs->hasDivision());
  }
  int countOps() const {
    return kind == Kind::Binary ? 1 + lhs->countOps() + rhs->countOps() : 0;
  }
};

/// A random elementwise offload program: `out(i) = <expr over x1..xk, s>`.
struct GenProgram {
  std::string source;
  std::vector<std::string> inputs;
  /// Either a separate array `z` or the first input (updated in place).
  std::string output;
  std::shared_ptr<GenExpr> expr;
  int numTeams = 1;
  int64_t n = 0;
  float scalar = 0;
  std::vector<std::vector<float>> inputData;
  std::vector<float> outputInit;

  exec::Inputs bindings() const {
    exec::Inputs in;
    for (std::size_t k = 0; k < inputs.size(); ++k)
      in.arrays[inputs[k]] = inputData[k];
    if (output == "z")
      in.arrays["z"] = outputInit;
    in.scalars["s"] = exec::formatF32(scalar);
    in.scalars["n"] = std::to_string(n);
    return in;
  }

  /// Final contents of the output array per the C++ oracle.
  std::vector<float> expected() const {
    std::vector<std::vector<float>> in = inputData;
    std::vector<float> out(n);
    for (int64_t i = 0; i < n; ++i)
      out[i] = expr->eval(in, i, scalar);
    return out;
  }
};

inline GenProgram generateProgram(std::mt19937_64 &rng, int64_t maxN = 5000,
                                  int maxTeams = 4) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto value = [&]() {
    // Keep magnitudes moderate so divisions rarely overflow; bit-exactness is
    // checked either way.
    float v = std::uniform_real_distribution<float>(0.25f, 8.0f)(rng);
    return pick(0, 1) ? v : -v;
  };
  static const float kLiterals[] = {0.5f, 1.5f, 2.0f, 3.0f, 0.25f, 10.0f};

  GenProgram p;
  int k = pick(1, 4);
  for (int j = 1; j <= k; ++j)
    p.inputs.push_back("x" + std::to_string(j));
  bool separateOut = pick(0, 2) != 0;
  p.output = separateOut ? "z" : p.inputs[0];

  // Leaves: every input once, then random extra leaves. Combining m+1 leaves
  // pairwise yields exactly m binary ops.
  int ops = pick(std::max(1, k - 1), 6);
  std::vector<std::shared_ptr<GenExpr>> pool;
  for (int j = 0; j < ops + 1; ++j) {
    auto leaf = std::make_shared<GenExpr>();
    int choice = j < k ? 0 : pick(0, 3);
    if (choice <= 1) {
      leaf->kind = GenExpr::Kind::Input;
      leaf->input = j < k ? j : pick(0, k - 1);
    } else if (choice == 2) {
      leaf->kind = GenExpr::Kind::Scalar;
    } else {
      leaf->kind = GenExpr::Kind::Literal;
      leaf->literal = kLiterals[pick(0, 5)];
    }
    pool.push_back(leaf);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  static const char kOps[] = {'+', '-', '*', '/'};
  while (pool.size() > 1) {
    std::size_t a = pick(0, static_cast<int>(pool.size()) - 1);
    auto lhs = pool[a];
    pool.erase(pool.begin() + a);
    std::size_t b = pick(0, static_cast<int>(pool.size()) - 1);
    auto rhs = pool[b];
    pool.erase(pool.begin() + b);
    auto node = std::make_shared<GenExpr>();
    node->kind = GenExpr::Kind::Binary;
    node->op = kOps[pick(0, 3)];
    node->lhs = lhs;
    node->rhs = rhs;
    pool.push_back(node);
  }
  p.expr = pool.front();
  p.numTeams = pick(1, maxTeams);
  p.n = std::uniform_int_distribution<int64_t>(1, maxN)(rng);
  p.scalar = value();
  p.inputData.assign(k, std::vector<float>(p.n));
  for (auto &arr : p.inputData)
    for (float &v : arr)
      v = value();
  if (separateOut) {
    p.outputInit.resize(p.n);
    for (float &v : p.outputInit)
      v = value();
  }

  std::string args = "n, s";
  std::string arrays;
  for (const std::string &in : p.inputs) {
    args += ", " + in;
    arrays += (arrays.empty() ? "" : ", ") + in + "(n)";
  }
  if (separateOut) {
    args += ", z";
    arrays += ", z(n)";
  }
  p.source = "subroutine gen(" + args + ")\n" +
             "  integer :: n\n"
             "  real :: s\n"
             "  real :: " +
             arrays + "\n" + "  integer :: i\n" +
             "  !$omp target teams distribute parallel do num_teams(" +
             std::to_string(p.numTeams) + ")\n" + "  do i = 1, n\n" + "    " + p.output +
             "(i) = " + p.expr->str(p.inputs) + "\n" + "  end do\n" +
             "  !$omp end target teams distribute parallel do\n" + "end subroutine\n";
  return p;
}

} // namespace tenflow::testing

#endif // TENFLOW_TESTS_SUPPORT_PROGRAMGEN_H
