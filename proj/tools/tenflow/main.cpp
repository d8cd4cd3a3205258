// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Driver/Driver.h"

#include <iostream>

int main(int argc, char **argv) {
  return tenflow::driver::runCli(argc, argv, std::cout, std::cerr);
}
