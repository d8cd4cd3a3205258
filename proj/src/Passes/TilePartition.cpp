// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Passes/TilePartition.h"

#include <algorithm>

using namespace tenflow::passes;

TilePartition tenflow::passes::computeTilePartition(int64_t n, int64_t tileElems,
                                                    int64_t numCores) {
  n = std::max<int64_t>(n, 0);
  TilePartition p;
  p.tileElems = tileElems;
  p.totalTiles = (n + tileElems - 1) / tileElems;
  p.tailLen = n % tileElems;
  int64_t base = p.totalTiles / numCores;
  int64_t extra = p.totalTiles % numCores;
  for (int64_t c = 0; c < numCores; ++c) {
    TileAssignment a;
    a.numTiles = base + (c < extra ? 1 : 0);
    a.startTile = c * base + std::min(c, extra);
    p.assignments.push_back(a);
  }
  return p;
}
