// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_TESTS_SUPPORT_PARTITION_H
#define TENFLOW_TESTS_SUPPORT_PARTITION_H

#include "tenflow/Passes/TilePartition.h"

#include <algorithm>
#include <string>
#include <vector>

namespace tenflow::testing {

/// Brute-force check of a partition: every tile owned exactly once, runs
/// contiguous and in core order, sizes within one of each other. Returns an
/// empty string on success.
inline std::string checkPartition(const passes::TilePartition &p, int64_t n, int64_t tile,
                                  int64_t cores) {
  int64_t total = (n + tile - 1) / tile;
  if (p.totalTiles != total)
    return "total tiles";
  if (p.tailLen != n % tile)
    return "tail length";
  if (static_cast<int64_t>(p.assignments.size()) != cores)
    return "assignment count";
  std::vector<int> owners(total, 0);
  int64_t next = 0, largest = 0, smallest = total;
  for (int64_t c = 0; c < cores; ++c) {
    const passes::TileAssignment &a = p.assignments[c];
    if (a.startTile != next || a.numTiles < 0)
      return "core " + std::to_string(c) + " is not contiguous";
    for (int64_t t = a.startTile; t < a.startTile + a.numTiles; ++t) {
      if (t >= total)
        return "tile beyond the end";
      ++owners[t];
    }
    if (c > 0 && a.numTiles > p.assignments[c - 1].numTiles)
      return "later core holds more tiles";
    largest = std::max(largest, a.numTiles);
    smallest = std::min(smallest, a.numTiles);
    next += a.numTiles;
  }
  for (int64_t t = 0; t < total; ++t)
    if (owners[t] != 1)
      return "tile " + std::to_string(t) + " owned " + std::to_string(owners[t]) + " times";
  if (largest - smallest > 1)
    return "unbalanced";
  return "";
}

} // namespace tenflow::testing

#endif // TENFLOW_TESTS_SUPPORT_PARTITION_H
