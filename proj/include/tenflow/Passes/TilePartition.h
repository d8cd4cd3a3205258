// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_PASSES_TILEPARTITION_H
#define TENFLOW_PASSES_TILEPARTITION_H

#include <cstdint>
#include <vector>

namespace tenflow::passes {

struct TileAssignment {
  int64_t startTile = 0;
  int64_t numTiles = 0;
  bool operator==(const TileAssignment &) const = default;
};

/// Blocked distribution of ceil(n / tileElems) tiles over cores: core c gets
/// a contiguous run, and the first `total % cores` cores get one extra tile.
struct TilePartition {
  int64_t tileElems = 1;
  int64_t totalTiles = 0;
  /// Valid elements in the final tile when it is partial, else 0.
  int64_t tailLen = 0;
  std::vector<TileAssignment> assignments;
};

TilePartition computeTilePartition(int64_t n, int64_t tileElems, int64_t numCores);

} // namespace tenflow::passes

#endif // TENFLOW_PASSES_TILEPARTITION_H
