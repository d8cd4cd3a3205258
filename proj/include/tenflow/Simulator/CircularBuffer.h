// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_SIMULATOR_CIRCULARBUFFER_H
#define TENFLOW_SIMULATOR_CIRCULARBUFFER_H

#include "tenflow/Exec/Value.h"

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

namespace tenflow::sim {

enum class CbOp { Reserve, Push, Wait, Pop };
enum class CbStatus { Ok, Block, Violation };

const char *cbOpName(CbOp op);

/// Occupancy bookkeeping of one circular buffer, in tiles.
struct CbCounts {
  int64_t capacity = 0;
  /// Pushed and not yet popped.
  int64_t queued = 0;
  /// Claimed by the producer and not yet pushed.
  int64_t reserved = 0;
  /// Front tiles the consumer has waited for and not yet popped.
  int64_t waited = 0;

  bool invariantHolds() const {
    return queued >= 0 && reserved >= 0 && waited >= 0 && waited <= queued &&
           queued + reserved <= capacity;
  }
  bool operator==(const CbCounts &) const = default;
};

struct CbResult {
  CbStatus status = CbStatus::Ok;
  std::string message;
};

/// The pure state machine: reserve blocks unless `capacity - queued -
/// reserved >= n`; wait blocks unless `queued >= n`; push needs `reserved >=
/// n` and pop needs `waited >= n`, otherwise they are protocol violations.
/// A blocked or violating op leaves `cb` unchanged.
CbResult cbTransition(CbCounts &cb, CbOp op, int64_t n);

/// A circular buffer carrying tile contents. Producers write into reserved
/// slots (staged) and push them; consumers read the front after waiting.
class CircularBuffer {
public:
  explicit CircularBuffer(int64_t capacity = 0) { counts.capacity = capacity; }

  CbResult apply(CbOp op, int64_t n);
  /// Fills the next reserved slot. Fails if every reserved slot is written.
  bool writeSlot(exec::TileRef tile, std::string &error);
  /// The oldest waited-for tile.
  exec::TileRef front(std::string &error) const;

  const CbCounts &state() const { return counts; }
  const std::deque<exec::TileRef> &contents() const { return queue; }

private:
  CbCounts counts;
  std::deque<exec::TileRef> queue;
  std::vector<exec::TileRef> staged;
};

} // namespace tenflow::sim

#endif // TENFLOW_SIMULATOR_CIRCULARBUFFER_H
