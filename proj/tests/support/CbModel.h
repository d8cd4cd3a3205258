// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef TENFLOW_TESTS_SUPPORT_CBMODEL_H
#define TENFLOW_TESTS_SUPPORT_CBMODEL_H

#include "tenflow/Simulator/CircularBuffer.h"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace tenflow::testing {

/// Reference circular buffer written as a ring of slots, the way the
/// hardware lays it out. It shares no code with the simulator's counter
/// model, so the two can be checked against each other.
class SlotRing {
public:
  enum class Slot { Free, Reserved, Filled };

  explicit SlotRing(int capacity) : slots(capacity, Slot::Free), tags(capacity, -1) {}

  /// Returns 0 on success, 1 if the op must block, 2 on a protocol error.
  int apply(sim::CbOp op, int n) {
    int cap = static_cast<int>(slots.size());
    switch (op) {
    case sim::CbOp::Reserve: {
      if (count(Slot::Free) < n)
        return 1;
      // Free slots are the ones after the filled and reserved run.
      int pos = (head + count(Slot::Filled) + count(Slot::Reserved)) % cap;
      for (int i = 0; i < n; ++i)
        slots[(pos + i) % cap] = Slot::Reserved;
      return 0;
    }
    case sim::CbOp::Push: {
      if (count(Slot::Reserved) < n)
        return 2;
      int pos = (head + count(Slot::Filled)) % cap;
      for (int i = 0; i < n; ++i) {
        slots[(pos + i) % cap] = Slot::Filled;
        tags[(pos + i) % cap] = nextTag++;
      }
      return 0;
    }
    case sim::CbOp::Wait:
      if (count(Slot::Filled) < n)
        return 1;
      waited = std::max(waited, n);
      return 0;
    case sim::CbOp::Pop:
      if (waited < n)
        return 2;
      for (int i = 0; i < n; ++i) {
        slots[head] = Slot::Free;
        tags[head] = -1;
        head = (head + 1) % cap;
      }
      waited -= n;
      return 0;
    }
    return 2;
  }

  int count(Slot s) const {
    int c = 0;
    for (Slot x : slots)
      c += x == s;
    return c;
  }
  int frontTag() const { return tags[head]; }
  int pushed() const { return nextTag; }

private:
  std::vector<Slot> slots;
  std::vector<int> tags;
  int head = 0;
  int waited = 0;
  int nextTag = 0;
};

/// The simulator's buffer paired with the reference ring. Producers stamp
/// each tile with its push sequence number so FIFO order is observable.
struct CbPair {
  sim::CircularBuffer sim;
  SlotRing ring;

  sim::CbStatus lastStatus = sim::CbStatus::Ok;

  explicit CbPair(int capacity) : sim(capacity), ring(capacity) {}

  /// Applies one op to both models and returns a description of the first
  /// disagreement or invariant failure, or "" if they agree.
  std::string step(sim::CbOp op, int n) {
    std::string err;
    if (op == sim::CbOp::Push && sim.state().reserved >= n) {
      // Fill reserved slots with the tags they will get once pushed.
      int base = ring.pushed();
      for (int i = 0; i < n; ++i) {
        auto tile = std::make_shared<exec::TileData>(1, static_cast<float>(base + i));
        if (!sim.writeSlot(tile, err))
          return "writeSlot failed: " + err;
      }
    }
    sim::CbStatus s = sim.apply(op, n).status;
    int r = ring.apply(op, n);
    int expected = s == sim::CbStatus::Ok ? 0 : s == sim::CbStatus::Block ? 1 : 2;
    std::string what = std::string(sim::cbOpName(op)) + " " + std::to_string(n);
    if (expected != r)
      return what + ": simulator status " + std::to_string(expected) + ", reference " +
             std::to_string(r);
    lastStatus = s;
    const sim::CbCounts &c = sim.state();
    if (!c.invariantHolds() || c.queued + c.reserved > c.capacity)
      return what + ": occupancy invariant broken";
    if (c.queued != ring.count(SlotRing::Slot::Filled) ||
        c.reserved != ring.count(SlotRing::Slot::Reserved))
      return what + ": occupancy differs from reference";
    if (static_cast<int64_t>(sim.contents().size()) != c.queued)
      return what + ": queue length differs from count";
    if (c.queued > 0 && c.waited > 0) {
      exec::TileRef front = sim.front(err);
      if (!front)
        return what + ": front failed: " + err;
      if (static_cast<int>((*front)[0]) != ring.frontTag())
        return what + ": FIFO order broken";
    }
    return "";
  }
};

struct ModelCheckStats {
  /// Distinct (counts, remaining length) nodes expanded.
  uint64_t states = 0;
  /// Op applications compared between the two models.
  uint64_t transitions = 0;
  std::string failure;
};

/// Explores every op sequence of length <= maxLen over {reserve, push, wait,
/// pop} x n in [1, maxN]. Sequences reaching an already explored
/// (counts, remaining length) pair behave identically from there on, so
/// subtrees are not re-walked.
inline ModelCheckStats exhaustiveCbCheck(int capacity, int maxLen, int maxN) {
  ModelCheckStats stats;
  const sim::CbOp ops[] = {sim::CbOp::Reserve, sim::CbOp::Push, sim::CbOp::Wait,
                           sim::CbOp::Pop};
  std::set<std::tuple<int64_t, int64_t, int64_t, int>> seen;
  std::function<void(const CbPair &, int)> visit = [&](const CbPair &pair, int remaining) {
    const sim::CbCounts &c = pair.sim.state();
    if (!seen.insert({c.queued, c.reserved, c.waited, remaining}).second)
      return;
    ++stats.states;
    if (remaining == 0)
      return;
    for (sim::CbOp op : ops)
      for (int n = 1; n <= maxN && stats.failure.empty(); ++n) {
        CbPair next = pair;
        ++stats.transitions;
        std::string why = next.step(op, n);
        if (!why.empty()) {
          stats.failure = "capacity " + std::to_string(capacity) + ": " + why;
          return;
        }
        // A protocol violation aborts the simulated program.
        if (next.lastStatus != sim::CbStatus::Violation)
          visit(next, remaining - 1);
      }
  };
  visit(CbPair(capacity), maxLen);
  return stats;
}

/// Random op streams; ops that would block are still applied (and must
/// leave both models unchanged).
inline std::string randomCbCheck(uint64_t seed, int ops) {
  std::mt19937_64 rng(seed);
  for (int capacity = 1; capacity <= 4; ++capacity) {
    CbPair pair(capacity);
    for (int i = 0; i < ops; ++i) {
      auto op = static_cast<sim::CbOp>(std::uniform_int_distribution<int>(0, 3)(rng));
      int n = std::uniform_int_distribution<int>(1, capacity + 1)(rng);
      std::string why = pair.step(op, n);
      if (!why.empty())
        return "capacity " + std::to_string(capacity) + " op " + std::to_string(i) + ": " + why;
    }
  }
  return "";
}

} // namespace tenflow::testing

#endif // TENFLOW_TESTS_SUPPORT_CBMODEL_H
