// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Simulator/CircularBuffer.h"

using namespace tenflow;
using namespace tenflow::sim;

const char *sim::cbOpName(CbOp op) {
  switch (op) {
  case CbOp::Reserve:
    return "reserve";
  case CbOp::Push:
    return "push";
  case CbOp::Wait:
    return "wait";
  case CbOp::Pop:
    return "pop";
  }
  return "?";
}

CbResult sim::cbTransition(CbCounts &cb, CbOp op, int64_t n) {
  if (n < 1)
    return {CbStatus::Violation, std::string(cbOpName(op)) + " of fewer than one tile"};
  switch (op) {
  case CbOp::Reserve:
    if (cb.capacity - cb.queued - cb.reserved < n)
      return {CbStatus::Block, {}};
    cb.reserved += n;
    return {};
  case CbOp::Push:
    if (cb.reserved < n)
      return {CbStatus::Violation, "push of " + std::to_string(n) +
                                       " tiles without a matching reserve (reserved " +
                                       std::to_string(cb.reserved) + ")"};
    cb.reserved -= n;
    cb.queued += n;
    return {};
  case CbOp::Wait:
    if (cb.queued < n)
      return {CbStatus::Block, {}};
    cb.waited = std::max(cb.waited, n);
    return {};
  case CbOp::Pop:
    if (cb.waited < n)
      return {CbStatus::Violation, "pop of " + std::to_string(n) +
                                       " tiles without a matching wait (waited " +
                                       std::to_string(cb.waited) + ")"};
    cb.waited -= n;
    cb.queued -= n;
    return {};
  }
  return {};
}

CbResult CircularBuffer::apply(CbOp op, int64_t n) {
  CbResult r = cbTransition(counts, op, n);
  if (r.status != CbStatus::Ok)
    return r;
  if (op == CbOp::Push) {
    for (int64_t i = 0; i < n; ++i) {
      if (staged.empty()) {
        queue.push_back(nullptr);
      } else {
        queue.push_back(staged.front());
        staged.erase(staged.begin());
      }
    }
  } else if (op == CbOp::Pop) {
    for (int64_t i = 0; i < n; ++i)
      queue.pop_front();
  }
  return r;
}

bool CircularBuffer::writeSlot(exec::TileRef tile, std::string &error) {
  if (static_cast<int64_t>(staged.size()) >= counts.reserved) {
    error = "write into a circular buffer slot that was not reserved";
    return false;
  }
  staged.push_back(std::move(tile));
  return true;
}

exec::TileRef CircularBuffer::front(std::string &error) const {
  if (counts.waited < 1) {
    error = "read from a circular buffer before waiting for data";
    return nullptr;
  }
  if (!queue.front()) {
    error = "read of a circular buffer slot that was pushed without being written";
    return nullptr;
  }
  return queue.front();
}
