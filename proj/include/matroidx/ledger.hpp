// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDX_LEDGER_HPP
#define MATROIDX_LEDGER_HPP

#include <atomic>
#include <cstdint>
#include <memory>

namespace matroidx {

struct LedgerCounts {
  uint64_t independence_calls = 0;
  uint64_t rank_calls = 0;
  uint64_t stored_elements_peak = 0;
  uint64_t passes = 0;
  uint64_t message_elements = 0;

  LedgerCounts operator-(const LedgerCounts& other) const {
    LedgerCounts d;
    d.independence_calls = independence_calls - other.independence_calls;
    d.rank_calls = rank_calls - other.rank_calls;
    d.stored_elements_peak = stored_elements_peak - other.stored_elements_peak;
    d.passes = passes - other.passes;
    d.message_elements = message_elements - other.message_elements;
    return d;
  }
};

// Monotone counters for oracle calls and model resources. Oracles are
// immutable after construction; the ledger is the one piece of mutable
// state, so increments are atomic.
class ResourceLedger {
 public:
  void count_independence() {
    independence_calls_.fetch_add(1, std::memory_order_relaxed);
  }
  void count_rank() { rank_calls_.fetch_add(1, std::memory_order_relaxed); }
  void record_stored(uint64_t current) {
    uint64_t prev = stored_elements_peak_.load(std::memory_order_relaxed);
    while (current > prev && !stored_elements_peak_.compare_exchange_weak(
                                 prev, current, std::memory_order_relaxed)) {
    }
  }
  void count_pass() { passes_.fetch_add(1, std::memory_order_relaxed); }
  void count_message_elements(uint64_t n) {
    message_elements_.fetch_add(n, std::memory_order_relaxed);
  }

  LedgerCounts snapshot() const {
    LedgerCounts c;
    c.independence_calls = independence_calls_.load(std::memory_order_relaxed);
    c.rank_calls = rank_calls_.load(std::memory_order_relaxed);
    c.stored_elements_peak =
        stored_elements_peak_.load(std::memory_order_relaxed);
    c.passes = passes_.load(std::memory_order_relaxed);
    c.message_elements = message_elements_.load(std::memory_order_relaxed);
    return c;
  }

 private:
  std::atomic<uint64_t> independence_calls_{0};
  std::atomic<uint64_t> rank_calls_{0};
  std::atomic<uint64_t> stored_elements_peak_{0};
  std::atomic<uint64_t> passes_{0};
  std::atomic<uint64_t> message_elements_{0};
};

using LedgerPtr = std::shared_ptr<ResourceLedger>;

inline LedgerPtr make_ledger() { return std::make_shared<ResourceLedger>(); }

}  // namespace matroidx

#endif  // MATROIDX_LEDGER_HPP
