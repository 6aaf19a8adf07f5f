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

#ifndef MATROIDX_ELEMENT_SET_HPP
#define MATROIDX_ELEMENT_SET_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace matroidx {

using ElementId = uint32_t;

// Set of element ids over a fixed-capacity universe [0, capacity).
// Backed by 64-bit words; membership is O(1) and iteration is proportional
// to the number of words, which keeps the brute-force suites fast.
class ElementSet {
 public:
  ElementSet() : capacity_(0) {}
  explicit ElementSet(size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
  ElementSet(size_t capacity, std::initializer_list<ElementId> ids)
      : ElementSet(capacity) {
    for (ElementId id : ids) add(id);
  }

  size_t capacity() const { return capacity_; }

  void add(ElementId id);
  void remove(ElementId id);
  bool contains(ElementId id) const {
    return id < capacity_ && (words_[id >> 6] >> (id & 63)) & 1u;
  }
  size_t size() const;
  bool empty() const;
  void clear();

  // First member or capacity() when empty.
  ElementId first() const;

  std::vector<ElementId> to_vector() const;
  void for_each(const std::function<void(ElementId)>& fn) const;

  ElementSet intersect(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;
  ElementSet minus(const ElementSet& other) const;
  ElementSet symmetric_difference(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const;
  bool operator!=(const ElementSet& other) const { return !(*this == other); }

  // Order on the sorted member sequences; used for deterministic tie-breaks.
  bool lexicographically_before(const ElementSet& other) const;

  std::string to_string() const;

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  size_t capacity_;
  std::vector<uint64_t> words_;
};

ElementSet set_of(size_t capacity, const std::vector<ElementId>& ids);

}  // namespace matroidx

#endif  // MATROIDX_ELEMENT_SET_HPP
