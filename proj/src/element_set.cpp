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

#include "matroidx/element_set.hpp"

#include <bit>
#include <sstream>

#include "matroidx/errors.hpp"

namespace matroidx {

void ElementSet::add(ElementId id) {
  if (id >= capacity_) {
    throw InputError("element id " + std::to_string(id) +
                     " outside universe of size " + std::to_string(capacity_));
  }
  words_[id >> 6] |= (uint64_t{1} << (id & 63));
}

void ElementSet::remove(ElementId id) {
  if (id >= capacity_) {
    throw InputError("element id " + std::to_string(id) +
                     " outside universe of size " + std::to_string(capacity_));
  }
  words_[id >> 6] &= ~(uint64_t{1} << (id & 63));
}

size_t ElementSet::size() const {
  size_t n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool ElementSet::empty() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void ElementSet::clear() {
  for (uint64_t& w : words_) w = 0;
}

ElementId ElementSet::first() const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<ElementId>(i * 64 + std::countr_zero(words_[i]));
    }
  }
  return static_cast<ElementId>(capacity_);
}

std::vector<ElementId> ElementSet::to_vector() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for_each([&out](ElementId id) { out.push_back(id); });
  return out;
}

void ElementSet::for_each(const std::function<void(ElementId)>& fn) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    uint64_t w = words_[i];
    while (w != 0) {
      int bit = std::countr_zero(w);
      fn(static_cast<ElementId>(i * 64 + bit));
      w &= w - 1;
    }
  }
}

namespace {

void require_same_capacity(const ElementSet& a, const ElementSet& b) {
  if (a.capacity() != b.capacity()) {
    throw InputError("element sets over different universes");
  }
}

}  // namespace

ElementSet ElementSet::intersect(const ElementSet& other) const {
  require_same_capacity(*this, other);
  ElementSet out(capacity_);
  for (size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] & other.words_[i];
  }
  return out;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  require_same_capacity(*this, other);
  ElementSet out(capacity_);
  for (size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] | other.words_[i];
  }
  return out;
}

ElementSet ElementSet::minus(const ElementSet& other) const {
  require_same_capacity(*this, other);
  ElementSet out(capacity_);
  for (size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] & ~other.words_[i];
  }
  return out;
}

ElementSet ElementSet::symmetric_difference(const ElementSet& other) const {
  require_same_capacity(*this, other);
  ElementSet out(capacity_);
  for (size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] ^ other.words_[i];
  }
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  require_same_capacity(*this, other);
  for (size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  require_same_capacity(*this, other);
  for (size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool ElementSet::operator==(const ElementSet& other) const {
  return capacity_ == other.capacity_ && words_ == other.words_;
}

bool ElementSet::lexicographically_before(const ElementSet& other) const {
  require_same_capacity(*this, other);
  std::vector<ElementId> a = to_vector();
  std::vector<ElementId> b = other.to_vector();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for_each([&](ElementId id) {
    if (!first) os << ",";
    os << id;
    first = false;
  });
  os << "}";
  return os.str();
}

ElementSet set_of(size_t capacity, const std::vector<ElementId>& ids) {
  ElementSet s(capacity);
  for (ElementId id : ids) s.add(id);
  return s;
}

}  // namespace matroidx
