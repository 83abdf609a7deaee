/* Copyright 2026 The ordsum Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef ORDSUM_ORDINAL_SET_HPP
#define ORDSUM_ORDINAL_SET_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ordsum/ordinal.hpp"

namespace ordsum {

// Finite, deduplicated, ascending set of ordinals.
class OrdinalSet {
 public:
  OrdinalSet() = default;
  OrdinalSet(std::initializer_list<Ordinal> values) : OrdinalSet(std::vector<Ordinal>(values)) {}
  explicit OrdinalSet(std::vector<Ordinal> values) : items_(std::move(values)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  // Returns true when the value was not present.
  bool insert(const Ordinal& value) {
    auto it = std::lower_bound(items_.begin(), items_.end(), value);
    if (it != items_.end() && *it == value) return false;
    items_.insert(it, value);
    return true;
  }

  bool contains(const Ordinal& value) const {
    return std::binary_search(items_.begin(), items_.end(), value);
  }

  bool includes(const OrdinalSet& other) const {
    return std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
  }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Ordinal& min() const { return items_.front(); }
  const Ordinal& max() const { return items_.back(); }
  const std::vector<Ordinal>& values() const noexcept { return items_; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  friend bool operator==(const OrdinalSet&, const OrdinalSet&) = default;

 private:
  std::vector<Ordinal> items_;
};

OrdinalSet set_union(const OrdinalSet& a, const OrdinalSet& b);
OrdinalSet set_difference(const OrdinalSet& a, const OrdinalSet& b);

// `{w, w^2+w}`
std::string to_string(const OrdinalSet& s);

}  // namespace ordsum

#endif  // ORDSUM_ORDINAL_SET_HPP
