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

#ifndef ORDSUM_REARRANGE_HPP
#define ORDSUM_REARRANGE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordsum/ordinal.hpp"
#include "ordsum/series.hpp"

namespace ordsum {

// A re-indexing of a series, written as a pipeline of combinator steps that
// are applied left to right. Applying a step to s yields the series whose
// term at i is the term of s at the step's source position for i.
class MapSpec {
 public:
  // Term i comes from position order[i] for i < n; identity beyond n.
  struct Permute {
    std::vector<std::size_t> order;
    friend bool operator==(const Permute&, const Permute&) = default;
  };
  // The listed source positions first, in order; the rest keep their order.
  struct MoveFront {
    std::vector<Ordinal> sources;
    friend bool operator==(const MoveFront&, const MoveFront&) = default;
  };
  // On type w*2: exchanges 2n with w+2n and fixes odd positions.
  struct EvenOdd {
    friend bool operator==(const EvenOdd&, const EvenOdd&) = default;
  };
  // On type w*2: exchanges the two w-blocks.
  struct SwapBlocks {
    friend bool operator==(const SwapBlocks&, const SwapBlocks&) = default;
  };
  // On type w: keeps the positions whose (eventually periodic) bit is 1.
  struct Mask {
    std::vector<bool> prefix;
    std::vector<bool> period;
    friend bool operator==(const Mask&, const Mask&) = default;
  };
  // On type w: repeats each source term count times in place (count 0 drops
  // it, count w inserts a w-block of copies).
  struct Repeat {
    std::vector<Ordinal> prefix;
    std::vector<Ordinal> period;
    friend bool operator==(const Repeat&, const Repeat&) = default;
  };
  using Step = std::variant<Permute, MoveFront, EvenOdd, SwapBlocks, Mask, Repeat>;

  MapSpec() : MapSpec(identity()) {}

  static MapSpec identity();
  static MapSpec permute(std::vector<std::size_t> order);
  static MapSpec move_front(std::vector<Ordinal> sources);
  static MapSpec even_odd();
  static MapSpec swap_blocks();
  static MapSpec mask(std::vector<bool> prefix, std::vector<bool> period);
  static MapSpec repeat(std::vector<Ordinal> prefix, std::vector<Ordinal> period);
  // `inner` is applied first.
  static MapSpec compose(const MapSpec& outer, const MapSpec& inner);

  // this first, then next.
  MapSpec then(const MapSpec& next) const { return compose(next, *this); }

  const std::vector<Step>& steps() const noexcept { return steps_; }

  friend bool operator==(const MapSpec&, const MapSpec&) = default;

 private:
  explicit MapSpec(std::vector<Step> steps) : steps_(std::move(steps)) {}
  std::vector<Step> steps_;
};

enum class MapKind { bijection, injection, general };

// Throws InapplicableMap when a step does not fit the series' order type.
Series apply(const MapSpec& m, const Series& s);

MapKind classify_kind(const MapSpec& m);

// A = {i >= w : f(i) < w}, B = {i >= w : f(i) >= w} for a bijection of w*2.
struct ABClass {
  bool a_infinite = false;
  bool b_infinite = false;
  friend bool operator==(const ABClass&, const ABClass&) = default;
};
ABClass ab_classify(const MapSpec& m);

enum class ImageClass { cofinite_image, coinfinite_image };
// For a bijection or injection of w: whether w minus the image is finite.
ImageClass inj_image_class(const MapSpec& m);

// Same order type and value set as s, with every value occurring infinitely
// often. Throws UnsupportedOrderType for finite series.
Series dup(const Series& s);

// Deterministic family of bijections used by the brute-force oracle. For w:
// every permutation of the first `depth` positions. For w*2: MoveFront over
// tuples (length <= depth) of the first `depth` positions of each block,
// alone and preceded by SwapBlocks or EvenOdd.
std::vector<MapSpec> canonical_family(const Series& s, std::size_t depth);

std::string to_string(MapKind k);
std::string to_string(ImageClass c);
// `mask([];[1,0]) ; permute([1,0])`
std::string to_string(const MapSpec& m);
MapSpec parse_map(std::string_view text);

}  // namespace ordsum

#endif  // ORDSUM_REARRANGE_HPP
