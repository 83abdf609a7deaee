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

#ifndef ORDSUM_ENUMERATE_HPP
#define ORDSUM_ENUMERATE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordsum/ordinal.hpp"
#include "ordsum/ordinal_set.hpp"
#include "ordsum/rearrange.hpp"
#include "ordsum/series.hpp"

namespace ordsum {

struct WitnessedSum {
  Ordinal sum;
  MapSpec witness;
};

// A set of achievable sums, each with one map realizing it. `complete` is set
// when the set is exact rather than a bounded exploration.
class EnumerationResult {
 public:
  EnumerationResult(bool complete, std::optional<std::size_t> bound)
      : complete_(complete), bound_(bound) {}

  // Keeps the preferred witness per sum: fewer steps, then the
  // lexicographically least MoveFront source tuple.
  void add(const Ordinal& sum, const MapSpec& witness);
  void merge(const EnumerationResult& other);

  bool complete() const noexcept { return complete_; }
  std::optional<std::size_t> bound() const noexcept { return bound_; }
  const std::vector<WitnessedSum>& entries() const noexcept { return entries_; }
  OrdinalSet sums() const;
  const MapSpec* witness_for(const Ordinal& sum) const;

 private:
  bool complete_;
  std::optional<std::size_t> bound_;
  std::vector<WitnessedSum> entries_;  // ascending by sum
};

// Line report: `complete: true|false`, `bound: N` (bounded results only),
// then one `sum<TAB>witness` line per element, ascending.
std::string to_report(const EnumerationResult& r);
EnumerationResult parse_report(std::string_view text);

// Exact sum set over bijections of w: every ordering of the exceptional
// multiset followed by psi(s). Witnesses are MoveFront maps.
EnumerationResult enum_bijective_omega(const Series& s);

struct RemainderTriple {
  Ordinal mu1;  // psi of the first block
  Ordinal mu2;  // psi of the second block
  Ordinal mu3;  // psi of the EvenOdd rearrangement
  Series source1;
  Series source2;
  Series source3;
};
RemainderTriple remainder_triple(const Series& s);

// mu1, mu2 or mu3 according to which of A, B (see ab_classify) are infinite.
Ordinal classify_remainder(const Series& s, const MapSpec& m);

// Sums sigma1(E1) + mu_i + sigma2(E2) + mu_j over ordered partitions of the
// exceptional terms and remainder pairs covering both blocks. Only sums with
// a constructed, re-evaluated witness are emitted.
EnumerationResult enum_bijective_omega2(const Series& s);

// Bounded exploration of injective re-indexings of w: for every value keep
// all of its occurrences or at most `bound` of them.
EnumerationResult enum_injective_bounded(const Series& s, std::size_t bound);

// Bounded exploration of arbitrary maps of w. Witnesses are maps on s.
EnumerationResult enum_map_bounded(const Series& s, std::size_t bound);

// Segment-wise reduction of a composite series to a single w-series U of
// segment sums (padded with zeros). Reports both sides; asserts nothing.
struct Theorem1Report {
  std::vector<Series> segments;
  std::vector<OrdinalSet> segment_sums;  // bounded injective sums per segment
  Series reduced;                        // U
  OrdinalSet reduced_sums;               // bounded injective sums of U
  std::optional<OrdinalSet> bijective_sums;  // exact bijective sums of s (w, w*2)
  std::optional<OrdinalSet> injective_sums;  // bounded injective sums of s
  std::size_t bound = 0;
};
Theorem1Report theorem1_reduce(const Series& s, std::size_t bound);
std::string to_report(const Theorem1Report& r);

// Bounded injective sums for series of type w*2 (blockwise retention followed
// by the bijective enumeration), and for finite series (all orderings).
OrdinalSet injective_sums_bounded(const Series& s, std::size_t bound);

namespace detail {
// Bijective sums of a w-series from the grouped closed form, without
// witnesses. An independent route to enum_bijective_omega(s).sums().
OrdinalSet bijective_sums_grouped(const Series& s);
}  // namespace detail

}  // namespace ordsum

#endif  // ORDSUM_ENUMERATE_HPP
