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

#ifndef ORDSUM_ORACLE_HPP
#define ORDSUM_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordsum/enumerate.hpp"
#include "ordsum/ordinal.hpp"
#include "ordsum/series.hpp"

namespace ordsum {

enum class BlockShape { omega, omega2 };

struct InstanceSpec {
  std::uint64_t seed = 0;
  std::size_t max_exceptional = 0;  // clamped to 5
  std::size_t core_values = 1;      // clamped to 1..4
  BlockShape shape = BlockShape::omega;
};

// Deterministic instance: core values from {1, w, w*2, w^2} repeated through an
// odd-length period, preceded by exactly `max_exceptional` larger terms. For
// omega2 the exceptional terms are split between the two blocks.
Series generate_instance(const InstanceSpec& params);

// Sums of apply(m, s) over canonical_family(s, depth), evaluated only through
// apply and total_sum. A lower bound on the bijective sum set.
EnumerationResult oracle_sums(const Series& s, std::size_t depth);

enum class Verdict { equal, oracle_proper_subset, unsound };

struct DifferentialReport {
  EnumerationResult oracle;
  EnumerationResult structural;
  Verdict verdict = Verdict::equal;
  std::optional<WitnessedSum> counterexample;  // an oracle sum missing from structural
  std::size_t depth = 0;
};

DifferentialReport differential_run(const Series& s, std::size_t depth);

std::string to_string(Verdict v);
// The structural result in report form, followed by `oracle: {...}`,
// `verdict: ...` and, for unsound runs, `counterexample: SUM via MAP`.
std::string to_report(const DifferentialReport& r);

// Explicit well-orders for cross-checking the arithmetic: a well-order is a
// sequence of blocks, block e having order type w^e.
namespace wellorder {

struct WellOrder {
  std::vector<std::uint32_t> blocks;
};

// Requires finite exponents and a coefficient total of at most 2^20.
WellOrder encode(const Ordinal& a);
WellOrder concatenate(const WellOrder& a, const WellOrder& b);
// b copies of a, ordered by b first.
WellOrder lex_product(const WellOrder& a, const WellOrder& b);
Ordinal order_type(const WellOrder& w);

}  // namespace wellorder

}  // namespace ordsum

#endif  // ORDSUM_ORACLE_HPP
