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

#ifndef ORDSUM_SERIES_HPP
#define ORDSUM_SERIES_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ordsum/ordinal.hpp"
#include "ordsum/ordinal_set.hpp"

namespace ordsum {

// A finitely described transfinite sequence of ordinals. Either a finite list
// (`fin`) or a concatenation `prefix_0 ... prefix_p` followed by the block
// `period_0 ... period_k` repeated w times (`cat`). Descriptions are immutable
// trees; copies share structure.
class Series {
 public:
  struct Fin {
    std::vector<Ordinal> items;
  };
  struct Cat {
    std::vector<Series> prefix;
    std::vector<Series> period;
  };

  Series();  // fin()

  static Series fin(std::vector<Ordinal> items);
  // Throws EmptyPeriod for an empty period and InvalidValue for a period
  // member of order type 0.
  static Series cat(std::vector<Series> prefix, std::vector<Series> period);

  bool is_fin() const noexcept { return std::holds_alternative<Fin>(node_->body); }
  const Fin& as_fin() const { return std::get<Fin>(node_->body); }
  const Cat& as_cat() const { return std::get<Cat>(node_->body); }

  const Ordinal& order_type() const noexcept { return node_->order_type; }
  const Ordinal& total_sum() const noexcept { return node_->total_sum; }

  friend bool operator==(const Series& a, const Series& b);

 private:
  struct Node {
    std::variant<Fin, Cat> body;
    Ordinal order_type;
    Ordinal total_sum;
  };
  explicit Series(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline const Ordinal& order_type(const Series& s) { return s.order_type(); }
// Sum of the terms in their given order.
inline const Ordinal& total_sum(const Series& s) { return s.total_sum(); }

// Throws IndexOutOfRange unless i < order_type(s).
Ordinal term_at(const Series& s, const Ordinal& i);
// Sum of the terms at positions >= g. Throws IndexOutOfRange unless g < order_type(s).
Ordinal tail_sum(const Series& s, const Ordinal& g);

struct TailReport {
  OrdinalSet values;
  Ordinal minimum;
  Ordinal witness;  // least position whose tail sums to `minimum`
};

// Every tail sum, computed once per periodic phase. Requires order_type(s) >= 1.
TailReport tail_sum_set(const Series& s);

// Smallest tail sum; 0 for finite series.
Ordinal psi(const Series& s);

struct PositionedTerm {
  Ordinal position;
  Ordinal value;
  friend bool operator==(const PositionedTerm&, const PositionedTerm&) = default;
};

// Terms dominated by only finitely many others, with their positions.
// Requires order_type(s) = w; throws UnsupportedOrderType otherwise.
std::vector<PositionedTerm> exceptional_multiset(const Series& s);

struct Support {
  enum class Kind { absent, finite, infinite };
  Kind kind = Kind::absent;
  Natural count = 0;  // meaningful when kind == finite

  static Support absent() { return {}; }
  static Support finite(Natural n) { return n == 0 ? Support{} : Support{Kind::finite, std::move(n)}; }
  static Support infinite() { return {Kind::infinite, 0}; }
  friend bool operator==(const Support&, const Support&) = default;
};

// Multiplicity class of `v` among the terms of `s`.
Support value_support(const Series& s, const Ordinal& v);
// Distinct term values in order of first appearance.
std::vector<Ordinal> distinct_values(const Series& s);

// ---------------------------------------------------------------------------
// Structural slicing. Positions are ordinals; g may equal the order type.

// Terms at positions >= g.
Series drop(const Series& s, const Ordinal& g);
// Terms at positions < g, as a list of segments to be read in order (the
// prefix of a series need not itself be representable, e.g. type w+1).
std::vector<Series> take(const Series& s, const Ordinal& g);
// segments followed by tail. Throws InvalidValue when the result would not be
// representable (an infinite segment followed by a finite tail).
Series concat(const std::vector<Series>& segments, const Series& tail);

// ---------------------------------------------------------------------------
// Flat form of a w-series: prefix then period repeated forever.

struct OmegaForm {
  std::vector<Ordinal> prefix;
  std::vector<Ordinal> period;  // nonempty

  const Ordinal& at(std::size_t k) const {
    return k < prefix.size() ? prefix[k] : period[(k - prefix.size()) % period.size()];
  }
  // Shortest period, then shortest prefix; equal sequences normalize equally.
  OmegaForm normalized() const;
  Series to_series() const;
  friend bool operator==(const OmegaForm&, const OmegaForm&) = default;
};

// Throws UnsupportedOrderType unless order_type(s) = w.
OmegaForm to_omega_form(const Series& s);

// The two w-blocks of a series of type w*2.
struct BlockPair {
  OmegaForm first;
  OmegaForm second;
  Series to_series() const;
};

// Throws UnsupportedOrderType unless order_type(s) = w*2.
BlockPair split_blocks(const Series& s);

// True when both denote the same sequence of terms. Decided exactly for
// finite, w and w*2 series; other order types compare structurally.
bool same_terms(const Series& a, const Series& b);

// `fin(1,w)`, `cat([fin(w^2),fin(w)];[fin(1)])`
std::string to_string(const Series& s);
// Throws ParseError, EmptyPeriod.
Series parse_series(std::string_view text);

}  // namespace ordsum

#endif  // ORDSUM_SERIES_HPP
