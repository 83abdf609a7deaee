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

#include "ordsum/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "cursor.hpp"
#include "ordsum/errors.hpp"

namespace ordsum {

namespace {

// Upper bound on the number of periodic blocks `take` will unroll.
constexpr std::uint64_t kMaxUnrolledBlocks = 1'000'000;

const Ordinal& omega() {
  static const Ordinal w = Ordinal::omega();
  return w;
}

Ordinal sum_of_types(const std::vector<Series>& parts, std::size_t from = 0) {
  Ordinal total;
  for (std::size_t k = from; k < parts.size(); ++k) total = add(total, parts[k].order_type());
  return total;
}

Ordinal sum_of_sums(const std::vector<Series>& parts, std::size_t from = 0) {
  Ordinal total;
  for (std::size_t k = from; k < parts.size(); ++k) total = add(total, parts[k].total_sum());
  return total;
}

Ordinal fold_sum(const std::vector<Ordinal>& items, std::size_t from = 0) {
  Ordinal total;
  for (std::size_t k = from; k < items.size(); ++k) total = add(total, items[k]);
  return total;
}

// i = block * q + r with r < block, for i < block * w.
std::pair<Natural, Ordinal> split_periodic(const Ordinal& block, const Ordinal& i) {
  if (block.is_finite()) {
    const Natural b = block.finite_value();
    const Natural n = i.finite_value();
    return {n / b, Ordinal::natural(n % b)};
  }
  const Term& lead = block.terms().front();
  Natural k = 0;
  if (!i.is_zero() && degree(i) == lead.exponent) k = i.terms().front().coefficient;
  Natural q = k / lead.coefficient;
  while (q > 0 && mul(block, Ordinal::natural(q)) > i) --q;
  return {q, left_subtract(mul(block, Ordinal::natural(q)), i)};
}

struct Located {
  bool in_prefix;
  std::size_t index;
  Ordinal offset;
  Natural copies;  // whole periodic blocks before the position
};

Located locate(const Series::Cat& cat, Ordinal g) {
  for (std::size_t k = 0; k < cat.prefix.size(); ++k) {
    const Ordinal& t = cat.prefix[k].order_type();
    if (g < t) return {true, k, g, 0};
    g = left_subtract(t, g);
  }
  auto [q, r] = split_periodic(sum_of_types(cat.period), g);
  for (std::size_t j = 0; j < cat.period.size(); ++j) {
    const Ordinal& t = cat.period[j].order_type();
    if (r < t) return {false, j, r, q};
    r = left_subtract(t, r);
  }
  throw IndexOutOfRange("position beyond periodic block");
}

void require_position(const Series& s, const Ordinal& g) {
  if (!(g < s.order_type()))
    throw IndexOutOfRange("position " + to_string(g) + " not below order type " +
                          to_string(s.order_type()));
}

// (tail value, position) for every position, deduplicated per phase.
void collect_tails(const Series& s, const Ordinal& after, const Ordinal& offset,
                   std::map<Ordinal, Ordinal>& out) {
  auto record = [&](const Ordinal& value, const Ordinal& position) {
    auto [it, fresh] = out.emplace(value, position);
    if (!fresh && position < it->second) it->second = position;
  };
  if (s.is_fin()) {
    const auto& items = s.as_fin().items;
    Ordinal running = after;
    for (std::size_t k = items.size(); k-- > 0;) {
      running = add(items[k], running);
      record(running, add(offset, Ordinal(k)));
    }
    return;
  }
  const auto& cat = s.as_cat();
  const Ordinal periodic = mul(sum_of_sums(cat.period), omega());
  const Ordinal periodic_after = add(periodic, after);
  Ordinal position = offset;
  for (std::size_t k = 0; k < cat.prefix.size(); ++k) {
    Ordinal rest = add(sum_of_sums(cat.prefix, k + 1), periodic_after);
    collect_tails(cat.prefix[k], rest, position, out);
    position = add(position, cat.prefix[k].order_type());
  }
  for (std::size_t j = 0; j < cat.period.size(); ++j) {
    Ordinal rest = add(sum_of_sums(cat.period, j + 1), periodic_after);
    collect_tails(cat.period[j], rest, position, out);
    position = add(position, cat.period[j].order_type());
  }
}

void append_values(const Series& s, std::vector<Ordinal>& out) {
  auto note = [&](const Ordinal& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  if (s.is_fin()) {
    for (const Ordinal& v : s.as_fin().items) note(v);
    return;
  }
  for (const Series& p : s.as_cat().prefix) append_values(p, out);
  for (const Series& p : s.as_cat().period) append_values(p, out);
}

void append_segments(std::vector<Series>& out, const Series& piece) {
  if (piece.is_fin()) {
    if (piece.as_fin().items.empty()) return;
    if (!out.empty() && out.back().is_fin()) {
      auto items = out.back().as_fin().items;
      const auto& more = piece.as_fin().items;
      items.insert(items.end(), more.begin(), more.end());
      out.back() = Series::fin(std::move(items));
      return;
    }
  }
  out.push_back(piece);
}

// Segments of total type w, as produced by take(s, w), flattened.
OmegaForm segments_to_omega_form(const std::vector<Series>& segments) {
  OmegaForm form;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const Series& seg = segments[k];
    if (seg.is_fin()) {
      const auto& items = seg.as_fin().items;
      form.prefix.insert(form.prefix.end(), items.begin(), items.end());
      continue;
    }
    if (k + 1 != segments.size()) throw UnsupportedOrderType("segment list is not of type w");
    OmegaForm tail = to_omega_form(seg);
    form.prefix.insert(form.prefix.end(), tail.prefix.begin(), tail.prefix.end());
    form.period = std::move(tail.period);
  }
  if (form.period.empty()) throw UnsupportedOrderType("segment list is not of type w");
  return form;
}

}  // namespace

OrdinalSet set_union(const OrdinalSet& a, const OrdinalSet& b) {
  std::vector<Ordinal> out(a.values());
  out.insert(out.end(), b.begin(), b.end());
  return OrdinalSet(std::move(out));
}

OrdinalSet set_difference(const OrdinalSet& a, const OrdinalSet& b) {
  std::vector<Ordinal> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return OrdinalSet(std::move(out));
}

std::string to_string(const OrdinalSet& s) {
  std::string out = "{";
  for (const Ordinal& v : s) {
    if (out.size() > 1) out += ", ";
    out += to_string(v);
  }
  return out + "}";
}

Series::Series() : Series(fin({})) {}

Series Series::fin(std::vector<Ordinal> items) {
  auto node = std::make_shared<Node>();
  node->order_type = Ordinal(items.size());
  node->total_sum = fold_sum(items);
  node->body = Fin{std::move(items)};
  return Series(std::move(node));
}

Series Series::cat(std::vector<Series> prefix, std::vector<Series> period) {
  if (period.empty()) throw EmptyPeriod();
  for (const Series& p : period)
    if (p.order_type().is_zero()) throw InvalidValue("period member of order type 0");
  auto node = std::make_shared<Node>();
  node->order_type = add(sum_of_types(prefix), mul(sum_of_types(period), omega()));
  node->total_sum = add(sum_of_sums(prefix), mul(sum_of_sums(period), omega()));
  node->body = Cat{std::move(prefix), std::move(period)};
  return Series(std::move(node));
}

bool operator==(const Series& a, const Series& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_fin() != b.is_fin()) return false;
  if (a.is_fin()) return a.as_fin().items == b.as_fin().items;
  return a.as_cat().prefix == b.as_cat().prefix && a.as_cat().period == b.as_cat().period;
}

Ordinal term_at(const Series& s, const Ordinal& i) {
  require_position(s, i);
  if (s.is_fin()) return s.as_fin().items[i.to_u64()];
  const auto& cat = s.as_cat();
  Located at = locate(cat, i);
  return term_at(at.in_prefix ? cat.prefix[at.index] : cat.period[at.index], at.offset);
}

Ordinal tail_sum(const Series& s, const Ordinal& g) {
  require_position(s, g);
  if (s.is_fin()) return fold_sum(s.as_fin().items, g.to_u64());
  const auto& cat = s.as_cat();
  const Ordinal periodic = mul(sum_of_sums(cat.period), omega());
  Located at = locate(cat, g);
  if (at.in_prefix) {
    return add(tail_sum(cat.prefix[at.index], at.offset),
               add(sum_of_sums(cat.prefix, at.index + 1), periodic));
  }
  return add(tail_sum(cat.period[at.index], at.offset),
             add(sum_of_sums(cat.period, at.index + 1), periodic));
}

TailReport tail_sum_set(const Series& s) {
  if (s.order_type().is_zero()) throw IndexOutOfRange("tail_sum_set of an empty series");
  std::map<Ordinal, Ordinal> tails;
  collect_tails(s, Ordinal(), Ordinal(), tails);
  TailReport report;
  std::vector<Ordinal> values;
  for (const auto& [value, position] : tails) values.push_back(value);
  report.values = OrdinalSet(std::move(values));
  report.minimum = tails.begin()->first;
  report.witness = tails.begin()->second;
  return report;
}

Ordinal psi(const Series& s) {
  if (s.order_type().is_finite()) return Ordinal();
  return tail_sum_set(s).minimum;
}

std::vector<PositionedTerm> exceptional_multiset(const Series& s) {
  const OmegaForm form = to_omega_form(s);
  const Ordinal bound = *std::max_element(form.period.begin(), form.period.end());
  std::vector<PositionedTerm> out;
  for (std::size_t k = 0; k < form.prefix.size(); ++k)
    if (form.prefix[k] > bound) out.push_back({Ordinal(k), form.prefix[k]});
  return out;
}

Support value_support(const Series& s, const Ordinal& v) {
  if (s.is_fin()) {
    const auto& items = s.as_fin().items;
    return Support::finite(static_cast<std::uint64_t>(std::count(items.begin(), items.end(), v)));
  }
  const auto& cat = s.as_cat();
  for (const Series& p : cat.period)
    if (value_support(p, v).kind != Support::Kind::absent) return Support::infinite();
  Natural count = 0;
  for (const Series& p : cat.prefix) {
    Support part = value_support(p, v);
    if (part.kind == Support::Kind::infinite) return part;
    count += part.count;
  }
  return Support::finite(count);
}

std::vector<Ordinal> distinct_values(const Series& s) {
  std::vector<Ordinal> out;
  append_values(s, out);
  return out;
}

Series drop(const Series& s, const Ordinal& g) {
  if (g == s.order_type()) return Series::fin({});
  require_position(s, g);
  if (s.is_fin()) {
    const auto& items = s.as_fin().items;
    return Series::fin(std::vector<Ordinal>(items.begin() + static_cast<std::ptrdiff_t>(g.to_u64()), items.end()));
  }
  const auto& cat = s.as_cat();
  Located at = locate(cat, g);
  const auto& parts = at.in_prefix ? cat.prefix : cat.period;
  std::vector<Series> prefix;
  append_segments(prefix, drop(parts[at.index], at.offset));
  for (std::size_t k = at.index + 1; k < parts.size(); ++k) prefix.push_back(parts[k]);
  return Series::cat(std::move(prefix), cat.period);
}

std::vector<Series> take(const Series& s, const Ordinal& g) {
  if (s.order_type() < g) throw IndexOutOfRange("take beyond order type");
  std::vector<Series> out;
  if (g.is_zero()) return out;
  if (g == s.order_type()) {
    out.push_back(s);
    return out;
  }
  if (s.is_fin()) {
    const auto& items = s.as_fin().items;
    out.push_back(Series::fin(std::vector<Ordinal>(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(g.to_u64()))));
    return out;
  }
  const auto& cat = s.as_cat();
  Located at = locate(cat, g);
  auto take_into = [&](const Series& part, const Ordinal& n) {
    for (const Series& seg : take(part, n)) append_segments(out, seg);
  };
  if (at.in_prefix) {
    for (std::size_t k = 0; k < at.index; ++k) append_segments(out, cat.prefix[k]);
    take_into(cat.prefix[at.index], at.offset);
    return out;
  }
  for (const Series& p : cat.prefix) append_segments(out, p);
  if (at.copies * cat.period.size() > kMaxUnrolledBlocks)
    throw DomainError("take would unroll too many periodic blocks");
  for (Natural q = 0; q < at.copies; ++q)
    for (const Series& p : cat.period) append_segments(out, p);
  for (std::size_t j = 0; j < at.index; ++j) append_segments(out, cat.period[j]);
  take_into(cat.period[at.index], at.offset);
  return out;
}

Series concat(const std::vector<Series>& segments, const Series& tail) {
  std::vector<Series> parts;
  for (const Series& seg : segments) append_segments(parts, seg);
  if (tail.is_fin()) {
    append_segments(parts, tail);
    if (parts.empty()) return Series::fin({});
    if (parts.size() != 1 || !parts.front().is_fin())
      throw InvalidValue("concatenation ending in a finite block after an infinite one");
    return parts.front();
  }
  for (const Series& p : tail.as_cat().prefix) append_segments(parts, p);
  return Series::cat(std::move(parts), tail.as_cat().period);
}

OmegaForm OmegaForm::normalized() const {
  OmegaForm out = *this;
  const std::size_t n = out.period.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = out.period[i] == out.period[i - d];
    if (periodic) {
      out.period.resize(d);
      break;
    }
  }
  while (!out.prefix.empty() && out.prefix.back() == out.period.back()) {
    out.prefix.pop_back();
    std::rotate(out.period.rbegin(), out.period.rbegin() + 1, out.period.rend());
  }
  return out;
}

Series OmegaForm::to_series() const {
  std::vector<Series> head;
  if (!prefix.empty()) head.push_back(Series::fin(prefix));
  return Series::cat(std::move(head), {Series::fin(period)});
}

OmegaForm to_omega_form(const Series& s) {
  if (s.order_type() != omega())
    throw UnsupportedOrderType("expected a series of order type w, got " + to_string(s.order_type()));
  const auto& cat = s.as_cat();
  OmegaForm form;
  for (const Series& p : cat.prefix) {
    const auto& items = p.as_fin().items;
    form.prefix.insert(form.prefix.end(), items.begin(), items.end());
  }
  for (const Series& p : cat.period) {
    const auto& items = p.as_fin().items;
    form.period.insert(form.period.end(), items.begin(), items.end());
  }
  return form;
}

Series BlockPair::to_series() const {
  std::vector<Series> head{first.to_series()};
  if (!second.prefix.empty()) head.push_back(Series::fin(second.prefix));
  return Series::cat(std::move(head), {Series::fin(second.period)});
}

BlockPair split_blocks(const Series& s) {
  if (s.order_type() != mul(omega(), Ordinal(2)))
    throw UnsupportedOrderType("expected a series of order type w*2, got " + to_string(s.order_type()));
  return {segments_to_omega_form(take(s, omega())).normalized(), to_omega_form(drop(s, omega())).normalized()};
}

bool same_terms(const Series& a, const Series& b) {
  if (a.order_type() != b.order_type()) return false;
  const Ordinal& t = a.order_type();
  if (t.is_finite()) return a.as_fin().items == b.as_fin().items;
  if (t == omega()) return to_omega_form(a).normalized() == to_omega_form(b).normalized();
  if (t == mul(omega(), Ordinal(2))) {
    BlockPair x = split_blocks(a);
    BlockPair y = split_blocks(b);
    return x.first.normalized() == y.first.normalized() &&
           x.second.normalized() == y.second.normalized();
  }
  return a == b;
}

std::string to_string(const Series& s) {
  auto join = [](const std::vector<Series>& parts) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) out += ',';
      out += to_string(parts[k]);
    }
    return out;
  };
  if (s.is_fin()) {
    std::string out = "fin(";
    const auto& items = s.as_fin().items;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (k) out += ',';
      out += to_string(items[k]);
    }
    return out + ')';
  }
  return "cat([" + join(s.as_cat().prefix) + "];[" + join(s.as_cat().period) + "])";
}

namespace {

Series parse_series_expr(detail::Cursor& in);

std::vector<Series> parse_series_list(detail::Cursor& in) {
  std::vector<Series> out;
  if (in.peek("]")) return out;
  out.push_back(parse_series_expr(in));
  while (in.accept(",")) out.push_back(parse_series_expr(in));
  return out;
}

Series parse_series_expr(detail::Cursor& in) {
  if (in.accept("fin")) {
    in.expect("(");
    std::vector<Ordinal> items;
    if (!in.peek(")")) {
      items.push_back(detail::parse_ordinal_expr(in));
      while (in.accept(",")) items.push_back(detail::parse_ordinal_expr(in));
    }
    in.expect(")");
    return Series::fin(std::move(items));
  }
  if (in.accept("cat")) {
    in.expect("(");
    in.expect("[");
    std::vector<Series> prefix = parse_series_list(in);
    in.expect("]");
    in.expect(";");
    in.expect("[");
    if (in.peek("]")) throw EmptyPeriod();
    std::vector<Series> period = parse_series_list(in);
    in.expect("]");
    in.expect(")");
    return Series::cat(std::move(prefix), std::move(period));
  }
  in.fail({"fin(", "cat("});
}

}  // namespace

Series parse_series(std::string_view text) {
  detail::Cursor in(text);
  Series s = parse_series_expr(in);
  in.expect_end();
  return s;
}

}  // namespace ordsum
