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

#include "ordsum/rearrange.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <utility>

#include "cursor.hpp"
#include "ordsum/errors.hpp"

namespace ordsum {

namespace {

const Ordinal& omega() {
  static const Ordinal w = Ordinal::omega();
  return w;
}

const Ordinal& omega_two() {
  static const Ordinal w2 = mul(Ordinal::omega(), Ordinal(2));
  return w2;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_count(const Ordinal& c) { return c.is_finite() || c == omega(); }

// Eventually periodic w-sequence defined pointwise; valid once both the
// pattern and its sources are periodic beyond `start` with period `length`.
OmegaForm tabulate(const std::function<Ordinal(std::size_t)>& at, std::size_t start,
                   std::size_t length) {
  OmegaForm out;
  for (std::size_t k = 0; k < start; ++k) out.prefix.push_back(at(k));
  for (std::size_t k = start; k < start + length; ++k) out.period.push_back(at(k));
  return out;
}

template <class T>
T periodic_at(const std::vector<T>& prefix, const std::vector<T>& period, std::size_t k) {
  return k < prefix.size() ? prefix[k] : period[(k - prefix.size()) % period.size()];
}

Series apply_permute(const MapSpec::Permute& p, const Series& s) {
  const std::size_t n = p.order.size();
  if (n == 0) return s;
  if (s.order_type() < Ordinal(n)) throw InapplicableMap("permute longer than the series");
  std::vector<Ordinal> head;
  for (const Series& seg : take(s, Ordinal(n))) {
    const auto& items = seg.as_fin().items;
    head.insert(head.end(), items.begin(), items.end());
  }
  std::vector<Ordinal> permuted;
  for (std::size_t i : p.order) permuted.push_back(head[i]);
  return concat({Series::fin(std::move(permuted))}, drop(s, Ordinal(n)));
}

Series apply_move_front(const MapSpec::MoveFront& mf, const Series& s) {
  if (mf.sources.empty()) return s;
  std::vector<Ordinal> front;
  for (const Ordinal& p : mf.sources) {
    if (!(p < s.order_type()))
      throw InapplicableMap("movefront source " + to_string(p) + " outside the series");
    front.push_back(term_at(s, p));
  }
  std::vector<Ordinal> sorted = mf.sources;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Series> pieces{Series::fin(std::move(front))};
  Ordinal cursor;
  for (const Ordinal& p : sorted) {
    for (const Series& seg : take(drop(s, cursor), left_subtract(cursor, p))) pieces.push_back(seg);
    cursor = add(p, Ordinal(1));
  }
  return concat(pieces, drop(s, cursor));
}

void require_omega_two(const Series& s, const char* what) {
  if (s.order_type() != omega_two())
    throw InapplicableMap(std::string(what) + " applies only to series of order type w*2");
}

const OmegaForm& require_omega(const Series& s, const char* what, OmegaForm& storage) {
  if (s.order_type() != omega())
    throw InapplicableMap(std::string(what) + " applies only to series of order type w");
  storage = to_omega_form(s);
  return storage;
}

Series apply_even_odd(const Series& s) {
  require_omega_two(s, "evenodd");
  const BlockPair blocks = split_blocks(s);
  const OmegaForm& x = blocks.first;
  const OmegaForm& y = blocks.second;
  std::size_t start = std::max(x.prefix.size(), y.prefix.size());
  start += start % 2;
  const std::size_t length = std::lcm(std::lcm(x.period.size(), y.period.size()), std::size_t{2});
  BlockPair out{
      tabulate([&](std::size_t k) { return k % 2 == 0 ? y.at(k) : x.at(k); }, start, length),
      tabulate([&](std::size_t k) { return k % 2 == 0 ? x.at(k) : y.at(k); }, start, length)};
  return out.to_series();
}

Series apply_swap_blocks(const Series& s) {
  require_omega_two(s, "swapblocks");
  const BlockPair blocks = split_blocks(s);
  return BlockPair{blocks.second, blocks.first}.to_series();
}

Series apply_mask(const MapSpec::Mask& m, const Series& s) {
  OmegaForm storage;
  const OmegaForm& form = require_omega(s, "mask", storage);
  const std::size_t start = std::max(m.prefix.size(), form.prefix.size());
  const std::size_t length = std::lcm(m.period.size(), form.period.size());
  OmegaForm out;
  for (std::size_t k = 0; k < start + length; ++k) {
    if (!periodic_at(m.prefix, m.period, k)) continue;
    (k < start ? out.prefix : out.period).push_back(form.at(k));
  }
  return out.to_series();
}

Series copies_of(const Ordinal& value, const Ordinal& count) {
  if (count == omega()) return Series::cat({}, {Series::fin({value})});
  return Series::fin(std::vector<Ordinal>(count.to_u64(), value));
}

Series apply_repeat(const MapSpec::Repeat& r, const Series& s) {
  OmegaForm storage;
  const OmegaForm& form = require_omega(s, "repeat", storage);
  const std::size_t start = std::max(r.prefix.size(), form.prefix.size());
  const std::size_t length = std::lcm(r.period.size(), form.period.size());
  std::vector<Series> head;
  std::vector<Series> period;
  for (std::size_t k = 0; k < start + length; ++k) {
    const Ordinal& count = periodic_at(r.prefix, r.period, k);
    if (count.is_zero()) continue;
    (k < start ? head : period).push_back(copies_of(form.at(k), count));
  }
  Series result;
  if (!period.empty()) {
    result = concat(head, Series::cat({}, std::move(period)));
  } else {
    if (head.empty() || head.back().is_fin())
      throw InapplicableMap("repeat selects only finitely many terms");
    Series last = head.back();
    head.pop_back();
    result = concat(head, last);
  }
  if (result.order_type() != omega())
    throw InapplicableMap("repeat changes the order type to " + to_string(result.order_type()));
  return result;
}

MapKind weakest(MapKind a, MapKind b) { return std::max(a, b); }

MapKind step_kind(const MapSpec::Step& step) {
  return std::visit(
      Overloaded{
          [](const MapSpec::Mask&) { return MapKind::injection; },
          [](const MapSpec::Repeat& r) {
            auto one = [](const Ordinal& c) { return c == Ordinal(1); };
            return std::all_of(r.prefix.begin(), r.prefix.end(), one) &&
                           std::all_of(r.period.begin(), r.period.end(), one)
                       ? MapKind::bijection
                       : MapKind::general;
          },
          [](const auto&) { return MapKind::bijection; },
      },
      step);
}

// Drops trailing entries that MoveFront would place in the same slot anyway.
std::vector<Ordinal> canonical_sources(std::vector<Ordinal> sources) {
  while (!sources.empty()) {
    std::set<Ordinal> before(sources.begin(), sources.end() - 1);
    Ordinal least;
    while (before.count(least)) least = add(least, Ordinal(1));
    if (sources.back() != least) break;
    sources.pop_back();
  }
  return sources;
}

void tuples_of(const std::vector<Ordinal>& pool, std::size_t max_len, std::vector<Ordinal>& current,
               std::vector<bool>& used, std::vector<std::vector<Ordinal>>& out) {
  out.push_back(current);
  if (current.size() == max_len) return;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (used[k]) continue;
    used[k] = true;
    current.push_back(pool[k]);
    tuples_of(pool, max_len, current, used, out);
    current.pop_back();
    used[k] = false;
  }
}

std::string bits_to_string(const std::vector<bool>& bits) {
  std::string out;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (k) out += ',';
    out += bits[k] ? '1' : '0';
  }
  return out;
}

std::string ordinals_to_string(const std::vector<Ordinal>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += to_string(values[k]);
  }
  return out;
}

}  // namespace

MapSpec MapSpec::identity() { return MapSpec({Permute{}}); }

MapSpec MapSpec::permute(std::vector<std::size_t> order) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != k) throw InvalidValue("permute needs a permutation of 0..n-1");
  return MapSpec({Permute{std::move(order)}});
}

MapSpec MapSpec::move_front(std::vector<Ordinal> sources) {
  std::set<Ordinal> seen(sources.begin(), sources.end());
  if (seen.size() != sources.size()) throw InvalidValue("movefront sources must be distinct");
  return MapSpec({MoveFront{std::move(sources)}});
}

MapSpec MapSpec::even_odd() { return MapSpec({EvenOdd{}}); }

MapSpec MapSpec::swap_blocks() { return MapSpec({SwapBlocks{}}); }

MapSpec MapSpec::mask(std::vector<bool> prefix, std::vector<bool> period) {
  if (std::find(period.begin(), period.end(), true) == period.end())
    throw InvalidValue("mask period must select at least one position");
  return MapSpec({Mask{std::move(prefix), std::move(period)}});
}

MapSpec MapSpec::repeat(std::vector<Ordinal> prefix, std::vector<Ordinal> period) {
  if (period.empty()) throw InvalidValue("repeat period must be nonempty");
  for (const auto* counts : {&prefix, &period})
    for (const Ordinal& c : *counts)
      if (!is_count(c)) throw InvalidValue("repeat counts are naturals or w, got " + to_string(c));
  return MapSpec({Repeat{std::move(prefix), std::move(period)}});
}

MapSpec MapSpec::compose(const MapSpec& outer, const MapSpec& inner) {
  auto is_identity = [](const Step& step) {
    const auto* p = std::get_if<Permute>(&step);
    return p != nullptr && p->order.empty();
  };
  std::vector<Step> steps;
  for (const auto* part : {&inner.steps_, &outer.steps_})
    for (const Step& step : *part)
      if (!is_identity(step)) steps.push_back(step);
  if (steps.empty()) return identity();
  return MapSpec(std::move(steps));
}

Series apply(const MapSpec& m, const Series& s) {
  Series current = s;
  for (const MapSpec::Step& step : m.steps()) {
    current = std::visit(
        Overloaded{
            [&](const MapSpec::Permute& p) { return apply_permute(p, current); },
            [&](const MapSpec::MoveFront& mf) { return apply_move_front(mf, current); },
            [&](const MapSpec::EvenOdd&) { return apply_even_odd(current); },
            [&](const MapSpec::SwapBlocks&) { return apply_swap_blocks(current); },
            [&](const MapSpec::Mask& mk) { return apply_mask(mk, current); },
            [&](const MapSpec::Repeat& r) { return apply_repeat(r, current); },
        },
        step);
  }
  return current;
}

MapKind classify_kind(const MapSpec& m) {
  MapKind kind = MapKind::bijection;
  for (const auto& step : m.steps()) kind = weakest(kind, step_kind(step));
  return kind;
}

ABClass ab_classify(const MapSpec& m) {
  if (classify_kind(m) != MapKind::bijection)
    throw InapplicableMap("ab_classify needs a bijection");
  // Tag the first block with 1 and the second with 2, then read off which
  // tags the image's second block sees infinitely often.
  const Series probe = BlockPair{OmegaForm{{}, {Ordinal(1)}}, OmegaForm{{}, {Ordinal(2)}}}.to_series();
  const Series image = apply(m, probe);
  if (image.order_type() != omega_two()) throw InapplicableMap("map does not preserve type w*2");
  const std::vector<Ordinal>& tail = split_blocks(image).second.period;
  auto seen = [&](std::uint64_t tag) { return std::find(tail.begin(), tail.end(), Ordinal(tag)) != tail.end(); };
  return {seen(1), seen(2)};
}

ImageClass inj_image_class(const MapSpec& m) {
  if (classify_kind(m) == MapKind::general)
    throw InapplicableMap("inj_image_class needs an injection");
  bool coinfinite = false;
  for (const auto& step : m.steps()) {
    std::visit(Overloaded{
                   [&](const MapSpec::Mask& mk) {
                     coinfinite |= std::find(mk.period.begin(), mk.period.end(), false) != mk.period.end();
                   },
                   [&](const MapSpec::MoveFront& mf) {
                     for (const Ordinal& p : mf.sources)
                       if (!p.is_finite()) throw InapplicableMap("movefront position beyond w");
                   },
                   [&](const MapSpec::EvenOdd&) { throw InapplicableMap("evenodd is not a map of w"); },
                   [&](const MapSpec::SwapBlocks&) { throw InapplicableMap("swapblocks is not a map of w"); },
                   [](const auto&) {},
               },
               step);
  }
  return coinfinite ? ImageClass::coinfinite_image : ImageClass::cofinite_image;
}

Series dup(const Series& s) {
  if (s.order_type().is_finite())
    throw UnsupportedOrderType("dup needs an infinite series");
  const std::vector<Ordinal> values = distinct_values(s);
  if (s.order_type() == omega()) return Series::cat({}, {Series::fin(values)});
  std::vector<Ordinal> scarce;
  for (const Ordinal& v : values)
    if (value_support(s, v).kind != Support::Kind::infinite) scarce.push_back(v);
  if (scarce.empty()) return s;
  const auto& cat = s.as_cat();
  std::vector<Series> period = cat.period;
  period.push_back(Series::fin(std::move(scarce)));
  return Series::cat(cat.prefix, std::move(period));
}

std::vector<MapSpec> canonical_family(const Series& s, std::size_t depth) {
  std::vector<MapSpec> family;
  std::set<std::string> seen;
  auto emit = [&](const MapSpec& m) {
    if (seen.insert(to_string(m)).second) family.push_back(m);
  };
  if (s.order_type() == omega()) {
    std::vector<std::size_t> order(depth);
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
      std::vector<std::size_t> trimmed = order;
      while (!trimmed.empty() && trimmed.back() == trimmed.size() - 1) trimmed.pop_back();
      emit(trimmed.empty() ? MapSpec::identity() : MapSpec::permute(trimmed));
    } while (std::next_permutation(order.begin(), order.end()));
    return family;
  }
  if (s.order_type() != omega_two())
    throw UnsupportedOrderType("canonical_family supports order types w and w*2");

  std::vector<Ordinal> pool;
  for (std::size_t k = 0; k < depth; ++k) pool.push_back(Ordinal(k));
  for (std::size_t k = 0; k < depth; ++k) pool.push_back(add(omega(), Ordinal(k)));
  std::vector<std::vector<Ordinal>> tuples;
  std::vector<Ordinal> current;
  std::vector<bool> used(pool.size(), false);
  tuples_of(pool, depth, current, used, tuples);

  const MapSpec blocks[] = {MapSpec::swap_blocks(), MapSpec::even_odd()};
  std::vector<MapSpec> moves;
  for (auto& t : tuples) {
    std::vector<Ordinal> c = canonical_sources(t);
    moves.push_back(c.empty() ? MapSpec::identity() : MapSpec::move_front(std::move(c)));
  }
  for (const MapSpec& mv : moves) emit(mv);
  for (const MapSpec& b : blocks) {
    for (const MapSpec& mv : moves) {
      emit(b.then(mv));
    }
  }
  return family;
}

std::string to_string(MapKind k) {
  switch (k) {
    case MapKind::bijection: return "bijection";
    case MapKind::injection: return "injection";
    case MapKind::general: return "general";
  }
  return "general";
}

std::string to_string(ImageClass c) {
  return c == ImageClass::cofinite_image ? "cofinite_image" : "coinfinite_image";
}

std::string to_string(const MapSpec& m) {
  std::string out;
  for (const auto& step : m.steps()) {
    if (!out.empty()) out += " ; ";
    out += std::visit(
        Overloaded{
            [](const MapSpec::Permute& p) {
              std::string body;
              for (std::size_t k = 0; k < p.order.size(); ++k) {
                if (k) body += ',';
                body += std::to_string(p.order[k]);
              }
              return "permute([" + body + "])";
            },
            [](const MapSpec::MoveFront& mf) { return "movefront([" + ordinals_to_string(mf.sources) + "])"; },
            [](const MapSpec::EvenOdd&) { return std::string("evenodd()"); },
            [](const MapSpec::SwapBlocks&) { return std::string("swapblocks()"); },
            [](const MapSpec::Mask& mk) {
              return "mask([" + bits_to_string(mk.prefix) + "];[" + bits_to_string(mk.period) + "])";
            },
            [](const MapSpec::Repeat& r) {
              return "repeat([" + ordinals_to_string(r.prefix) + "];[" + ordinals_to_string(r.period) + "])";
            },
        },
        step);
  }
  return out;
}

namespace {

std::vector<Ordinal> parse_ordinal_list(detail::Cursor& in) {
  std::vector<Ordinal> out;
  in.expect("[");
  if (!in.peek("]")) {
    out.push_back(detail::parse_ordinal_expr(in));
    while (in.accept(",")) out.push_back(detail::parse_ordinal_expr(in));
  }
  in.expect("]");
  return out;
}

std::vector<bool> parse_bits(detail::Cursor& in) {
  std::vector<bool> out;
  in.expect("[");
  if (!in.peek("]")) {
    do {
      if (in.accept("0"))
        out.push_back(false);
      else if (in.accept("1"))
        out.push_back(true);
      else
        in.fail({"0", "1"});
    } while (in.accept(","));
  }
  in.expect("]");
  return out;
}

MapSpec parse_step(detail::Cursor& in) {
  const std::size_t start = in.position();
  auto guarded = [&](auto make) {
    try {
      return make();
    } catch (const InvalidValue& e) {
      throw ParseError(start, {}, e.what());
    }
  };
  if (in.accept("permute")) {
    in.expect("(");
    std::vector<std::size_t> order;
    for (const Ordinal& v : parse_ordinal_list(in)) order.push_back(v.to_u64());
    in.expect(")");
    return guarded([&] { return MapSpec::permute(order); });
  }
  if (in.accept("movefront")) {
    in.expect("(");
    auto sources = parse_ordinal_list(in);
    in.expect(")");
    return guarded([&] { return MapSpec::move_front(sources); });
  }
  if (in.accept("evenodd")) {
    in.expect("(");
    in.expect(")");
    return MapSpec::even_odd();
  }
  if (in.accept("swapblocks")) {
    in.expect("(");
    in.expect(")");
    return MapSpec::swap_blocks();
  }
  if (in.accept("mask")) {
    in.expect("(");
    auto prefix = parse_bits(in);
    in.expect(";");
    auto period = parse_bits(in);
    in.expect(")");
    return guarded([&] { return MapSpec::mask(prefix, period); });
  }
  if (in.accept("repeat")) {
    in.expect("(");
    auto prefix = parse_ordinal_list(in);
    in.expect(";");
    auto period = parse_ordinal_list(in);
    in.expect(")");
    return guarded([&] { return MapSpec::repeat(prefix, period); });
  }
  in.fail({"permute", "movefront", "evenodd", "swapblocks", "mask", "repeat"});
}

}  // namespace

MapSpec parse_map(std::string_view text) {
  detail::Cursor in(text);
  MapSpec m = parse_step(in);
  while (in.accept(";")) m = m.then(parse_step(in));
  in.expect_end();
  return m;
}

}  // namespace ordsum
