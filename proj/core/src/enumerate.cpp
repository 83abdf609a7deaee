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

#include "ordsum/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

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

std::vector<Ordinal> move_front_sources(const MapSpec& m) {
  std::vector<Ordinal> out;
  for (const auto& step : m.steps())
    if (const auto* mf = std::get_if<MapSpec::MoveFront>(&step))
      out.insert(out.end(), mf->sources.begin(), mf->sources.end());
  return out;
}

// True when a is the preferred witness over b.
bool prefer(const MapSpec& a, const MapSpec& b) {
  if (a.steps().size() != b.steps().size()) return a.steps().size() < b.steps().size();
  const auto sa = move_front_sources(a);
  const auto sb = move_front_sources(b);
  if (sa != sb) return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
  return to_string(a) < to_string(b);
}

Ordinal sum_of(const std::vector<Ordinal>& items, const Ordinal& tail = Ordinal()) {
  Ordinal total;
  for (const Ordinal& v : items) total = add(total, v);
  return add(total, tail);
}

void require_witness(const MapSpec& w, const Series& s, const Ordinal& sum) {
  const Ordinal got = total_sum(apply(w, s));
  if (got != sum)
    throw std::logic_error("witness " + to_string(w) + " sums to " + to_string(got) +
                           ", expected " + to_string(sum));
}

bool witness_holds(const MapSpec& w, const Series& s, const Ordinal& sum) {
  try {
    return total_sum(apply(w, s)) == sum;
  } catch (const DomainError&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Grouped closed form. A finite selection of values, arranged in any order and
// followed by `tail`, sums to one of the values computed here. Selections are
// drawn per value from `exact` when the value's degree group is the leading
// one, and from 0..at_most when it lies below.

struct Budget {
  Ordinal value;
  std::vector<std::uint64_t> exact;  // ascending
  std::uint64_t at_most = 0;
};

// Sum value -> one arrangement realizing it (the tail excluded).
using SumTable = std::map<Ordinal, std::vector<Ordinal>>;

struct Group {
  Ordinal degree;
  std::vector<const Budget*> members;
};

Ordinal without_head(const Ordinal& w) {
  std::vector<Term> rest(w.terms().begin() + 1, w.terms().end());
  return Ordinal::from_terms(std::move(rest));
}

const Natural& head_coefficient(const Ordinal& w) { return w.terms().front().coefficient; }

std::vector<std::uint64_t> up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k <= n; ++k) out.push_back(k);
  return out;
}

using Choice = std::vector<std::pair<Ordinal, std::uint64_t>>;

// Reachable sums of head coefficients, each with one choice of counts.
std::map<Natural, Choice> coefficient_sums(const std::vector<const Budget*>& members,
                                           const std::vector<std::vector<std::uint64_t>>& counts) {
  std::map<Natural, Choice> table{{Natural(0), {}}};
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::map<Natural, Choice> next;
    for (const auto& [c, choice] : table) {
      for (std::uint64_t k : counts[i]) {
        Natural total = c + head_coefficient(members[i]->value) * k;
        if (next.count(total)) continue;
        Choice extended = choice;
        if (k > 0) extended.emplace_back(members[i]->value, k);
        next.emplace(std::move(total), std::move(extended));
      }
    }
    table = std::move(next);
  }
  return table;
}

void append_copies(std::vector<Ordinal>& seq, const Choice& choice) {
  for (const auto& [v, k] : choice) seq.insert(seq.end(), k, v);
}

// Arrangements whose leading group is `g`; `below` holds the sums of
// everything after the last member of g, tail included.
void leading_group(const Group& g, bool use_exact, const Ordinal& tail, const SumTable& below,
                   SumTable& out) {
  auto counts_of = [&](const Budget* b) { return use_exact ? b->exact : up_to(b->at_most); };
  const bool tail_group = !tail.is_zero() && degree(tail) == g.degree;
  if (tail_group) {
    std::vector<std::vector<std::uint64_t>> counts;
    for (const Budget* b : g.members) counts.push_back(counts_of(b));
    const Natural tail_head = head_coefficient(tail);
    const Ordinal tail_rest = without_head(tail);
    for (const auto& [c, choice] : coefficient_sums(g.members, counts)) {
      if (c == 0) continue;
      Ordinal value = add(Ordinal::omega_power(g.degree, c + tail_head), tail_rest);
      std::vector<Ordinal> seq;
      append_copies(seq, choice);
      out.emplace(std::move(value), std::move(seq));
    }
    return;
  }
  for (std::size_t last = 0; last < g.members.size(); ++last) {
    std::vector<std::uint64_t> last_counts;
    for (std::uint64_t k : counts_of(g.members[last]))
      if (k > 0) last_counts.push_back(k);
    if (last_counts.empty()) continue;
    std::vector<const Budget*> others;
    std::vector<std::vector<std::uint64_t>> counts;
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      if (i == last) continue;
      others.push_back(g.members[i]);
      counts.push_back(counts_of(g.members[i]));
    }
    const Ordinal& w = g.members[last]->value;
    const Ordinal w_rest = without_head(w);
    for (const auto& [c, choice] : coefficient_sums(others, counts)) {
      for (std::uint64_t k : last_counts) {
        const Ordinal head = Ordinal::omega_power(g.degree, c + head_coefficient(w) * k);
        for (const auto& [x, x_seq] : below) {
          Ordinal value = add(head, add(w_rest, x));
          if (out.count(value)) continue;
          std::vector<Ordinal> seq;
          append_copies(seq, choice);
          seq.insert(seq.end(), k, w);
          seq.insert(seq.end(), x_seq.begin(), x_seq.end());
          out.emplace(std::move(value), std::move(seq));
        }
      }
    }
  }
}

SumTable grouped_sums(const std::vector<Budget>& budgets, const Ordinal& tail) {
  std::map<Ordinal, Group, std::greater<>> by_degree;
  for (const Budget& b : budgets) {
    if (b.value.is_zero()) continue;
    const Ordinal d = degree(b.value);
    if (!tail.is_zero() && d < degree(tail)) continue;  // absorbed by the tail
    auto& g = by_degree[d];
    g.degree = d;
    g.members.push_back(&b);
  }
  std::vector<Group> groups;
  for (auto& [d, g] : by_degree) groups.push_back(std::move(g));

  // at_most[j]: sums of arrangements drawn from groups j.. under the
  // at-most budgets, tail included.
  std::vector<SumTable> at_most(groups.size() + 1);
  at_most[groups.size()] = {{tail, {}}};
  for (std::size_t j = groups.size(); j-- > 0;) {
    at_most[j] = at_most[j + 1];
    leading_group(groups[j], false, tail, at_most[j + 1], at_most[j]);
  }

  auto allows_zero = [](const Group& g) {
    return std::all_of(g.members.begin(), g.members.end(),
                       [](const Budget* b) { return b->exact.front() == 0; });
  };
  SumTable out;
  bool empty_above = true;
  for (std::size_t j = 0; j < groups.size() && empty_above; ++j) {
    leading_group(groups[j], true, tail, at_most[j + 1], out);
    empty_above = allows_zero(groups[j]);
  }
  if (empty_above) out.emplace(tail, std::vector<Ordinal>{});
  return out;
}

Ordinal remainder_for(const Ordinal& m) {
  return m.is_zero() ? Ordinal() : Ordinal::omega_power(add(degree(m), Ordinal(1)));
}

std::vector<Ordinal> infinite_values(const OmegaForm& form) {
  std::vector<Ordinal> out(form.period.begin(), form.period.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Positions 0, 1, ... of `form` holding `v`, one per call.
class OccurrenceScanner {
 public:
  explicit OccurrenceScanner(const OmegaForm& form) : form_(form) {}
  std::size_t next(const Ordinal& v) {
    std::size_t& k = cursor_[v];
    const std::size_t limit = form_.prefix.size() + form_.period.size();
    while (form_.at(k) != v) {
      ++k;
      if (k > limit && !in_period(v)) throw std::logic_error("value exhausted: " + to_string(v));
    }
    return k++;
  }

 private:
  bool in_period(const Ordinal& v) const {
    return std::find(form_.period.begin(), form_.period.end(), v) != form_.period.end();
  }
  const OmegaForm& form_;
  std::map<Ordinal, std::size_t> cursor_;
};

// Keeps the positions of `seq` and every occurrence of `m`, then moves the
// kept `seq` positions to the front in order.
MapSpec injective_witness(const OmegaForm& form, const std::vector<Ordinal>& seq, const Ordinal& m) {
  OccurrenceScanner scan(form);
  std::vector<std::size_t> positions;
  for (const Ordinal& v : seq) positions.push_back(scan.next(v));
  const std::size_t a = form.prefix.size();
  const std::size_t p = form.period.size();
  std::size_t prefix_len = a;
  if (!positions.empty()) {
    const std::size_t top = *std::max_element(positions.begin(), positions.end());
    while (prefix_len <= top) prefix_len += p;
  }
  const std::set<std::size_t> chosen(positions.begin(), positions.end());
  std::vector<bool> prefix_bits(prefix_len);
  for (std::size_t k = 0; k < prefix_len; ++k) prefix_bits[k] = chosen.count(k) || form.at(k) == m;
  std::vector<bool> period_bits(p);
  for (std::size_t j = 0; j < p; ++j) period_bits[j] = form.period[j] == m;

  MapSpec mask = MapSpec::mask(prefix_bits, period_bits);
  if (positions.empty()) return mask;
  std::vector<Ordinal> sources;
  for (std::size_t q : positions) {
    const auto rank = std::count(prefix_bits.begin(), prefix_bits.begin() + q, true);
    sources.push_back(Ordinal(static_cast<std::uint64_t>(rank)));
  }
  return mask.then(MapSpec::move_front(std::move(sources)));
}

// Moves one occurrence of every value in `seq`, then of m, to the front and
// repeats each the required number of times, with m repeated w times.
MapSpec general_witness(const OmegaForm& form, const std::vector<Ordinal>& seq, const Ordinal& m) {
  std::vector<std::pair<Ordinal, std::uint64_t>> runs;
  for (const Ordinal& v : seq) {
    if (!runs.empty() && runs.back().first == v)
      ++runs.back().second;
    else
      runs.emplace_back(v, 1);
  }
  OccurrenceScanner scan(form);
  std::vector<Ordinal> sources;
  std::vector<Ordinal> counts;
  for (const auto& [v, k] : runs) {
    sources.push_back(Ordinal(scan.next(v)));
    counts.push_back(Ordinal(k));
  }
  sources.push_back(Ordinal(scan.next(m)));
  counts.push_back(omega());
  return MapSpec::move_front(std::move(sources)).then(MapSpec::repeat(std::move(counts), {Ordinal()}));
}

struct InjectiveCase {
  Ordinal sum;
  std::vector<Ordinal> seq;
  Ordinal m;  // the value kept infinitely often
};

std::vector<InjectiveCase> injective_cases(const Series& s, const OmegaForm& form, std::size_t bound) {
  std::vector<InjectiveCase> out;
  const std::vector<Ordinal> values = distinct_values(s);
  for (const Ordinal& m : infinite_values(form)) {
    std::vector<Budget> budgets;
    for (const Ordinal& v : values) {
      if (v <= m) continue;
      const Support sup = value_support(s, v);
      Budget b{v, {}, 0};
      if (sup.kind == Support::Kind::infinite) {
        b.exact = up_to(bound);
        b.at_most = bound;
      } else {
        const auto n = static_cast<std::uint64_t>(sup.count);
        b.exact = up_to(std::min<std::uint64_t>(n, bound));
        if (n > bound) b.exact.push_back(n);
        b.at_most = n;
      }
      budgets.push_back(std::move(b));
    }
    for (auto& [sum, seq] : grouped_sums(budgets, remainder_for(m)))
      out.push_back({sum, std::move(seq), m});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

void EnumerationResult::add(const Ordinal& sum, const MapSpec& witness) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), sum,
                             [](const WitnessedSum& e, const Ordinal& v) { return e.sum < v; });
  if (it != entries_.end() && it->sum == sum) {
    if (prefer(witness, it->witness)) it->witness = witness;
    return;
  }
  entries_.insert(it, WitnessedSum{sum, witness});
}

void EnumerationResult::merge(const EnumerationResult& other) {
  for (const auto& e : other.entries_) add(e.sum, e.witness);
}

OrdinalSet EnumerationResult::sums() const {
  std::vector<Ordinal> out;
  for (const auto& e : entries_) out.push_back(e.sum);
  return OrdinalSet(std::move(out));
}

const MapSpec* EnumerationResult::witness_for(const Ordinal& sum) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), sum,
                             [](const WitnessedSum& e, const Ordinal& v) { return e.sum < v; });
  return it != entries_.end() && it->sum == sum ? &it->witness : nullptr;
}

std::string to_report(const EnumerationResult& r) {
  std::ostringstream out;
  out << "complete: " << (r.complete() ? "true" : "false") << '\n';
  if (r.bound()) out << "bound: " << *r.bound() << '\n';
  for (const auto& e : r.entries()) out << to_string(e.sum) << '\t' << to_string(e.witness) << '\n';
  return out.str();
}

EnumerationResult parse_report(std::string_view text) {
  bool complete = false;
  std::optional<std::size_t> bound;
  std::vector<WitnessedSum> entries;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(line_start, end - line_start);
    line_start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (const auto tab = line.find('\t'); tab != std::string_view::npos) {
      entries.push_back({parse_ordinal(line.substr(0, tab)), parse_map(line.substr(tab + 1))});
    } else if (line.starts_with("complete:")) {
      std::string_view v = line.substr(9);
      while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
      if (v != "true" && v != "false") throw ParseError(9, {"true", "false"}, std::string(v));
      complete = v == "true";
    } else if (line.starts_with("bound:")) {
      try {
        bound = std::stoull(std::string(line.substr(6)));
      } catch (const std::exception&) {
        throw ParseError(6, {"natural"}, std::string(line.substr(6)));
      }
    }
  }
  EnumerationResult r(complete, bound);
  for (auto& e : entries) r.add(e.sum, e.witness);
  return r;
}

// ---------------------------------------------------------------------------

EnumerationResult enum_bijective_omega(const Series& s) {
  if (s.order_type() != omega())
    throw UnsupportedOrderType("enum_bijective_omega requires order type w");
  const Ordinal tail = psi(s);
  std::map<Ordinal, std::vector<Ordinal>> positions;
  std::vector<Ordinal> values;
  for (const auto& e : exceptional_multiset(s)) {
    positions[e.value].push_back(e.position);
    values.push_back(e.value);
  }
  for (auto& [v, ps] : positions) std::sort(ps.begin(), ps.end());
  std::sort(values.begin(), values.end());

  EnumerationResult result(true, std::nullopt);
  do {
    std::map<Ordinal, std::size_t> used;
    std::vector<Ordinal> sources;
    for (const Ordinal& v : values) sources.push_back(positions[v][used[v]++]);
    const Ordinal sum = sum_of(values, tail);
    const MapSpec w = MapSpec::move_front(std::move(sources));
    require_witness(w, s, sum);
    result.add(sum, w);
  } while (std::next_permutation(values.begin(), values.end()));
  return result;
}

namespace detail {
OrdinalSet bijective_sums_grouped(const Series& s) {
  if (s.order_type() != omega())
    throw UnsupportedOrderType("bijective_sums_grouped requires order type w");
  std::map<Ordinal, std::uint64_t> counts;
  for (const auto& e : exceptional_multiset(s)) ++counts[e.value];
  std::vector<Budget> budgets;
  for (const auto& [v, n] : counts) budgets.push_back({v, {n}, n});
  OrdinalSet out;
  for (const auto& [sum, seq] : grouped_sums(budgets, psi(s))) out.insert(sum);
  return out;
}
}  // namespace detail

RemainderTriple remainder_triple(const Series& s) {
  const BlockPair blocks = split_blocks(s);
  Series first = blocks.first.to_series();
  Series second = blocks.second.to_series();
  Series mixed = apply(MapSpec::even_odd(), s);
  return {psi(first), psi(second), psi(mixed), std::move(first), std::move(second), std::move(mixed)};
}

Ordinal classify_remainder(const Series& s, const MapSpec& m) {
  if (s.order_type() != omega_two())
    throw UnsupportedOrderType("classify_remainder requires order type w*2");
  const ABClass ab = ab_classify(m);
  const RemainderTriple t = remainder_triple(s);
  if (ab.a_infinite && ab.b_infinite) return t.mu3;
  if (ab.a_infinite) return t.mu1;
  if (ab.b_infinite) return t.mu2;
  throw InapplicableMap("map sends only finitely many positions >= w anywhere");
}

namespace {

struct BlockItem {
  Ordinal value;
  Ordinal position;  // in s
};

// Where each tagged source position of `probe` lands under m.
std::map<Ordinal, Ordinal> landing(const MapSpec& m, const Series& probe) {
  const BlockPair img = split_blocks(apply(m, probe));
  std::map<Ordinal, Ordinal> out;
  auto scan = [&](const OmegaForm& f, const Ordinal& base) {
    for (std::size_t k = 0; k < f.prefix.size() + f.period.size(); ++k)
      if (!f.at(k).is_zero()) out.emplace(f.at(k), add(base, Ordinal(k)));
  };
  scan(img.first, Ordinal());
  scan(img.second, omega());
  return out;
}

std::vector<Ordinal> landed(const std::map<Ordinal, Ordinal>& where,
                            const std::vector<std::size_t>& items) {
  std::vector<Ordinal> out;
  for (std::size_t i : items) out.push_back(where.at(Ordinal(i + 1)));
  return out;
}

// Distinct value orderings of `items`, each as item indices with equal values
// taken in ascending position order.
std::vector<std::vector<std::size_t>> orderings(const std::vector<BlockItem>& all,
                                                std::vector<std::size_t> items) {
  std::sort(items.begin(), items.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(all[a].value, all[a].position) < std::tie(all[b].value, all[b].position);
  });
  std::vector<Ordinal> values;
  for (std::size_t i : items) values.push_back(all[i].value);
  std::vector<std::vector<std::size_t>> out;
  do {
    std::map<Ordinal, std::size_t> used;
    std::vector<std::size_t> order;
    for (const Ordinal& v : values) {
      std::size_t seen = 0;
      for (std::size_t i : items)
        if (all[i].value == v && seen++ == used[v]) {
          order.push_back(i);
          break;
        }
      ++used[v];
    }
    out.push_back(std::move(order));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

}  // namespace

EnumerationResult enum_bijective_omega2(const Series& s) {
  if (s.order_type() != omega_two())
    throw UnsupportedOrderType("enum_bijective_omega2 requires order type w*2");
  const BlockPair blocks = split_blocks(s);
  std::vector<BlockItem> items;
  for (const auto& e : exceptional_multiset(blocks.first.to_series())) items.push_back({e.value, e.position});
  for (const auto& e : exceptional_multiset(blocks.second.to_series()))
    items.push_back({e.value, add(omega(), e.position)});

  // Tags 1..n mark the exceptional positions; everything else is 0.
  BlockPair probe{{std::vector<Ordinal>(blocks.first.prefix.size()), {Ordinal()}},
                  {std::vector<Ordinal>(blocks.second.prefix.size()), {Ordinal()}}};
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Ordinal& pos = items[i].position;
    if (pos < omega())
      probe.first.prefix[pos.to_u64()] = Ordinal(i + 1);
    else
      probe.second.prefix[left_subtract(omega(), pos).to_u64()] = Ordinal(i + 1);
  }
  const Series probe_series = probe.to_series();

  struct Base {
    MapSpec map;
    Ordinal r1;
    Ordinal r2;
  };
  std::vector<Base> bases;
  const MapSpec swap = MapSpec::swap_blocks();
  const MapSpec mix = MapSpec::even_odd();
  for (const MapSpec& m : {MapSpec::identity(), swap, mix, mix.then(swap), swap.then(mix)}) {
    const BlockPair img = split_blocks(apply(m, s));
    bases.push_back({m, psi(img.first.to_series()), psi(img.second.to_series())});
  }

  const RemainderTriple t = remainder_triple(s);
  const Ordinal mu[] = {Ordinal(), t.mu1, t.mu2, t.mu3};
  const std::pair<int, int> pairs[] = {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {3, 3}};

  auto build = [&](const MapSpec& base, const std::vector<std::size_t>& first,
                   const std::vector<std::size_t>& second) {
    MapSpec w = base;
    if (!second.empty()) {
      const MapSpec swapped = w.then(swap);
      w = swapped.then(MapSpec::move_front(landed(landing(swapped, probe_series), second))).then(swap);
    }
    if (!first.empty()) w = w.then(MapSpec::move_front(landed(landing(w, probe_series), first)));
    return w;
  };

  EnumerationResult result(true, std::nullopt);
  std::set<std::pair<std::vector<Ordinal>, std::vector<Ordinal>>> seen;
  const std::size_t n = items.size();
  for (std::uint64_t side = 0; side < (std::uint64_t{1} << n); ++side) {
    std::vector<std::size_t> part[2];
    std::vector<Ordinal> key[2];
    for (std::size_t i = 0; i < n; ++i) {
      const int b = (side >> i) & 1U;
      part[b].push_back(i);
      key[b].push_back(items[i].value);
    }
    std::sort(key[0].begin(), key[0].end());
    std::sort(key[1].begin(), key[1].end());
    if (!seen.emplace(key[0], key[1]).second) continue;
    for (const auto& o1 : orderings(items, part[0])) {
      for (const auto& o2 : orderings(items, part[1])) {
        Ordinal beta, gamma;
        for (std::size_t i : o1) beta = add(beta, items[i].value);
        for (std::size_t i : o2) gamma = add(gamma, items[i].value);
        for (const auto& [i, j] : pairs) {
          const Ordinal value = add(add(add(beta, mu[i]), gamma), mu[j]);
          if (result.witness_for(value) != nullptr) continue;
          for (const Base& b : bases) {
            if (b.r1 != mu[i] || b.r2 != mu[j]) continue;
            const MapSpec w = build(b.map, o1, o2);
            if (witness_holds(w, s, value)) {
              result.add(value, w);
              break;
            }
          }
        }
      }
    }
  }
  return result;
}

EnumerationResult enum_injective_bounded(const Series& s, std::size_t bound) {
  const OmegaForm form = to_omega_form(s);
  EnumerationResult result(false, bound);
  for (const auto& c : injective_cases(s, form, bound)) {
    const MapSpec w = injective_witness(form, c.seq, c.m);
    require_witness(w, s, c.sum);
    result.add(c.sum, w);
  }
  return result;
}

EnumerationResult enum_map_bounded(const Series& s, std::size_t bound) {
  const OmegaForm form = to_omega_form(s);
  EnumerationResult result(false, bound);
  for (const Series& source : {dup(s), s}) {
    for (const auto& c : injective_cases(source, to_omega_form(source), bound)) {
      const MapSpec w = general_witness(form, c.seq, c.m);
      require_witness(w, s, c.sum);
      result.add(c.sum, w);
    }
  }
  // Uniform repetition of the prefix, and single terms repeated w times.
  const std::size_t a = form.prefix.size();
  std::vector<MapSpec> samples;
  for (std::size_t k = 0; k <= bound; ++k)
    samples.push_back(MapSpec::repeat(std::vector<Ordinal>(a, Ordinal(k)), {Ordinal(1)}));
  for (std::size_t i = 0; i < a + form.period.size(); ++i) {
    std::vector<Ordinal> counts(i + 1, Ordinal());
    counts[i] = omega();
    samples.push_back(MapSpec::repeat(std::move(counts), {Ordinal()}));
  }
  for (const MapSpec& m : samples) result.add(total_sum(apply(m, s)), m);
  return result;
}

OrdinalSet injective_sums_bounded(const Series& s, std::size_t bound) {
  const Ordinal& type = s.order_type();
  if (type.is_finite()) {
    std::vector<Ordinal> items;
    for (const Series& seg : take(s, type)) {
      const auto& part = seg.as_fin().items;
      items.insert(items.end(), part.begin(), part.end());
    }
    if (items.size() > 9) throw DomainError("finite segment too long to enumerate orderings");
    std::sort(items.begin(), items.end());
    OrdinalSet out;
    do {
      out.insert(sum_of(items));
    } while (std::next_permutation(items.begin(), items.end()));
    return out;
  }
  if (type == omega()) return enum_injective_bounded(s, bound).sums();
  if (type != omega_two())
    throw UnsupportedOrderType("injective sums are explored for order types n, w and w*2");

  // Retain an infinite subseries of each block, then rearrange bijectively.
  const BlockPair blocks = split_blocks(s);
  auto retained = [&](const OmegaForm& block) {
    const Series b = block.to_series();
    std::vector<OmegaForm> out;
    std::set<std::string> seen;
    const EnumerationResult kept = enum_injective_bounded(b, bound);
    for (const auto& e : kept.entries()) {
      const auto& m = std::get<MapSpec::Mask>(e.witness.steps().front());
      const MapSpec mask = MapSpec::mask(m.prefix, m.period);
      if (seen.insert(to_string(mask)).second) out.push_back(to_omega_form(apply(mask, b)));
    }
    return out;
  };
  OrdinalSet out = enum_bijective_omega2(s).sums();
  for (const OmegaForm& r1 : retained(blocks.first))
    for (const OmegaForm& r2 : retained(blocks.second))
      out = set_union(out, enum_bijective_omega2(BlockPair{r1, r2}.to_series()).sums());
  return out;
}

Theorem1Report theorem1_reduce(const Series& s, std::size_t bound) {
  if (s.is_fin()) throw UnsupportedOrderType("theorem1_reduce requires a composite series");
  const auto& cat = s.as_cat();
  Theorem1Report r;
  r.bound = bound;
  r.segments = cat.prefix;
  r.segments.push_back(Series::cat({}, cat.period));
  if (r.segments.size() < 2) throw UnsupportedOrderType("theorem1_reduce requires >= 2 segments");

  std::vector<Ordinal> elements;
  for (const Series& seg : r.segments) {
    r.segment_sums.push_back(injective_sums_bounded(seg, bound));
    const auto& v = r.segment_sums.back().values();
    elements.insert(elements.end(), v.begin(), v.end());
  }
  r.reduced = OmegaForm{elements, {Ordinal()}}.to_series();
  r.reduced_sums = enum_injective_bounded(r.reduced, bound).sums();
  if (s.order_type() == omega())
    r.bijective_sums = enum_bijective_omega(s).sums();
  else if (s.order_type() == omega_two())
    r.bijective_sums = enum_bijective_omega2(s).sums();
  try {
    r.injective_sums = injective_sums_bounded(s, bound);
  } catch (const UnsupportedOrderType&) {
    r.injective_sums.reset();
  }
  return r;
}

std::string to_report(const Theorem1Report& r) {
  std::ostringstream out;
  out << "bound: " << r.bound << '\n';
  for (std::size_t i = 0; i < r.segments.size(); ++i)
    out << "segment " << i << ": " << to_string(r.segments[i]) << " sums " << to_string(r.segment_sums[i])
        << '\n';
  out << "reduced: " << to_string(r.reduced) << '\n';
  out << "reduced sums: " << to_string(r.reduced_sums) << '\n';
  auto optional_set = [](const std::optional<OrdinalSet>& set) {
    return set ? to_string(*set) : std::string("unavailable");
  };
  out << "bijective sums: " << optional_set(r.bijective_sums) << '\n';
  out << "injective sums: " << optional_set(r.injective_sums) << '\n';
  if (r.injective_sums) {
    out << "injective minus reduced: " << to_string(set_difference(*r.injective_sums, r.reduced_sums)) << '\n';
    out << "reduced minus injective: " << to_string(set_difference(r.reduced_sums, *r.injective_sums)) << '\n';
    out << "reduced within injective: " << (r.injective_sums->includes(r.reduced_sums) ? "yes" : "no") << '\n';
    out << "injective within reduced: " << (r.reduced_sums.includes(*r.injective_sums) ? "yes" : "no") << '\n';
  }
  if (r.bijective_sums)
    out << "bijective minus reduced: " << to_string(set_difference(*r.bijective_sums, r.reduced_sums)) << '\n';
  return out.str();
}

}  // namespace ordsum
