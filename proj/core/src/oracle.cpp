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

#include "ordsum/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "ordsum/errors.hpp"
#include "ordsum/rearrange.hpp"

namespace ordsum {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<Ordinal> core_period(Draw& draw, std::size_t count) {
  const Ordinal w = Ordinal::omega();
  std::vector<Ordinal> pool = {Ordinal(1), w, mul(w, Ordinal(2)), mul(w, w)};
  draw.shuffle(pool);
  std::vector<Ordinal> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
  std::vector<Ordinal> period = chosen;
  // Odd length keeps every value in both parity classes of an interleaving.
  if (period.size() % 2 == 0) period.push_back(chosen[draw.below(chosen.size())]);
  draw.shuffle(period);
  return period;
}

Ordinal max_degree(const std::vector<Ordinal>& values) {
  Ordinal d;
  for (const Ordinal& v : values) d = std::max(d, degree(v));
  return d;
}

std::vector<Ordinal> exceptional_terms(Draw& draw, std::size_t count, const Ordinal& core_degree) {
  const Ordinal up = add(core_degree, Ordinal(1));
  const Ordinal e = Ordinal::omega_power(up);
  std::vector<Ordinal> pool = {e, add(e, Ordinal(1)), add(e, Ordinal::omega_power(core_degree)),
                               Ordinal::omega_power(up, 2), Ordinal::omega_power(add(up, Ordinal(1)))};
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<std::size_t> uses(pool.size(), 0);
  std::vector<Ordinal> out;
  while (out.size() < count) {
    const std::size_t k = draw.below(pool.size());
    if (uses[k] == 2) continue;
    ++uses[k];
    out.push_back(pool[k]);
  }
  return out;
}

}  // namespace

Series generate_instance(const InstanceSpec& params) {
  Draw draw(params.seed);
  const std::size_t n_exc = std::min<std::size_t>(params.max_exceptional, 5);
  const std::size_t n_core = std::clamp<std::size_t>(params.core_values, 1, 4);
  if (params.shape == BlockShape::omega) {
    std::vector<Ordinal> period = core_period(draw, n_core);
    return OmegaForm{exceptional_terms(draw, n_exc, max_degree(period)), std::move(period)}.to_series();
  }
  std::vector<Ordinal> p1 = core_period(draw, n_core);
  std::vector<Ordinal> p2 = core_period(draw, n_core);
  const Ordinal d = std::max(max_degree(p1), max_degree(p2));
  std::vector<Ordinal> exc = exceptional_terms(draw, n_exc, d);
  const auto split = static_cast<std::ptrdiff_t>(draw.below(n_exc + 1));
  return BlockPair{OmegaForm{{exc.begin(), exc.begin() + split}, std::move(p1)},
                   OmegaForm{{exc.begin() + split, exc.end()}, std::move(p2)}}
      .to_series();
}

EnumerationResult oracle_sums(const Series& s, std::size_t depth) {
  EnumerationResult result(false, depth);
  for (const MapSpec& m : canonical_family(s, depth)) result.add(total_sum(apply(m, s)), m);
  return result;
}

DifferentialReport differential_run(const Series& s, std::size_t depth) {
  const Ordinal w = Ordinal::omega();
  EnumerationResult structural = s.order_type() == w ? enum_bijective_omega(s) : enum_bijective_omega2(s);
  DifferentialReport r{oracle_sums(s, depth), std::move(structural), Verdict::equal, std::nullopt, depth};
  for (const auto& e : r.oracle.entries()) {
    if (r.structural.witness_for(e.sum) == nullptr) {
      r.verdict = Verdict::unsound;
      r.counterexample = e;
      return r;
    }
  }
  if (r.oracle.entries().size() != r.structural.entries().size()) r.verdict = Verdict::oracle_proper_subset;
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::oracle_proper_subset: return "oracle-proper-subset";
    case Verdict::unsound: return "unsound";
  }
  return "unsound";
}

std::string to_report(const DifferentialReport& r) {
  std::ostringstream out;
  out << to_report(r.structural);
  out << "depth: " << r.depth << '\n';
  out << "oracle: " << to_string(r.oracle.sums()) << '\n';
  out << "verdict: " << to_string(r.verdict) << '\n';
  if (r.counterexample)
    out << "counterexample: " << to_string(r.counterexample->sum) << " via "
        << to_string(r.counterexample->witness) << '\n';
  return out.str();
}

namespace wellorder {

WellOrder encode(const Ordinal& a) {
  WellOrder out;
  Natural total = 0;
  for (const Term& t : a.terms()) {
    total += t.coefficient;
    if (!t.exponent.is_finite() || total > (Natural(1) << 20))
      throw DomainError("well-order encoding needs finite exponents and small coefficients");
    out.blocks.insert(out.blocks.end(), static_cast<std::size_t>(t.coefficient),
                      static_cast<std::uint32_t>(t.exponent.to_u64()));
  }
  return out;
}

WellOrder concatenate(const WellOrder& a, const WellOrder& b) {
  WellOrder out = a;
  out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
  return out;
}

WellOrder lex_product(const WellOrder& a, const WellOrder& b) {
  WellOrder out;
  if (a.blocks.empty()) return out;
  const std::uint32_t top = *std::max_element(a.blocks.begin(), a.blocks.end());
  for (std::uint32_t e : b.blocks) {
    if (e == 0)
      out.blocks.insert(out.blocks.end(), a.blocks.begin(), a.blocks.end());
    else
      // w^e copies of a: cofinal in w^(top+e).
      out.blocks.push_back(top + e);
  }
  return out;
}

Ordinal order_type(const WellOrder& w) {
  // A block followed anywhere later by a larger block is swallowed by it.
  std::vector<std::uint32_t> kept;
  std::uint32_t later_max = 0;
  bool any_later = false;
  for (auto it = w.blocks.rbegin(); it != w.blocks.rend(); ++it) {
    if (any_later && *it < later_max) continue;
    kept.push_back(*it);
    later_max = std::max(later_max, *it);
    any_later = true;
  }
  std::vector<Term> terms;
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
    if (!terms.empty() && terms.back().exponent == Ordinal(*it))
      terms.back().coefficient += 1;
    else
      terms.push_back({Ordinal(*it), 1});
  }
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace wellorder

}  // namespace ordsum
