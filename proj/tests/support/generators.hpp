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

#ifndef ORDSUM_TESTS_SUPPORT_GENERATORS_HPP
#define ORDSUM_TESTS_SUPPORT_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ordsum/ordinal.hpp"
#include "ordsum/rearrange.hpp"
#include "ordsum/series.hpp"

namespace ordsum::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool coin() { return below(2) == 1; }

  // Random ordinal below w^max_exp with at most `terms` terms and
  // coefficients up to `max_coef`.
  Ordinal ordinal(std::uint64_t max_exp = 5, std::size_t terms = 3, std::uint64_t max_coef = 4) {
    std::vector<std::uint64_t> exps;
    const std::size_t n = below(terms + 1);
    for (std::size_t i = 0; i < n; ++i) exps.push_back(below(max_exp));
    std::sort(exps.rbegin(), exps.rend());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<Term> out;
    for (std::uint64_t e : exps) out.push_back({Ordinal(e), Natural(1 + below(max_coef))});
    return Ordinal::from_terms(std::move(out));
  }

  // Ordinal with a nested exponent, for printer coverage.
  Ordinal nested_ordinal() {
    Ordinal inner = ordinal(3, 2, 3);
    if (inner.is_zero()) inner = Ordinal(1);
    return add(Ordinal::omega_power(inner, 1 + below(3)), ordinal(2, 2, 5));
  }

  std::vector<Ordinal> ordinals(std::size_t max_len, std::uint64_t max_exp = 3) {
    std::vector<Ordinal> out(below(max_len + 1));
    for (auto& v : out) v = ordinal(max_exp, 2, 3);
    return out;
  }

  // Eventually periodic w-series with small values.
  OmegaForm omega_form(std::size_t max_prefix = 4, std::size_t max_period = 3) {
    OmegaForm f;
    f.prefix = ordinals(max_prefix);
    const std::size_t p = 1 + below(max_period);
    for (std::size_t i = 0; i < p; ++i) f.period.push_back(ordinal(3, 2, 3));
    return f;
  }

  // Nested description of type w or w*2 built from Fin and Cat nodes.
  Series series(int depth = 2) {
    if (depth == 0 || below(3) == 0) return Series::fin(ordinals(3));
    std::vector<Series> prefix;
    const std::size_t np = below(3);
    for (std::size_t i = 0; i < np; ++i) prefix.push_back(series(depth - 1));
    std::vector<Series> period;
    const std::size_t nq = 1 + below(2);
    for (std::size_t i = 0; i < nq; ++i) {
      std::vector<Ordinal> items = ordinals(2);
      items.push_back(ordinal(3, 2, 3));
      period.push_back(Series::fin(std::move(items)));
    }
    return Series::cat(std::move(prefix), std::move(period));
  }

  MapSpec map() {
    auto positions = [&](bool second_block) {
      std::vector<Ordinal> out;
      const std::size_t n = below(4);
      for (std::size_t i = 0; i < n; ++i) {
        Ordinal p(below(6));
        if (second_block && coin()) p = add(Ordinal::omega(), p);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
      }
      return out;
    };
    auto bits = [&](std::size_t n, bool nonzero) {
      std::vector<bool> out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = coin();
      if (nonzero) out[below(n)] = true;
      return out;
    };
    auto counts = [&](std::size_t n) {
      std::vector<Ordinal> out(n);
      for (auto& c : out) c = below(5) == 0 ? Ordinal::omega() : Ordinal(below(3));
      return out;
    };
    switch (below(6)) {
      case 0: {
        std::vector<std::size_t> order(below(5));
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[below(i)]);
        return MapSpec::permute(std::move(order));
      }
      case 1: return MapSpec::move_front(positions(true));
      case 2: return MapSpec::even_odd().then(MapSpec::swap_blocks());
      case 3: return MapSpec::mask(bits(below(4), false), bits(1 + below(3), true));
      case 4: return MapSpec::repeat(counts(below(4)), counts(1 + below(3)));
      default: return MapSpec::move_front(positions(false)).then(MapSpec::permute({1, 0}));
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ordsum::testing

#endif  // ORDSUM_TESTS_SUPPORT_GENERATORS_HPP
