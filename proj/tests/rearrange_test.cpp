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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "ordsum/enumerate.hpp"
#include "ordsum/errors.hpp"
#include "ordsum/oracle.hpp"
#include "ordsum/rearrange.hpp"
#include "support/generators.hpp"

namespace ordsum {
namespace {

Ordinal O(const char* text) { return parse_ordinal(text); }
Series S(const char* text) { return parse_series(text); }
MapSpec M(const char* text) { return parse_map(text); }

const char* const kOnesThenOmegas = "cat([cat([];[fin(1)])];[fin(w)])";

TEST(RearrangeApply, Examples) {
  EXPECT_EQ(apply(M("permute([1,0])"), S("fin(w,1)")), S("fin(1,w)"));
  EXPECT_EQ(total_sum(apply(M("evenodd()"), S(kOnesThenOmegas))), O("w^2*2"));
  EXPECT_TRUE(same_terms(apply(M("mask([];[1,0])"), S("cat([];[fin(1),fin(w)])")), S("cat([];[fin(1)])")));
}

TEST(RearrangeApply, MoveFrontAndBlocks) {
  const Series s = S("cat([fin(w^2),fin(w)];[fin(1)])");
  EXPECT_TRUE(same_terms(apply(M("movefront([1])"), s), S("cat([fin(w,w^2)];[fin(1)])")));
  const Series two = S(kOnesThenOmegas);
  EXPECT_TRUE(same_terms(apply(M("swapblocks()"), two), S("cat([cat([];[fin(w)])];[fin(1)])")));
  EXPECT_TRUE(same_terms(apply(M("movefront([w])"), two), S("cat([fin(w),cat([];[fin(1)])];[fin(w)])")));
  EXPECT_TRUE(same_terms(apply(M("evenodd() ; evenodd()"), two), two));
}

TEST(RearrangeApply, RepeatCounts) {
  const Series s = S("cat([fin(w)];[fin(1)])");
  EXPECT_EQ(total_sum(apply(M("repeat([w];[0])"), s)), O("w^2"));
  EXPECT_EQ(total_sum(apply(M("repeat([2];[1])"), s)), O("w*3"));
  EXPECT_EQ(total_sum(apply(M("repeat([0];[1])"), s)), O("w"));
  EXPECT_THROW(apply(M("repeat([w];[1])"), s), InapplicableMap);
  EXPECT_THROW(apply(M("repeat([];[0])"), s), InapplicableMap);
}

TEST(RearrangeApply, InapplicableCombinators) {
  EXPECT_THROW(apply(M("evenodd()"), S("cat([];[fin(1)])")), InapplicableMap);
  EXPECT_THROW(apply(M("swapblocks()"), S("fin(1,2)")), InapplicableMap);
  EXPECT_THROW(apply(M("mask([];[1])"), S(kOnesThenOmegas)), InapplicableMap);
  EXPECT_THROW(apply(M("permute([2,0,1])"), S("fin(1,2)")), InapplicableMap);
}

TEST(RearrangeClassify, Kind) {
  EXPECT_EQ(classify_kind(M("evenodd()")), MapKind::bijection);
  EXPECT_EQ(classify_kind(M("mask([];[1,0])")), MapKind::injection);
  EXPECT_EQ(classify_kind(M("repeat([];[2])")), MapKind::general);
  EXPECT_EQ(classify_kind(M("repeat([1];[1])")), MapKind::bijection);
  EXPECT_EQ(classify_kind(M("mask([];[1]) ; repeat([];[2])")), MapKind::general);
  EXPECT_EQ(classify_kind(M("mask([];[1,0]) ; permute([1,0])")), MapKind::injection);
}

TEST(RearrangeClassify, ABSets) {
  EXPECT_EQ(ab_classify(MapSpec::identity()), (ABClass{false, true}));
  EXPECT_EQ(ab_classify(M("swapblocks()")), (ABClass{true, false}));
  EXPECT_EQ(ab_classify(M("evenodd()")), (ABClass{true, true}));
  EXPECT_EQ(ab_classify(M("movefront([w,3])")), (ABClass{false, true}));
  EXPECT_EQ(ab_classify(M("swapblocks() ; evenodd()")), (ABClass{true, true}));
  EXPECT_THROW(ab_classify(M("mask([];[1])")), InapplicableMap);
}

TEST(RearrangeClassify, ImageClass) {
  EXPECT_EQ(inj_image_class(M("permute([2,0,1])")), ImageClass::cofinite_image);
  EXPECT_EQ(inj_image_class(M("mask([];[1,0])")), ImageClass::coinfinite_image);
  EXPECT_EQ(inj_image_class(M("mask([0];[1])")), ImageClass::cofinite_image);
  EXPECT_EQ(inj_image_class(M("mask([0];[1]) ; mask([];[1,0])")), ImageClass::coinfinite_image);
  EXPECT_THROW(inj_image_class(M("evenodd()")), InapplicableMap);
  EXPECT_THROW(inj_image_class(M("repeat([];[2])")), InapplicableMap);
}

TEST(RearrangeDup, Examples) {
  EXPECT_TRUE(same_terms(dup(S("cat([fin(w)];[fin(1)])")), S("cat([];[fin(w,1)])")));
  EXPECT_TRUE(same_terms(dup(S("cat([];[fin(1)])")), S("cat([];[fin(1)])")));
  const Series d = dup(S("cat([fin(w^2),fin(w)];[fin(1)])"));
  EXPECT_TRUE(same_terms(d, S("cat([];[fin(w^2,w,1)])")));
  for (const char* v : {"w^2", "w", "1"}) EXPECT_EQ(value_support(d, O(v)), Support::infinite());
  EXPECT_THROW(dup(S("fin(1)")), UnsupportedOrderType);
}

TEST(RearrangeFamily, Examples) {
  const Series w = S("cat([fin(w^2),fin(w)];[fin(1)])");
  EXPECT_EQ(canonical_family(w, 0), std::vector<MapSpec>{MapSpec::identity()});
  const auto f2 = canonical_family(w, 2);
  EXPECT_NE(std::find(f2.begin(), f2.end(), M("permute([1,0])")), f2.end());
  const auto f1 = canonical_family(S(kOnesThenOmegas), 1);
  for (const char* m : {"permute([])", "swapblocks()", "evenodd()"})
    EXPECT_NE(std::find(f1.begin(), f1.end(), M(m)), f1.end()) << m;
  EXPECT_GE(canonical_family(S(kOnesThenOmegas), 3).size(), 100u);
  EXPECT_THROW(canonical_family(S("fin(1)"), 2), UnsupportedOrderType);
}

TEST(RearrangeFamily, DeduplicatedAndBijective) {
  const auto family = canonical_family(S(kOnesThenOmegas), 3);
  std::set<std::string> seen;
  for (const MapSpec& m : family) {
    EXPECT_TRUE(seen.insert(to_string(m)).second) << to_string(m);
    EXPECT_EQ(classify_kind(m), MapKind::bijection);
  }
}

TEST(RearrangeRemainder, PsiIsInvariantOnOmega) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Series s = generate_instance({seed, seed % 5, 1 + seed % 3, BlockShape::omega});
    for (const MapSpec& m : canonical_family(s, 4)) ASSERT_EQ(psi(apply(m, s)), psi(s)) << to_string(m);
  }
}

TEST(RearrangeRemainder, ClassificationMatchesOnOmega2) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Series s = generate_instance({seed, seed % 3, 1 + seed % 3, BlockShape::omega2});
    for (const MapSpec& m : canonical_family(s, 2))
      ASSERT_EQ(psi(apply(m, s)), classify_remainder(s, m)) << to_string(s) << " under " << to_string(m);
  }
}

// With an even-length period a value can sit at one parity only, and then an
// interleaving with A and B infinite need not have remainder mu3.
TEST(RearrangeRemainder, EvenPeriodParityCounterexample) {
  const Series s = S("cat([cat([];[fin(1,w)])];[fin(1)])");
  const MapSpec m = M("evenodd() ; swapblocks()");
  EXPECT_EQ(ab_classify(m), (ABClass{true, true}));
  EXPECT_EQ(remainder_triple(s).mu3, O("w"));
  EXPECT_EQ(classify_remainder(s, m), O("w"));
  EXPECT_EQ(psi(apply(m, s)), O("w^2"));
}

TEST(RearrangeText, Examples) {
  for (const char* text : {"permute([1,0])", "movefront([3,w+1])", "evenodd()", "swapblocks()",
                           "mask([0,1];[1,0])", "repeat([];[2,w])", "mask([];[1,0]) ; permute([1,0])"})
    EXPECT_EQ(to_string(M(text)), text);
  // Left step is applied first.
  const MapSpec m = M("mask([];[1,0]) ; permute([1,0])");
  EXPECT_EQ(m, MapSpec::mask({}, {true, false}).then(MapSpec::permute({1, 0})));
  EXPECT_THROW(M("permute([0,0])"), ParseError);
  EXPECT_THROW(M("mask([];[0])"), ParseError);
  EXPECT_THROW(M("mask([];[])"), ParseError);
  EXPECT_THROW(M("movefront([1,1])"), ParseError);
  EXPECT_THROW(M("repeat([w*2];[1])"), ParseError);
  EXPECT_THROW(M("evenodd() ;"), ParseError);
  EXPECT_THROW(M("rotate()"), ParseError);
}

TEST(RearrangeText, RoundTrip) {
  testing::Gen gen(99);
  for (int i = 0; i < 500; ++i) {
    MapSpec m = gen.map();
    if (gen.coin()) m = m.then(gen.map());
    ASSERT_EQ(parse_map(to_string(m)), m) << to_string(m);
  }
}

TEST(RearrangeCompose, IdentityStepsVanish) {
  const MapSpec swap = MapSpec::swap_blocks();
  EXPECT_EQ(MapSpec::identity().then(swap), swap);
  EXPECT_EQ(swap.then(MapSpec::identity()), swap);
  EXPECT_EQ(MapSpec::identity().then(MapSpec::identity()), MapSpec::identity());
}

TEST(RearrangeApply, BijectionsPreserveTermMultiset) {
  testing::Gen gen(5);
  for (int i = 0; i < 200; ++i) {
    const Series s = gen.omega_form().to_series();
    const MapSpec m = i % 2 ? MapSpec::permute({2, 0, 1}) : MapSpec::move_front({Ordinal(gen.below(6)), Ordinal(6)});
    const Series image = apply(m, s);
    for (const Ordinal& v : distinct_values(s)) ASSERT_EQ(value_support(image, v), value_support(s, v));
  }
}

}  // namespace
}  // namespace ordsum
