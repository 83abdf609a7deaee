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

#include "ordsum/errors.hpp"
#include "ordsum/series.hpp"
#include "support/generators.hpp"

namespace ordsum {
namespace {

Ordinal O(const char* text) { return parse_ordinal(text); }
Series S(const char* text) { return parse_series(text); }

const char* const kRunning = "cat([fin(w^2),fin(w)];[fin(1)])";

TEST(SeriesOrderType, Examples) {
  EXPECT_EQ(S("fin(1,2)").order_type(), O("2"));
  EXPECT_EQ(S("cat([fin(w)];[fin(1)])").order_type(), O("w"));
  EXPECT_EQ(S("cat([];[cat([];[fin(1)])])").order_type(), O("w^2"));
  EXPECT_EQ(S("fin()").order_type(), O("0"));
}

TEST(SeriesTermAt, Examples) {
  const Series s = S(kRunning);
  EXPECT_EQ(term_at(s, O("0")), O("w^2"));
  EXPECT_EQ(term_at(s, O("1")), O("w"));
  EXPECT_EQ(term_at(s, O("7")), O("1"));
  EXPECT_THROW(term_at(s, O("w")), IndexOutOfRange);
  const Series two = S("cat([cat([];[fin(1)])];[fin(w)])");
  EXPECT_EQ(term_at(two, O("w+3")), O("w"));
  EXPECT_EQ(term_at(two, O("3")), O("1"));
}

TEST(SeriesTotalSum, Examples) {
  EXPECT_EQ(total_sum(S("cat([];[fin(1)])")), O("w"));
  EXPECT_EQ(total_sum(S("cat([];[fin(1),fin(w)])")), O("w^2"));
  EXPECT_EQ(total_sum(S(kRunning)), O("w^2+w*2"));
}

TEST(SeriesTailSum, Examples) {
  const Series s = S(kRunning);
  EXPECT_EQ(tail_sum(s, O("0")), O("w^2+w*2"));
  EXPECT_EQ(tail_sum(s, O("1")), O("w*2"));
  EXPECT_EQ(tail_sum(s, O("5")), O("w"));
  EXPECT_THROW(tail_sum(s, O("w")), IndexOutOfRange);
}

TEST(SeriesTailSumSet, Examples) {
  TailReport r = tail_sum_set(S("cat([];[fin(1)])"));
  EXPECT_EQ(r.values, OrdinalSet({O("w")}));
  EXPECT_EQ(r.minimum, O("w"));
  EXPECT_EQ(r.witness, O("0"));

  r = tail_sum_set(S(kRunning));
  EXPECT_EQ(r.values, OrdinalSet({O("w^2+w*2"), O("w*2"), O("w")}));
  EXPECT_EQ(r.minimum, O("w"));
  EXPECT_EQ(r.witness, O("2"));

  r = tail_sum_set(S("cat([];[fin(1),fin(w)])"));
  EXPECT_EQ(r.values, OrdinalSet({O("w^2")}));
  EXPECT_EQ(r.witness, O("0"));
}

TEST(SeriesPsi, Examples) {
  EXPECT_EQ(psi(S("cat([];[fin(1)])")), O("w"));
  EXPECT_EQ(psi(S(kRunning)), O("w"));
  EXPECT_EQ(psi(S("cat([];[fin(1),fin(w)])")), O("w^2"));
  EXPECT_EQ(psi(S("fin(w,3)")), O("0"));
}

TEST(SeriesExceptional, Examples) {
  EXPECT_TRUE(exceptional_multiset(S("cat([];[fin(1)])")).empty());
  const auto e = exceptional_multiset(S(kRunning));
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0], (PositionedTerm{O("0"), O("w^2")}));
  EXPECT_EQ(e[1], (PositionedTerm{O("1"), O("w")}));
  EXPECT_TRUE(exceptional_multiset(S("cat([fin(1)];[fin(w)])")).empty());
  EXPECT_THROW(exceptional_multiset(S("fin(1)")), UnsupportedOrderType);
}

TEST(SeriesValueSupport, Examples) {
  EXPECT_EQ(value_support(S("cat([];[fin(1)])"), O("1")), Support::infinite());
  EXPECT_EQ(value_support(S(kRunning), O("w^2")), Support::finite(1));
  EXPECT_EQ(value_support(S(kRunning), O("5")), Support::absent());
}

TEST(SeriesText, ParsesAndRejects) {
  EXPECT_EQ(to_string(S(kRunning)), kRunning);
  EXPECT_EQ(to_string(S("fin()")), "fin()");
  EXPECT_THROW(S("cat([];[])"), EmptyPeriod);
  EXPECT_THROW(S("cat([];[fin()])"), InvalidValue);
  EXPECT_THROW(S("cat([fin(1)])"), ParseError);
  EXPECT_THROW(S("fin(1,)"), ParseError);
  EXPECT_THROW(S("fin(1) x"), ParseError);
}

TEST(SeriesSlicing, DropTakeConcat) {
  const Series s = S(kRunning);
  EXPECT_TRUE(same_terms(drop(s, O("2")), S("cat([];[fin(1)])")));
  EXPECT_TRUE(same_terms(concat(take(s, O("3")), drop(s, O("3"))), s));
  const Series two = S("cat([cat([];[fin(1)])];[fin(w)])");
  EXPECT_TRUE(same_terms(concat(take(two, O("w+1")), drop(two, O("w+1"))), two));
  EXPECT_EQ(split_blocks(two).second, (OmegaForm{{}, {O("w")}}));
}

class SeriesProperties : public ::testing::Test {
 protected:
  testing::Gen gen{7};
};

TEST_F(SeriesProperties, TotalSumIsTailFromZero) {
  for (int i = 0; i < 300; ++i) {
    const Series s = gen.series();
    if (s.order_type().is_zero()) continue;
    ASSERT_EQ(total_sum(s), tail_sum(s, O("0"))) << to_string(s);
  }
}

TEST_F(SeriesProperties, PsiIsMinimumAndWitnessed) {
  for (int i = 0; i < 300; ++i) {
    const Series s = gen.series();
    if (!s.order_type().is_limit()) continue;
    const TailReport r = tail_sum_set(s);
    ASSERT_EQ(psi(s), r.values.min()) << to_string(s);
    ASSERT_EQ(r.minimum, r.values.min());
    ASSERT_EQ(tail_sum(s, r.witness), r.minimum);
    ASSERT_LT(r.witness, s.order_type());
  }
}

TEST_F(SeriesProperties, TailsTelescope) {
  for (int i = 0; i < 300; ++i) {
    const OmegaForm f = gen.omega_form();
    const Series s = f.to_series();
    const std::size_t g = gen.below(8), h = g + gen.below(8);
    Ordinal partial;
    for (std::size_t k = g; k < h; ++k) partial = add(partial, f.at(k));
    ASSERT_EQ(tail_sum(s, Ordinal(g)), add(partial, tail_sum(s, Ordinal(h)))) << to_string(s);
  }
}

TEST_F(SeriesProperties, CoreTermsAreAbsorbedByPsi) {
  for (int i = 0; i < 300; ++i) {
    const OmegaForm f = gen.omega_form();
    const Series s = f.to_series();
    const auto e = exceptional_multiset(s);
    ASSERT_LE(e.size(), f.prefix.size());
    const Ordinal p = psi(s);
    for (std::size_t k = 0; k < f.prefix.size() + 2 * f.period.size(); ++k) {
      const bool exceptional =
          std::any_of(e.begin(), e.end(), [&](const PositionedTerm& t) { return t.position == Ordinal(k); });
      const Ordinal& c = f.at(k);
      if (!exceptional && !c.is_zero()) ASSERT_LT(degree(c), degree(p)) << to_string(s);
    }
  }
}

TEST_F(SeriesProperties, OrderTypeMatchesReachablePositions) {
  for (int i = 0; i < 200; ++i) {
    const Series s = gen.series();
    const Ordinal& t = s.order_type();
    EXPECT_THROW(term_at(s, t), IndexOutOfRange) << to_string(s);
    if (t.is_zero()) continue;
    if (t.is_finite()) {
      EXPECT_NO_THROW(term_at(s, Ordinal(t.to_u64() - 1))) << to_string(s);
      continue;
    }
    // Drop one copy of the last block and step a few places into it.
    std::vector<Term> terms = t.terms();
    if (terms.back().coefficient > 1)
      terms.back().coefficient -= 1;
    else
      terms.pop_back();
    const Ordinal inside = add(Ordinal::from_terms(std::move(terms)), Ordinal(3));
    ASSERT_LT(inside, t);
    EXPECT_NO_THROW(term_at(s, inside)) << to_string(s) << " at " << to_string(inside);
  }
}

TEST_F(SeriesProperties, TextRoundTrip) {
  for (int i = 0; i < 500; ++i) {
    const Series s = gen.series(3);
    ASSERT_EQ(parse_series(to_string(s)), s) << to_string(s);
  }
}

TEST(SeriesOmegaForm, NormalizeIdentifiesEqualSequences) {
  const OmegaForm a{{O("1"), O("2"), O("1"), O("2")}, {O("1"), O("2")}};
  const OmegaForm b{{}, {O("1"), O("2"), O("1"), O("2")}};
  EXPECT_EQ(a.normalized(), b.normalized());
  EXPECT_EQ(a.normalized(), (OmegaForm{{}, {O("1"), O("2")}}));
}

}  // namespace
}  // namespace ordsum
