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

#ifndef ORDSUM_ORDINAL_HPP
#define ORDSUM_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordsum {

using Natural = boost::multiprecision::cpp_int;

struct Term;

// An ordinal below epsilon_0 in Cantor normal form:
//   w^e1*c1 + ... + w^ek*ck,  e1 > ... > ek,  ci >= 1.
// The empty term list is 0. Values are immutable and canonical, so equality
// is structural.
class Ordinal {
 public:
  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT(google-explicit-constructor)

  static Ordinal natural(const Natural& n);
  static Ordinal omega();
  // w^exponent * coefficient; coefficient 0 yields 0.
  static Ordinal omega_power(const Ordinal& exponent, const Natural& coefficient = 1);
  // Validates ordering, coefficients and the nesting bound.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const;
  bool is_limit() const;  // nonzero with no finite tail
  bool is_successor() const;
  // Throws DomainError when infinite.
  Natural finite_value() const;
  // Like finite_value, but also requires the value to fit in 64 bits.
  std::uint64_t to_u64() const;

  // 0 for finite ordinals, 1 + max exponent depth otherwise.
  int depth() const;

 private:
  explicit Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {}
  friend Ordinal make_checked(std::vector<Term> terms);

  std::vector<Term> terms_;
};

struct Term {
  Ordinal exponent;
  Natural coefficient;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
bool operator==(const Term& a, const Term& b);
inline bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms() == b.terms(); }
inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare(a, b); }

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal pow(const Ordinal& base, const Ordinal& exponent);
// The unique g with a + g = b. Throws NotLeftSubtractable when a > b.
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);
// Leading CNF exponent. Throws ZeroHasNoDegree for 0.
Ordinal degree(const Ordinal& a);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

// Nesting bound shared by every constructor; default 8.
int max_depth() noexcept;
void set_max_depth(int bound);

// Text form: `w^2*3+w*5+7`, `w^(w)+1`, `0`. Printing is the minimal form of
// the grammar; parsing accepts non-CNF input and folds it with add/mul.
std::string to_string(const Ordinal& a);
Ordinal parse_ordinal(std::string_view text);

}  // namespace ordsum

#endif  // ORDSUM_ORDINAL_HPP
