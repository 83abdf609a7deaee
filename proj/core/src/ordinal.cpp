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

#include "ordsum/ordinal.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <utility>

#include "cursor.hpp"
#include "ordsum/errors.hpp"

namespace ordsum {

namespace {

std::atomic<int> g_max_depth{8};

int depth_of(const std::vector<Term>& terms) {
  int depth = 0;
  for (const Term& t : terms) {
    if (t.exponent.is_zero()) continue;
    depth = std::max(depth, 1 + t.exponent.depth());
  }
  return depth;
}

// Bit budget for finite powers k^m.
constexpr std::size_t kMaxPowerBits = std::size_t{1} << 20;

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& detail)
    : Error([&] {
        std::ostringstream msg;
        msg << "parse error at offset " << position;
        if (!expected.empty()) {
          msg << ": expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg << " or ";
            msg << '\'' << expected[i] << '\'';
          }
        }
        if (!detail.empty()) msg << " (" << detail << ")";
        return msg.str();
      }()),
      position_(position),
      expected_(std::move(expected)) {}

DepthExceeded::DepthExceeded(int depth, int bound)
    : DomainError("ordinal nesting depth " + std::to_string(depth) + " exceeds bound " +
                  std::to_string(bound)) {}

int max_depth() noexcept { return g_max_depth.load(std::memory_order_relaxed); }

void set_max_depth(int bound) {
  if (bound < 1) throw InvalidValue("depth bound must be at least 1");
  g_max_depth.store(bound, std::memory_order_relaxed);
}

Ordinal make_checked(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw InvalidValue("CNF coefficient must be positive");
    if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater)
      throw InvalidValue("CNF exponents must be strictly decreasing");
  }
  const int depth = depth_of(terms);
  if (depth > max_depth()) throw DepthExceeded(depth, max_depth());
  return Ordinal(std::move(terms));
}

Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_.push_back(Term{Ordinal(), Natural(n)});
}

Ordinal Ordinal::natural(const Natural& n) {
  if (n < 0) throw InvalidValue("negative natural");
  if (n == 0) return Ordinal();
  return Ordinal(std::vector<Term>{Term{Ordinal(), n}});
}

Ordinal Ordinal::omega() { return omega_power(Ordinal(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, const Natural& coefficient) {
  if (coefficient == 0) return Ordinal();
  return make_checked({Term{exponent, coefficient}});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) { return make_checked(std::move(terms)); }

bool Ordinal::is_finite() const { return terms_.empty() || terms_.front().exponent.is_zero(); }

bool Ordinal::is_limit() const { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

Natural Ordinal::finite_value() const {
  if (!is_finite()) throw DomainError("ordinal " + to_string(*this) + " is not finite");
  return terms_.empty() ? Natural(0) : terms_.front().coefficient;
}

std::uint64_t Ordinal::to_u64() const {
  Natural n = finite_value();
  if (n > std::numeric_limits<std::uint64_t>::max())
    throw DomainError("natural " + n.str() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(n);
}

int Ordinal::depth() const { return depth_of(terms_); }

bool operator==(const Term& a, const Term& b) {
  return a.coefficient == b.coefficient && a.exponent == b.exponent;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(x[i].exponent, y[i].exponent); c != 0) return c;
    if (x[i].coefficient != y[i].coefficient)
      return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
  }
  return x.size() <=> y.size();
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& head = b.terms().front();
  std::vector<Term> out;
  std::size_t rest = 0;
  for (const Term& t : a.terms()) {
    auto c = compare(t.exponent, head.exponent);
    if (c == std::strong_ordering::greater) {
      out.push_back(t);
    } else {
      if (c == std::strong_ordering::equal) {
        out.push_back(Term{head.exponent, t.coefficient + head.coefficient});
        rest = 1;
      }
      break;
    }
  }
  out.insert(out.end(), b.terms().begin() + static_cast<std::ptrdiff_t>(rest), b.terms().end());
  return make_checked(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Term& lead = a.terms().front();
  Ordinal result;
  for (const Term& t : b.terms()) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      // a * n: leading coefficient scales, lower terms survive once.
      std::vector<Term> terms = a.terms();
      terms.front().coefficient = lead.coefficient * t.coefficient;
      piece = make_checked(std::move(terms));
    } else {
      piece = Ordinal::omega_power(add(lead.exponent, t.exponent), t.coefficient);
    }
    result = add(result, piece);
  }
  return result;
}

Ordinal pow(const Ordinal& base, const Ordinal& exponent) {
  if (exponent.is_zero()) return Ordinal(1);
  if (base.is_zero()) return Ordinal();
  if (base == Ordinal(1)) return base;

  std::vector<Term> infinite_part;
  Natural finite_part = 0;
  for (const Term& t : exponent.terms()) {
    if (t.exponent.is_zero())
      finite_part = t.coefficient;
    else
      infinite_part.push_back(t);
  }
  const Ordinal limit_exponent = make_checked(infinite_part);

  if (base.is_finite()) {
    const Natural k = base.finite_value();
    Ordinal head(1);
    if (!limit_exponent.is_zero()) {
      // k^(w*g) = w^g, where w*g is the limit part of the exponent.
      std::vector<Term> g;
      for (const Term& t : infinite_part)
        g.push_back(Term{left_subtract(Ordinal(1), t.exponent), t.coefficient});
      head = Ordinal::omega_power(make_checked(std::move(g)));
    }
    const std::size_t bits = msb(k) + 1;
    if (finite_part > kMaxPowerBits / bits)
      throw DomainError("finite power exceeds the arithmetic budget");
    Natural tail = boost::multiprecision::pow(k, static_cast<unsigned>(finite_part));
    return mul(head, Ordinal::natural(tail));
  }

  Ordinal head(1);
  if (!limit_exponent.is_zero())
    head = Ordinal::omega_power(mul(degree(base), limit_exponent));
  Ordinal tail(1);
  Ordinal square = base;
  Natural m = finite_part;
  while (m > 0) {
    if ((m & 1) != 0) tail = mul(tail, square);
    m >>= 1;
    if (m > 0) square = mul(square, square);
  }
  return mul(head, tail);
}

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  if (compare(a, b) == std::strong_ordering::greater) throw NotLeftSubtractable();
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
  if (i == x.size()) return make_checked(std::vector<Term>(y.begin() + static_cast<std::ptrdiff_t>(i), y.end()));
  std::vector<Term> out;
  if (x[i].exponent == y[i].exponent) {
    out.push_back(Term{y[i].exponent, y[i].coefficient - x[i].coefficient});
    ++i;
  }
  out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(i), y.end());
  return make_checked(std::move(out));
}

Ordinal degree(const Ordinal& a) {
  if (a.is_zero()) throw ZeroHasNoDegree();
  return a.terms().front().exponent;
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const Term& t : a.terms()) {
    if (!out.empty()) out += '+';
    const Ordinal& e = t.exponent;
    if (e.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (e.is_finite()) {
      if (e != Ordinal(1)) out += '^' + e.finite_value().str();
    } else {
      out += "^(" + to_string(e) + ')';
    }
    if (t.coefficient != 1) out += '*' + t.coefficient.str();
  }
  return out;
}

namespace detail {

namespace {

Ordinal parse_atom(Cursor& in) {
  if (in.peek_digit()) return Ordinal::natural(in.natural());
  if (!in.accept("w")) in.fail({"natural number", "w"});
  if (!in.accept("^")) return Ordinal::omega();
  if (in.accept("(")) {
    Ordinal e = parse_ordinal_expr(in);
    in.expect(")");
    return Ordinal::omega_power(e);
  }
  if (!in.peek_digit()) in.fail({"(", "natural number"});
  return Ordinal::omega_power(Ordinal::natural(in.natural()));
}

Ordinal parse_product(Cursor& in) {
  Ordinal value = parse_atom(in);
  if (in.accept("*")) value = mul(value, Ordinal::natural(in.natural()));
  return value;
}

}  // namespace

Ordinal parse_ordinal_expr(Cursor& in) {
  Ordinal value = parse_product(in);
  while (in.accept("+")) value = add(value, parse_product(in));
  return value;
}

}  // namespace detail

Ordinal parse_ordinal(std::string_view text) {
  detail::Cursor in(text);
  Ordinal value = detail::parse_ordinal_expr(in);
  in.expect_end();
  return value;
}

}  // namespace ordsum
