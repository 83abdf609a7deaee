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

#ifndef ORDSUM_SRC_CURSOR_HPP
#define ORDSUM_SRC_CURSOR_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ordsum/errors.hpp"
#include "ordsum/ordinal.hpp"

namespace ordsum::detail {

// Character cursor shared by the ordinal, series and map parsers.
// Whitespace is skipped before every token; UTF-8 omega is read as `w`.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t position() const noexcept { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  // True when the next token is `token` (omega counts as "w"); consumes it.
  bool accept(std::string_view token) {
    skip_space();
    if (token == "w" && text_.substr(pos_, kOmega.size()) == kOmega) {
      pos_ += kOmega.size();
      return true;
    }
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool peek(std::string_view token) {
    skip_space();
    if (token == "w" && text_.substr(pos_, kOmega.size()) == kOmega) return true;
    return text_.substr(pos_, token.size()) == token;
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail({std::string(token)});
  }

  Natural natural() {
    if (!peek_digit()) fail({"natural number"});
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  void expect_end() {
    if (!at_end()) fail({"end of input"});
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected));
  }

 private:
  static constexpr std::string_view kOmega = "\xCF\x89";  // U+03C9

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ord := sum ; sum := prod ('+' prod)* ; prod := atom ('*' nat)?
// atom := nat | 'w' ('^' '(' ord ')' | '^' nat)?
Ordinal parse_ordinal_expr(Cursor& in);

}  // namespace ordsum::detail

#endif  // ORDSUM_SRC_CURSOR_HPP
