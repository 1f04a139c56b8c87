// Copyright 2026 The Interdict Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INTERDICT_SRC_TEXT_LINES_HPP_
#define INTERDICT_SRC_TEXT_LINES_HPP_

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "interdict/error.hpp"

namespace interdict::internal {

// Splits line-based text into whitespace tokens, skipping blank lines and
// '#' comment lines.
class TokenLines {
 public:
  explicit TokenLines(std::string_view text) : text_(text) {}

  // Advances to the next content line. Returns false at end of input.
  bool Next() {
    tokens_.clear();
    while (pos_ < text_.size()) {
      size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_number_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      Split(line);
      if (tokens_.empty() || tokens_.front().front() == '#') {
        tokens_.clear();
        continue;
      }
      return true;
    }
    return false;
  }

  // Next() that fails with a ParseError naming what was expected.
  void Require(std::string_view what) {
    if (!Next()) throw ParseError(line_number_, "unexpected end of input, expected " + std::string(what));
  }

  int line() const { return line_number_; }
  const std::vector<std::string_view>& tokens() const { return tokens_; }
  size_t size() const { return tokens_.size(); }
  std::string_view operator[](size_t i) const { return tokens_[i]; }

  [[noreturn]] void Fail(const std::string& reason) const {
    throw ParseError(line_number_, reason);
  }

  void ExpectKeyword(std::string_view keyword, size_t arity) const {
    if (tokens_.empty() || tokens_[0] != keyword) {
      Fail("expected '" + std::string(keyword) + "'");
    }
    if (arity != kAnyArity && tokens_.size() != arity + 1) {
      Fail("'" + std::string(keyword) + "' takes " + std::to_string(arity) +
           " argument(s)");
    }
  }

  long long Int(size_t i) const {
    long long value = 0;
    std::string_view tok = tokens_.at(i);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      Fail("'" + std::string(tok) + "' is not an integer");
    }
    return value;
  }

  long long NonNegativeInt(size_t i) const {
    const long long value = Int(i);
    if (value < 0) Fail("'" + std::string(tokens_[i]) + "' must be >= 0");
    return value;
  }

  double Real(size_t i) const {
    double value = 0;
    std::string_view tok = tokens_.at(i);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() ||
        !std::isfinite(value)) {
      Fail("'" + std::string(tok) + "' is not a finite decimal");
    }
    return value;
  }

  static constexpr size_t kAnyArity = static_cast<size_t>(-1);

 private:
  void Split(std::string_view line) {
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) tokens_.push_back(line.substr(i, j - i));
      i = j;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_number_ = 0;
  std::vector<std::string_view> tokens_;
};

inline std::string FormatShortest(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace interdict::internal

#endif  // INTERDICT_SRC_TEXT_LINES_HPP_
