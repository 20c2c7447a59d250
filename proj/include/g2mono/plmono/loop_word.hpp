// Copyright 2026 The g2mono Authors
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

#pragma once

// Loop words: products of named local monodromies, composed left to right
// as written. Literal syntax is whitespace separated tokens NAME or
// NAME^1 / NAME^+1 / NAME^-1, e.g. "T0 T1 T0^-1".

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/linalg.hpp"
#include "g2mono/exact/matrix.hpp"

namespace g2mono {

struct LoopLetter {
  std::string name;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const LoopLetter&, const LoopLetter&) = default;
};

using MatrixTable = std::map<std::string, RationalMatrix, std::less<>>;

class LoopWord {
 public:
  LoopWord() = default;
  explicit LoopWord(std::vector<LoopLetter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw DomainError("empty loop word");
    for (const auto& l : letters_)
      if (l.exponent != 1 && l.exponent != -1) throw DomainError("loop word exponents must be +1 or -1");
  }

  static LoopWord parse(std::string_view text) {
    std::vector<LoopLetter> letters;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      LoopLetter l;
      const auto caret = tok.find('^');
      l.name = tok.substr(0, caret);
      if (l.name.empty()) throw ParseError("loop word token '" + tok + "' has no matrix name");
      if (caret != std::string::npos) {
        const std::string e = tok.substr(caret + 1);
        if (e == "-1") {
          l.exponent = -1;
        } else if (e == "1" || e == "+1") {
          l.exponent = 1;
        } else {
          throw ParseError("loop word exponent must be 1 or -1 in '" + tok + "'");
        }
      }
      letters.push_back(std::move(l));
    }
    if (letters.empty()) throw ParseError("empty loop word");
    return LoopWord(std::move(letters));
  }

  const std::vector<LoopLetter>& letters() const noexcept { return letters_; }

  /// The word read backwards with every exponent flipped.
  LoopWord inverse() const {
    std::vector<LoopLetter> inv(letters_.rbegin(), letters_.rend());
    for (auto& l : inv) l.exponent = -l.exponent;
    return LoopWord(std::move(inv));
  }

  LoopWord then(const LoopWord& other) const {
    std::vector<LoopLetter> all = letters_;
    all.insert(all.end(), other.letters_.begin(), other.letters_.end());
    return LoopWord(std::move(all));
  }

  std::string to_string() const {
    std::string out;
    for (const auto& l : letters_) {
      if (!out.empty()) out += ' ';
      out += l.name;
      if (l.exponent == -1) out += "^-1";
    }
    return out;
  }

 private:
  std::vector<LoopLetter> letters_;
};

/// Product of the word's matrices in written order.
inline RationalMatrix evaluate_word(const LoopWord& word, const MatrixTable& table) {
  if (word.letters().empty()) throw DomainError("empty loop word");
  RationalMatrix acc;
  bool first = true;
  for (const auto& l : word.letters()) {
    const auto it = table.find(l.name);
    if (it == table.end()) throw DomainError("loop word names unknown matrix '" + l.name + "'");
    const RationalMatrix& m = it->second;
    m.require_square("loop word letter");
    RationalMatrix factor;
    if (l.exponent == -1) {
      if (det(m) == 0) throw DomainError("singular matrix '" + l.name + "' raised to -1");
      factor = inverse(m);
    } else {
      factor = m;
    }
    if (first) {
      acc = std::move(factor);
      first = false;
    } else {
      if (acc.rows() != factor.rows()) throw DimensionError("loop word mixes matrix sizes");
      acc = acc * factor;
    }
  }
  return acc;
}

}  // namespace g2mono
