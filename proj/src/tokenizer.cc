// Copyright 2026 The resumeann Authors.
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

#include "resumeann/tokenizer.h"

#include <algorithm>

#include "resumeann/text.h"

namespace resumeann {
namespace {

bool IsDigitAt(const std::u32string &chars, size_t i) {
  return i < chars.size() && Classify(chars[i]) == CharClass::kDigit;
}

bool IsSentenceFinal(const std::u32string &chars, size_t i) {
  char32_t c = chars[i];
  if (c == '!' || c == '?' || c == 0x2026) return true;
  if (c != '.') return false;
  return !(i > 0 && IsDigitAt(chars, i - 1) && IsDigitAt(chars, i + 1));
}

}  // namespace

std::vector<SentenceSpan> SplitSentences(const SourceDocument &doc) {
  const std::u32string &chars = doc.chars();
  std::vector<SentenceSpan> spans;
  size_t i = 0;
  const size_t n = chars.size();
  while (i < n) {
    while (i < n && IsSpace(chars[i])) ++i;
    if (i == n) break;
    size_t start = i;
    size_t last = i;  // last non-space character of the sentence
    while (i < n) {
      char32_t c = chars[i];
      if (c == '\n' || c == '\r' || c == 0x2028 || c == 0x2029) break;
      if (!IsSpace(c)) last = i;
      if (IsSentenceFinal(chars, i)) {
        // Swallow a run of closing marks such as "?!" or ".)".
        ++i;
        while (i < n && !IsSpace(chars[i]) &&
               Classify(chars[i]) == CharClass::kPunct) {
          last = i++;
        }
        break;
      }
      ++i;
    }
    spans.push_back({start, last + 1});
  }
  return spans;
}

size_t SentenceIndexAt(const std::vector<SentenceSpan> &spans, size_t offset) {
  auto it = std::upper_bound(
      spans.begin(), spans.end(), offset,
      [](size_t value, const SentenceSpan &s) { return value < s.start; });
  if (it == spans.begin()) return spans.size();
  --it;
  if (offset < it->end) return static_cast<size_t>(it - spans.begin());
  return spans.size();
}

std::vector<Token> Tokenize(const SourceDocument &doc) {
  const std::u32string &chars = doc.chars();
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = chars.size();
  while (i < n) {
    CharClass cls = Classify(chars[i]);
    if (cls == CharClass::kSpace) {
      ++i;
      continue;
    }
    size_t start = i;
    TokenKind kind;
    if (cls == CharClass::kLetter) {
      kind = TokenKind::kWord;
      while (i < n && Classify(chars[i]) == CharClass::kLetter) ++i;
    } else if (cls == CharClass::kDigit) {
      kind = TokenKind::kNumber;
      while (i < n) {
        if (IsDigitAt(chars, i)) {
          ++i;
        } else if ((chars[i] == '/' || chars[i] == '-' || chars[i] == '.') &&
                   IsDigitAt(chars, i + 1)) {
          i += 2;
        } else {
          break;
        }
      }
    } else {
      kind = TokenKind::kPunctuation;
      ++i;
    }
    Token token;
    token.surface = std::string(doc.Slice(start, i));
    token.start = start;
    token.end = i;
    token.kind = kind;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace resumeann
