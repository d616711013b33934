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

#ifndef RESUMEANN_TOKENIZER_H_
#define RESUMEANN_TOKENIZER_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "resumeann/document.h"

namespace resumeann {

struct SentenceSpan {
  size_t start = 0;
  size_t end = 0;
  bool operator==(const SentenceSpan &other) const = default;
};

// Sentence boundaries fall after . ! ? and … and at every line break. A
// period between two digits ("10.04.1985") is not a boundary. Returned spans
// are trimmed of whitespace, so together they cover each non-whitespace
// character exactly once.
std::vector<SentenceSpan> SplitSentences(const SourceDocument &doc);

// Index of the sentence containing offset, or spans.size() if none does.
size_t SentenceIndexAt(const std::vector<SentenceSpan> &spans, size_t offset);

// Maximal letter runs become words. Maximal digit runs, including single
// '/', '-' or '.' characters between two digits, become numbers. Any other
// non-space character is a punctuation token of its own.
std::vector<Token> Tokenize(const SourceDocument &doc);

}  // namespace resumeann

#endif  // RESUMEANN_TOKENIZER_H_
