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

#ifndef RESUMEANN_TAGGER_H_
#define RESUMEANN_TAGGER_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "resumeann/document.h"
#include "resumeann/lexicon.h"

namespace resumeann {

// Function words dropped before annotation. One word per line, '#'
// comments; matching is on the folded form.
class StopwordList {
 public:
  StopwordList() = default;

  static StopwordList Load(const std::filesystem::path &path);
  static StopwordList Parse(std::string_view text);

  bool Contains(std::string_view surface) const;
  size_t size() const { return folded_.size(); }

 private:
  std::unordered_set<std::string> folded_;
};

// Sets lemma and pos on every word token the lexicon knows. When a form is
// ambiguous the entry with the highest-priority tag wins (N, A, ADV, V); the
// first such entry in file order supplies the lemma.
void TagTokens(std::vector<Token> *tokens, const Lexicon &lexicon);
std::vector<Token> TagTokens(std::vector<Token> tokens, const Lexicon &lexicon);

// Keeps tagged content words, numbers and untagged words (candidate proper
// nouns); drops punctuation and stopwords. Order is preserved.
std::vector<Token> FilterTokens(const std::vector<Token> &tokens,
                                const StopwordList &stopwords);

}  // namespace resumeann

#endif  // RESUMEANN_TAGGER_H_
