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

#include "resumeann/tagger.h"

#include <fstream>
#include <sstream>

#include "resumeann/errors.h"
#include "resumeann/text.h"

namespace resumeann {

StopwordList StopwordList::Load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read stopword file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

StopwordList StopwordList::Parse(std::string_view text) {
  StopwordList list;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;
    list.folded_.insert(FoldText(line));
  }
  return list;
}

bool StopwordList::Contains(std::string_view surface) const {
  return folded_.count(FoldText(surface)) > 0;
}

void TagTokens(std::vector<Token> *tokens, const Lexicon &lexicon) {
  for (Token &token : *tokens) {
    if (token.kind != TokenKind::kWord) continue;
    std::vector<LexiconEntry> entries = lexicon.Lookup(token.surface);
    if (entries.empty()) continue;
    const LexiconEntry *best = &entries.front();
    for (const LexiconEntry &e : entries) {
      if (e.pos < best->pos) best = &e;
    }
    token.lemma = best->lemma;
    token.pos = best->pos;
  }
}

std::vector<Token> TagTokens(std::vector<Token> tokens,
                             const Lexicon &lexicon) {
  TagTokens(&tokens, lexicon);
  return tokens;
}

std::vector<Token> FilterTokens(const std::vector<Token> &tokens,
                                const StopwordList &stopwords) {
  std::vector<Token> kept;
  kept.reserve(tokens.size());
  for (const Token &token : tokens) {
    if (token.kind == TokenKind::kPunctuation) continue;
    if (token.kind == TokenKind::kWord && stopwords.Contains(token.surface)) {
      continue;
    }
    kept.push_back(token);
  }
  return kept;
}

}  // namespace resumeann
