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

#ifndef RESUMEANN_LEXICON_H_
#define RESUMEANN_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "resumeann/errors.h"

namespace resumeann {

// The four DELAS part-of-speech codes. Declaration order is the tie-break
// order used when a surface form is ambiguous.
enum class PartOfSpeech { kNoun, kAdjective, kAdverb, kVerb };

std::string_view PosCode(PartOfSpeech pos);
std::optional<PartOfSpeech> ParsePosCode(std::string_view code);

struct LexiconEntry {
  std::string surface;
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::kNoun;

  auto operator<=>(const LexiconEntry &other) const = default;
};

// Part-of-speech code outside {V, N, A, ADV}.
class CodeError : public Error {
 public:
  CodeError(const std::string &source, int line, const std::string &code)
      : Error(source + ":" + std::to_string(line) +
              ": unknown part-of-speech code '" + code + "'"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Morphological dictionary in the DELAS style: one "surface,lemma.POS" entry
// per line, '#' comments, blank lines ignored. Entries are indexed by the
// folded surface so lookups ignore case and diacritics.
class Lexicon {
 public:
  static Lexicon Load(const std::filesystem::path &path);
  static Lexicon Parse(std::string_view text,
                       const std::string &source = "<lexicon>");

  // Adds an entry unless the same (surface, lemma, pos) triple is present.
  // Returns true if the entry was new.
  bool Add(LexiconEntry entry);

  // All entries whose folded surface equals the folded query, in insertion
  // order. Empty when the form is unknown.
  std::vector<LexiconEntry> Lookup(std::string_view surface) const;

  size_t entry_count() const { return entry_count_; }

  // Canonical text form: sorted, deduplicated, one entry per line.
  std::string Dump() const;

  // All entries in canonical order.
  std::vector<LexiconEntry> Entries() const;

  bool operator==(const Lexicon &other) const {
    return Entries() == other.Entries();
  }

 private:
  std::unordered_map<std::string, std::vector<LexiconEntry>> by_folded_;
  size_t entry_count_ = 0;
};

}  // namespace resumeann

#endif  // RESUMEANN_LEXICON_H_
