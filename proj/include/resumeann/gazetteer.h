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

#ifndef RESUMEANN_GAZETTEER_H_
#define RESUMEANN_GAZETTEER_H_

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "resumeann/document.h"
#include "resumeann/ontology.h"
#include "resumeann/tagger.h"

namespace resumeann {

// Index over every instance label and variant of an ontology.
//
// A label is reduced to its content tokens with the same tokenizer and
// stopword filter that the pipeline applies to documents. A match is a run of
// consecutive filtered document tokens with the same folded forms whose
// document text, folded and with whitespace collapsed, equals the label's
// text between its first and last content token. So "Université de Tunis"
// matches "UNIVERSITE DE TUNIS" but not "Université, Tunis".
//
// Stopwords at the edges of a label ("Le Bardo") are not needed for a match,
// but when the document has them the match grows to cover them.
class Gazetteer {
 public:
  Gazetteer(const OntologySchema &schema, const StopwordList &stopwords);

  // Longest match first: every candidate match is collected, then accepted
  // in order of (longer span, earlier start, earlier declaration) unless it
  // overlaps an already accepted match. Results are sorted by start.
  std::vector<Annotation> Match(const SourceDocument &doc,
                                const std::vector<Token> &filtered) const;

  size_t entry_count() const { return entry_count_; }

 private:
  struct Entry {
    std::vector<std::string> keys;  // folded content tokens
    std::string core;               // folded, whitespace-normalized text
    std::string full;               // same, for the whole label
    size_t prefix_chars = 0;        // label characters before the core
    size_t suffix_chars = 0;        // and after it
    std::string class_name;
    size_t order = 0;
  };

  static std::pair<size_t, size_t> Extend(const SourceDocument &doc,
                                          const Entry &entry, size_t start,
                                          size_t end);

  std::unordered_map<std::string, std::vector<Entry>> by_first_key_;
  size_t entry_count_ = 0;
};

// Convenience wrapper that builds a temporary index.
std::vector<Annotation> MatchGazetteer(const SourceDocument &doc,
                                       const std::vector<Token> &filtered,
                                       const OntologySchema &schema,
                                       const StopwordList &stopwords);

}  // namespace resumeann

#endif  // RESUMEANN_GAZETTEER_H_
