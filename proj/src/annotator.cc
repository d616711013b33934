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

#include "resumeann/annotator.h"

#include <algorithm>

#include "resumeann/tokenizer.h"

namespace resumeann {

Annotator::Annotator(const OntologySchema &schema, const Lexicon &lexicon,
                     const StopwordList &stopwords)
    : schema_(schema),
      lexicon_(lexicon),
      stopwords_(stopwords),
      gazetteer_(schema, stopwords) {}

std::vector<Annotation> Annotator::Annotate(const SourceDocument &doc) const {
  std::vector<Token> tokens = Tokenize(doc);
  TagTokens(&tokens, lexicon_);
  std::vector<Token> kept = FilterTokens(tokens, stopwords_);

  std::vector<Annotation> patterns = patterns_.Recognize(doc);
  std::vector<Annotation> result = patterns;
  for (Annotation &a : gazetteer_.Match(doc, kept)) {
    bool shadowed = std::any_of(
        patterns.begin(), patterns.end(),
        [&](const Annotation &p) { return p.Overlaps(a); });
    if (!shadowed) result.push_back(std::move(a));
  }
  std::sort(result.begin(), result.end(), AnnotationLess);
  result.erase(std::unique(result.begin(), result.end(),
                           [](const Annotation &a, const Annotation &b) {
                             return a.start == b.start && a.end == b.end &&
                                    a.class_name == b.class_name;
                           }),
               result.end());
  return result;
}

std::vector<Annotation> Annotate(const SourceDocument &doc,
                                 const OntologySchema &schema,
                                 const Lexicon &lexicon,
                                 const StopwordList &stopwords) {
  return Annotator(schema, lexicon, stopwords).Annotate(doc);
}

}  // namespace resumeann
