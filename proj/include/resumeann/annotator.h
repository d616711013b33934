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

#ifndef RESUMEANN_ANNOTATOR_H_
#define RESUMEANN_ANNOTATOR_H_

#include <vector>

#include "resumeann/document.h"
#include "resumeann/gazetteer.h"
#include "resumeann/lexicon.h"
#include "resumeann/ontology.h"
#include "resumeann/patterns.h"
#include "resumeann/tagger.h"

namespace resumeann {

// The annotation pipeline: tokenize, tag, filter, then gazetteer and pattern
// matching. Holds references to the knowledge bases, which must outlive it,
// plus the compiled gazetteer index and recognizers. Annotate() is const and
// may be called from several threads at once.
class Annotator {
 public:
  Annotator(const OntologySchema &schema, const Lexicon &lexicon,
            const StopwordList &stopwords);

  // Sorted by (start, end, class). Where a pattern annotation overlaps a
  // gazetteer annotation the gazetteer one is dropped.
  std::vector<Annotation> Annotate(const SourceDocument &doc) const;

  const OntologySchema &schema() const { return schema_; }

 private:
  const OntologySchema &schema_;
  const Lexicon &lexicon_;
  const StopwordList &stopwords_;
  Gazetteer gazetteer_;
  PatternRecognizer patterns_;
};

std::vector<Annotation> Annotate(const SourceDocument &doc,
                                 const OntologySchema &schema,
                                 const Lexicon &lexicon,
                                 const StopwordList &stopwords);

}  // namespace resumeann

#endif  // RESUMEANN_ANNOTATOR_H_
