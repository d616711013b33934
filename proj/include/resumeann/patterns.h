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

#ifndef RESUMEANN_PATTERNS_H_
#define RESUMEANN_PATTERNS_H_

#include <regex>
#include <vector>

#include "resumeann/document.h"

namespace resumeann {

// Rule-based recognizers for the classes whose instances cannot be listed:
// Date, Email, Phone and Fax. The grammars are documented in
// docs/formats.md. All matching happens on the document's folded view, so it
// is case- and accent-insensitive and reports code point offsets.
class PatternRecognizer {
 public:
  PatternRecognizer();

  // Non-overlapping annotations sorted by start. On overlap, dates beat
  // emails, which beat phone numbers; within a class the longer match wins.
  std::vector<Annotation> Recognize(const SourceDocument &doc) const;

 private:
  std::vector<std::regex> dates_;
  std::regex email_;
  std::regex phone_;
};

std::vector<Annotation> RecognizePatterns(const SourceDocument &doc);

}  // namespace resumeann

#endif  // RESUMEANN_PATTERNS_H_
