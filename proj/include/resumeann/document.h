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

#ifndef RESUMEANN_DOCUMENT_H_
#define RESUMEANN_DOCUMENT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "resumeann/lexicon.h"

namespace resumeann {

// A resume as plain UTF-8 text. All offsets handed out by the pipeline are
// code point offsets into this text.
class SourceDocument {
 public:
  // Throws EncodingError if text is not valid UTF-8.
  SourceDocument(std::string id, std::string text);

  const std::string &id() const { return id_; }
  const std::string &text() const { return text_; }
  size_t char_count() const { return chars_.size(); }
  const std::u32string &chars() const { return chars_; }

  // UTF-8 text of the code point range [start, end).
  std::string_view Slice(size_t start, size_t end) const;

  // One byte per code point: the folded character when it is ASCII, a space
  // for Unicode whitespace, and 0x01 otherwise. Byte offsets in this view
  // equal code point offsets in the document, which lets byte-oriented
  // matchers report document offsets directly.
  const std::string &folded_view() const { return folded_view_; }

 private:
  std::string id_;
  std::string text_;
  std::u32string chars_;
  std::vector<size_t> byte_offsets_;  // char_count() + 1 entries
  std::string folded_view_;
};

enum class TokenKind { kWord, kNumber, kPunctuation };

struct Token {
  std::string surface;
  size_t start = 0;
  size_t end = 0;
  TokenKind kind = TokenKind::kWord;
  std::optional<std::string> lemma;
  std::optional<PartOfSpeech> pos;

  bool operator==(const Token &other) const = default;
};

enum class Recognizer { kGazetteer, kPattern, kExternal };

std::string_view RecognizerName(Recognizer r);

// A character span bound to an ontology class.
struct Annotation {
  size_t start = 0;
  size_t end = 0;
  std::string class_name;
  std::string matched_text;
  Recognizer recognizer = Recognizer::kExternal;

  size_t length() const { return end - start; }
  bool Overlaps(const Annotation &other) const {
    return start < other.end && other.start < end;
  }

  // Identity ignores which recognizer produced the annotation.
  bool operator==(const Annotation &other) const {
    return start == other.start && end == other.end &&
           class_name == other.class_name && matched_text == other.matched_text;
  }
};

// Orders by (start, end, class_name).
inline bool AnnotationLess(const Annotation &a, const Annotation &b) {
  return std::tie(a.start, a.end, a.class_name) <
         std::tie(b.start, b.end, b.class_name);
}

}  // namespace resumeann

#endif  // RESUMEANN_DOCUMENT_H_
