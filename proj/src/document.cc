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

#include "resumeann/document.h"

#include "resumeann/errors.h"
#include "resumeann/text.h"

namespace resumeann {

SourceDocument::SourceDocument(std::string id, std::string text)
    : id_(std::move(id)), text_(std::move(text)), chars_(DecodeUtf8(text_)) {
  byte_offsets_.reserve(chars_.size() + 1);
  folded_view_.reserve(chars_.size());
  size_t offset = 0;
  for (char32_t c : chars_) {
    byte_offsets_.push_back(offset);
    offset += c < 0x80 ? 1 : c < 0x800 ? 2 : c < 0x10000 ? 3 : 4;
    char32_t folded = FoldChar(c);
    if (folded < 0x80) {
      folded_view_.push_back(static_cast<char>(folded));
    } else if (IsSpace(c)) {
      folded_view_.push_back(' ');
    } else {
      folded_view_.push_back('\x01');
    }
  }
  byte_offsets_.push_back(offset);
}

std::string_view SourceDocument::Slice(size_t start, size_t end) const {
  if (end > chars_.size()) end = chars_.size();
  if (start > end) start = end;
  return std::string_view(text_).substr(
      byte_offsets_[start], byte_offsets_[end] - byte_offsets_[start]);
}

std::string_view RecognizerName(Recognizer r) {
  switch (r) {
    case Recognizer::kGazetteer: return "gazetteer";
    case Recognizer::kPattern: return "pattern";
    case Recognizer::kExternal: return "external";
  }
  return "external";
}

}  // namespace resumeann
