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

#ifndef RESUMEANN_TEXT_H_
#define RESUMEANN_TEXT_H_

#include <string>
#include <string_view>

namespace resumeann {

// Decodes UTF-8 into code points. Throws EncodingError on malformed input
// (overlong forms, surrogates and truncated sequences included).
std::u32string DecodeUtf8(std::string_view text);

void AppendUtf8(char32_t c, std::string *out);
std::string EncodeUtf8(std::u32string_view text);

// Character classes used by the tokenizer.
enum class CharClass { kSpace, kLetter, kDigit, kPunct };

CharClass Classify(char32_t c);

inline bool IsSpace(char32_t c) { return Classify(c) == CharClass::kSpace; }

// Lowercases and strips diacritics from Latin letters, one code point in,
// one code point out. Ligatures map to their first letter (œ -> o).
// Code points outside Latin-1 and Latin Extended-A are returned unchanged.
char32_t FoldChar(char32_t c);

// Comparison key for surface forms: lowercase, diacritics removed, and
// ligatures expanded (œ -> oe, ß -> ss). "Féminin" and "FEMININ" share a key.
std::string FoldText(std::string_view utf8);

// Same as FoldText but also collapses every whitespace run to one space and
// trims both ends.
std::string FoldNormalized(std::string_view utf8);

// True when lowercasing would not change the text.
bool IsLowercase(std::string_view utf8);

std::string_view Trim(std::string_view s);

}  // namespace resumeann

#endif  // RESUMEANN_TEXT_H_
