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

#include "resumeann/text.h"

#include "resumeann/errors.h"

namespace resumeann {
namespace {

// Base letters for U+0100..U+017F, one per code point.
constexpr std::string_view kLatinExtendedABase =
    "aaaaaa" "cccccccc" "dddd" "eeeeeeeeee" "gggggggg" "hhhh"
    "iiiiiiiiii" "ii" "jj" "kkk" "llllllllll" "nnnnnnnnn" "oooooo" "oo"
    "rrrrrr" "ssssssss" "tttttt" "uuuuuuuuuuuu" "ww" "yyy" "zzzzzz" "s";

static_assert(kLatinExtendedABase.size() == 0x80);

char32_t ToLowerChar(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if (c < 0xC0) return c;
  if (c <= 0xDE) return c == 0xD7 ? c : c + 32;
  if (c == 0x130) return U'i';
  if (c >= 0x100 && c <= 0x137) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x139 && c <= 0x148) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x14A && c <= 0x177) return (c % 2 == 0) ? c + 1 : c;
  if (c == 0x178) return 0xFF;
  if (c >= 0x179 && c <= 0x17E) return (c % 2 == 1) ? c + 1 : c;
  return c;
}

bool IsCombiningMark(char32_t c) { return c >= 0x300 && c <= 0x36F; }

}  // namespace

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    unsigned char b = static_cast<unsigned char>(text[i]);
    if (b < 0x80) {
      out.push_back(b);
      ++i;
      continue;
    }
    int extra;
    char32_t c;
    char32_t min;
    if ((b & 0xE0) == 0xC0) {
      extra = 1, c = b & 0x1F, min = 0x80;
    } else if ((b & 0xF0) == 0xE0) {
      extra = 2, c = b & 0x0F, min = 0x800;
    } else if ((b & 0xF8) == 0xF0) {
      extra = 3, c = b & 0x07, min = 0x10000;
    } else {
      throw EncodingError("invalid UTF-8 lead byte at offset " +
                          std::to_string(i));
    }
    if (i + extra >= n) {
      throw EncodingError("truncated UTF-8 sequence at offset " +
                          std::to_string(i));
    }
    for (int k = 1; k <= extra; ++k) {
      unsigned char cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw EncodingError("invalid UTF-8 continuation byte at offset " +
                            std::to_string(i + k));
      }
      c = (c << 6) | (cont & 0x3F);
    }
    if (c < min || c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) {
      throw EncodingError("invalid UTF-8 code point at offset " +
                          std::to_string(i));
    }
    out.push_back(c);
    i += extra + 1;
  }
  return out;
}

void AppendUtf8(char32_t c, std::string *out) {
  if (c < 0x80) {
    out->push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (c >> 6)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (c >> 12)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (c >> 18)));
    out->push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) AppendUtf8(c, &out);
  return out;
}

CharClass Classify(char32_t c) {
  if (c < 0x80) {
    if (c == ' ' || (c >= 0x09 && c <= 0x0D)) return CharClass::kSpace;
    if (c >= '0' && c <= '9') return CharClass::kDigit;
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      return CharClass::kLetter;
    }
    return CharClass::kPunct;
  }
  // Unicode spaces, including zero-width and byte-order marks.
  if (c == 0x85 || c == 0xA0 || c == 0x1680 || (c >= 0x2000 && c <= 0x200D) ||
      c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x205F ||
      c == 0x3000 || c == 0xFEFF) {
    return CharClass::kSpace;
  }
  if (c < 0xA0) return CharClass::kPunct;  // C1 controls
  if (c <= 0xBF) {
    // ª µ º are letters; the rest of the block is symbols.
    return (c == 0xAA || c == 0xB5 || c == 0xBA) ? CharClass::kLetter
                                                 : CharClass::kPunct;
  }
  if (c == 0xD7 || c == 0xF7) return CharClass::kPunct;
  if ((c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E) ||
      (c >= 0x20A0 && c <= 0x20CF) || (c >= 0x2100 && c <= 0x214F) ||
      (c >= 0x2190 && c <= 0x2BFF) || (c >= 0x3001 && c <= 0x3003) ||
      (c >= 0xE000 && c <= 0xF8FF) || (c >= 0xFF01 && c <= 0xFF0F) ||
      c == 0xFFFD || c >= 0x1F000) {
    return CharClass::kPunct;
  }
  return CharClass::kLetter;
}

char32_t FoldChar(char32_t c) {
  c = ToLowerChar(c);
  if (c < 0xDF) return c;
  if (c <= 0xFF) {
    if (c == 0xDF) return U's';
    if (c <= 0xE6) return U'a';
    if (c == 0xE7) return U'c';
    if (c <= 0xEB) return U'e';
    if (c <= 0xEF) return U'i';
    if (c == 0xF0) return U'd';
    if (c == 0xF1) return U'n';
    if (c <= 0xF6 || c == 0xF8) return U'o';
    if (c == 0xF7 || c == 0xFE) return c;
    if (c <= 0xFC) return U'u';
    return U'y';
  }
  if (c <= 0x17F) return static_cast<char32_t>(kLatinExtendedABase[c - 0x100]);
  return c;
}

std::string FoldText(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (char32_t c : DecodeUtf8(utf8)) {
    char32_t lower = ToLowerChar(c);
    switch (lower) {
      case 0xE6: out += "ae"; continue;
      case 0x153: out += "oe"; continue;
      case 0xDF: out += "ss"; continue;
      case 0x133: out += "ij"; continue;
      default: break;
    }
    if (IsCombiningMark(c)) continue;
    AppendUtf8(FoldChar(lower), &out);
  }
  return out;
}

std::string FoldNormalized(std::string_view utf8) {
  std::string folded = FoldText(utf8);
  std::string out;
  out.reserve(folded.size());
  bool pending_space = false;
  for (char32_t c : DecodeUtf8(folded)) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    AppendUtf8(c, &out);
  }
  return out;
}

bool IsLowercase(std::string_view utf8) {
  for (char32_t c : DecodeUtf8(utf8)) {
    if (ToLowerChar(c) != c) return false;
  }
  return true;
}

std::string_view Trim(std::string_view s) {
  const char *ws = " \t\r\n\v\f";
  size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace resumeann
