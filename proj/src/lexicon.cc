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

#include "resumeann/lexicon.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "resumeann/text.h"

namespace resumeann {

std::string_view PosCode(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun: return "N";
    case PartOfSpeech::kAdjective: return "A";
    case PartOfSpeech::kAdverb: return "ADV";
    case PartOfSpeech::kVerb: return "V";
  }
  return "N";
}

std::optional<PartOfSpeech> ParsePosCode(std::string_view code) {
  if (code == "N") return PartOfSpeech::kNoun;
  if (code == "A") return PartOfSpeech::kAdjective;
  if (code == "ADV") return PartOfSpeech::kAdverb;
  if (code == "V") return PartOfSpeech::kVerb;
  return std::nullopt;
}

Lexicon Lexicon::Load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read lexicon file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), path.string());
}

Lexicon Lexicon::Parse(std::string_view text, const std::string &source) {
  Lexicon lexicon;
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_number;
    if (line.empty() || line.front() == '#') continue;

    try {
      DecodeUtf8(line);
    } catch (const EncodingError &e) {
      throw SyntaxError(source, line_number, e.what());
    }
    size_t comma = line.find(',');
    size_t dot = line.rfind('.');
    if (comma == std::string_view::npos || dot == std::string_view::npos ||
        dot < comma) {
      throw SyntaxError(source, line_number,
                        "expected 'surface,lemma.POS', got '" +
                            std::string(line) + "'");
    }
    LexiconEntry entry;
    entry.surface = std::string(line.substr(0, comma));
    entry.lemma = std::string(line.substr(comma + 1, dot - comma - 1));
    std::string_view code = line.substr(dot + 1);
    if (entry.surface.empty() || entry.lemma.empty()) {
      throw SyntaxError(source, line_number, "empty surface or lemma");
    }
    for (const std::string *field : {&entry.surface, &entry.lemma}) {
      for (char32_t c : DecodeUtf8(*field)) {
        if (Classify(c) == CharClass::kSpace || c == ',') {
          throw SyntaxError(source, line_number,
                            "separator inside simple word '" + *field + "'");
        }
      }
      if (!IsLowercase(*field)) {
        throw SyntaxError(source, line_number,
                          "entries must be lowercase: '" + *field + "'");
      }
    }
    auto parsed = ParsePosCode(code);
    if (!parsed) throw CodeError(source, line_number, std::string(code));
    entry.pos = *parsed;
    lexicon.Add(std::move(entry));
  }
  return lexicon;
}

bool Lexicon::Add(LexiconEntry entry) {
  auto &bucket = by_folded_[FoldText(entry.surface)];
  if (std::find(bucket.begin(), bucket.end(), entry) != bucket.end()) {
    return false;
  }
  bucket.push_back(std::move(entry));
  ++entry_count_;
  return true;
}

std::vector<LexiconEntry> Lexicon::Lookup(std::string_view surface) const {
  auto it = by_folded_.find(FoldText(surface));
  if (it == by_folded_.end()) return {};
  return it->second;
}

std::vector<LexiconEntry> Lexicon::Entries() const {
  std::vector<LexiconEntry> all;
  all.reserve(entry_count_);
  for (const auto &[key, bucket] : by_folded_) {
    all.insert(all.end(), bucket.begin(), bucket.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::string Lexicon::Dump() const {
  std::string out;
  for (const LexiconEntry &e : Entries()) {
    out += e.surface;
    out += ',';
    out += e.lemma;
    out += '.';
    out += PosCode(e.pos);
    out += '\n';
  }
  return out;
}

}  // namespace resumeann
