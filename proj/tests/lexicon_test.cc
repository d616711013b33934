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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <tuple>

#include "resumeann/lexicon.h"
#include "testing.h"

namespace resumeann {
namespace {

LexiconEntry Entry(std::string surface, std::string lemma, PartOfSpeech pos) {
  return LexiconEntry{std::move(surface), std::move(lemma), pos};
}

TEST_CASE("a dictionary line becomes one entry") {
  Lexicon lex = Lexicon::Parse("travaille,travailler.V\n", "t");
  REQUIRE(lex.entry_count() == 1);
  std::vector<LexiconEntry> hits = lex.Lookup("travaille");
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == Entry("travaille", "travailler", PartOfSpeech::kVerb));
}

TEST_CASE("empty input gives an empty lexicon") {
  CHECK(Lexicon::Parse("", "t").entry_count() == 0);
  CHECK(Lexicon::Parse("# only a comment\n\n", "t").entry_count() == 0);
}

TEST_CASE("unknown part of speech is a code error") {
  CHECK_THROWS_AS(Lexicon::Parse("chose,chose.X\n", "t"), CodeError);
  CHECK_THROWS_AS(Lexicon::Parse("chose,chose.N+z1:fs\n", "t"), CodeError);
}

TEST_CASE("malformed lines report their line number") {
  for (const char *text : {"# c\nbad line\n", "# c\nnocomma.N\n",
                           "# c\nUpper,upper.N\n", "# c\n,lemma.N\n",
                           "# c\nform,.N\n", "# c\nform,lemma\n"}) {
    CAPTURE(text);
    try {
      Lexicon::Parse(text, "lex.dic");
      FAIL("no error");
    } catch (const SyntaxError &e) {
      CHECK(e.line() == 2);
      CHECK(e.source() == "lex.dic");
    } catch (const CodeError &) {
      // "form,lemma" has no '.' and may be read as a missing code.
      CHECK(std::string(text) == "# c\nform,lemma\n");
    }
  }
}

TEST_CASE("lookup folds case and accents") {
  Lexicon lex = Lexicon::Parse(
      "travaille,travailler.V\ncélibataire,célibataire.A\n", "t");
  CHECK(lex.Lookup("Travaille") == lex.Lookup("travaille"));
  CHECK(lex.Lookup("CELIBATAIRE").size() == 1);
  CHECK(lex.Lookup("zzzq").empty());
}

TEST_CASE("ambiguous forms return every entry") {
  Lexicon lex = Lexicon::Parse("ferme,ferme.N\nferme,fermer.V\nferme,ferme.A\n",
                               "t");
  std::vector<LexiconEntry> hits = lex.Lookup("ferme");
  CHECK(hits.size() == 3);
  auto has = [&](PartOfSpeech pos) {
    return std::any_of(hits.begin(), hits.end(),
                       [&](const LexiconEntry &e) { return e.pos == pos; });
  };
  CHECK(has(PartOfSpeech::kNoun));
  CHECK(has(PartOfSpeech::kVerb));
  CHECK(has(PartOfSpeech::kAdjective));
}

TEST_CASE("duplicates are dropped and counted once") {
  Lexicon lex = Lexicon::Parse("bon,bon.A\nbon,bon.A\nbien,bien.ADV\n", "t");
  CHECK(lex.entry_count() == 2);
}

TEST_CASE("dump is canonical and reloads to an equal lexicon") {
  Lexicon lex = Lexicon::Parse("zèle,zèle.N\nbon,bon.A\nbon,bon.A\nbien,bien.ADV\n",
                               "t");
  std::string dumped = lex.Dump();
  CHECK(dumped == "bien,bien.ADV\nbon,bon.A\nzèle,zèle.N\n");
  Lexicon again = Lexicon::Parse(dumped, "dump");
  CHECK(again == lex);
  CHECK(again.Dump() == dumped);
}

// Every line of the bundled dictionary, split by hand, must be found again.
TEST_CASE("bundled lexicon: every source entry is found by lookup") {
  Lexicon lex = Lexicon::Load(testing::DataPath("lexicon/sample.dic"));
  std::ifstream in(testing::DataPath("lexicon/sample.dic"));
  std::set<std::tuple<std::string, std::string, std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    size_t comma = line.find(',');
    size_t dot = line.rfind('.');
    std::string surface = line.substr(0, comma);
    std::string lemma = line.substr(comma + 1, dot - comma - 1);
    std::string pos = line.substr(dot + 1);
    lines.emplace(surface, lemma, pos);
    std::vector<LexiconEntry> hits = lex.Lookup(surface);
    bool found = std::any_of(hits.begin(), hits.end(), [&](const LexiconEntry &e) {
      return e.surface == surface && e.lemma == lemma && PosCode(e.pos) == pos;
    });
    CHECK_MESSAGE(found, line);
  }
  CHECK(lex.entry_count() == lines.size());
  CHECK(lex.entry_count() >= 200);
}

}  // namespace
}  // namespace resumeann
