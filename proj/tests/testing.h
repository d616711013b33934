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

#ifndef RESUMEANN_TESTS_TESTING_H_
#define RESUMEANN_TESTS_TESTING_H_

#include <random>
#include <string>
#include <vector>

#include "resumeann/batch.h"
#include "resumeann/document.h"
#include "resumeann/europass.h"
#include "resumeann/ontology.h"

namespace resumeann::testing {

inline std::string DataPath(const std::string &relative) {
  return std::string(RESUMEANN_DATA_DIR) + "/" + relative;
}

inline std::string FixturePath(const std::string &relative) {
  return std::string(RESUMEANN_FIXTURE_DIR) + "/" + relative;
}

inline const KnowledgeBase &DefaultKnowledge() {
  static const KnowledgeBase *kb = new KnowledgeBase(KnowledgeBase::Load(
      DataPath("ontology/ereco.onto"), DataPath("lexicon/sample.dic"),
      DataPath("lexicon/stopwords.txt")));
  return *kb;
}

// The personal-information sample behind the annotation diff example.
// Padding is chosen so the key spans land on the expected offsets.
inline const std::string &PersonalText() {
  static const std::string *text = new std::string(
      "Nom : AHMED\nPrénom : FEIZA\nSexe   : Féminin\n"
      "Date de naissance: 10/04/1985\nNationalité  : tunisienne\n"
      "Statut civil: célibataire\n");
  return *text;
}

// The default ontology plus a marital status class, which the diff example
// annotates but the default schema leaves out.
inline const OntologySchema &PersonalSchema() {
  static const OntologySchema *schema = new OntologySchema(ParseOntology(
      ReadFile(DataPath("ontology/ereco.onto")) +
          "\nclass MaritalStatus : PersonalInformation\n"
          "instance MaritalStatus \"célibataire\" [\"marié\", \"mariée\"]\n",
      "personal.onto"));
  return *schema;
}

inline Annotation Ann(size_t start, size_t end, std::string cls,
                      std::string text = "") {
  Annotation a;
  a.start = start;
  a.end = end;
  a.class_name = std::move(cls);
  a.matched_text = std::move(text);
  return a;
}

// Text drawn from markup characters, whitespace (including CR), non-ASCII
// letters, astral code points and plain words. Only characters XML can carry.
inline std::string RandomText(std::mt19937 &rng) {
  static const std::vector<std::string> pieces = {
      "<", ">", "&", "\"", "'", "]]>", "&amp;", " ", "  ", "\n", "\r\n", "\r",
      "\t", "é", "Ω", "€", "𝄞", "tunisienne", "AHMED", "10/04/1985", "#",
      "<!--", "?>", "\xC2\xA0"};
  std::string text;
  int n = std::uniform_int_distribution<int>(0, 6)(rng);
  for (int i = 0; i < n; ++i) text += pieces[rng() % pieces.size()];
  return text;
}

inline EuropassResume RandomResume(std::mt19937 &rng) {
  auto text = [&] { return rng() % 3 == 0 ? std::string() : RandomText(rng); };
  auto count = [&] { return static_cast<int>(rng() % 4); };
  EuropassResume r;
  PersonalInformation &p = r.personal;
  for (std::string *field :
       {&p.first_name, &p.surname, &p.address, &p.telephone, &p.fax, &p.email,
        &p.nationality, &p.date_of_birth, &p.gender}) {
    *field = text();
  }
  for (int i = count(); i > 0; --i) {
    r.work_experience.push_back({text(), text(), text()});
  }
  for (int i = count(); i > 0; --i) {
    r.education.push_back({text(), text(), text(), text()});
  }
  for (auto &list : r.skills) {
    for (int i = count(); i > 0; --i) list.push_back(text());
  }
  for (int i = count(); i > 0; --i) r.additional.push_back(text());
  for (int i = count(); i > 0; --i) r.annexes.push_back(text());
  return r;
}

}  // namespace resumeann::testing

#endif  // RESUMEANN_TESTS_TESTING_H_
