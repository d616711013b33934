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

#ifndef RESUMEANN_RANKER_H_
#define RESUMEANN_RANKER_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resumeann/document.h"
#include "resumeann/ontology.h"

namespace resumeann {

// One employer requirement. An empty needle accepts any instance of the
// class (or of its subclasses).
struct Requirement {
  std::string class_name;
  std::string needle;
  double weight = 1;
};

struct RequirementProfile {
  std::vector<Requirement> requirements;

  double TotalWeight() const;
};

struct RankedResume {
  std::string resume_id;
  double score = 0;
  std::vector<size_t> satisfied;  // indices into the profile, ascending
};

// Profile file: "class<TAB>needle<TAB>weight" per line; '#' comments and
// blank lines are skipped. Weights must be positive and finite.
RequirementProfile ParseProfile(std::string_view text, const std::string &source);
RequirementProfile LoadProfile(const std::filesystem::path &path);

// Throws UnknownClass for a requirement naming a class the schema lacks.
void CheckProfile(const RequirementProfile &profile,
                  const OntologySchema &schema);

// A requirement is satisfied when some annotation's class is-a the required
// class and, for a non-empty needle, the folded matched text equals the
// folded needle.
RankedResume ScoreResume(const std::string &resume_id,
                         const std::vector<Annotation> &annotations,
                         const RequirementProfile &profile,
                         const OntologySchema &schema);

// Scores every resume and orders by score descending, id ascending.
std::vector<RankedResume> Rank(
    const std::vector<std::pair<std::string, std::vector<Annotation>>> &resumes,
    const RequirementProfile &profile, const OntologySchema &schema);

// "rank<TAB>id<TAB>score<TAB>satisfied indices" lines.
std::string FormatRanking(const std::vector<RankedResume> &ranking);

}  // namespace resumeann

#endif  // RESUMEANN_RANKER_H_
