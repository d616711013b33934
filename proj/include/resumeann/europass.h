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

#ifndef RESUMEANN_EUROPASS_H_
#define RESUMEANN_EUROPASS_H_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "resumeann/document.h"
#include "resumeann/errors.h"
#include "resumeann/ontology.h"

namespace resumeann {

// EUROPASS skill categories, in document order.
enum class SkillCategory {
  kLanguage,
  kTechnical,
  kSocialOrganisational,
  kComputer,
  kArtistic,
  kDriving,
  kOther,
};

inline constexpr size_t kSkillCategoryCount = 7;

// XML element name of a category ("Language", "Technical", ...).
std::string_view SkillElementName(SkillCategory category);

// The personal information block. An empty string means the field is unset.
struct PersonalInformation {
  std::string first_name;
  std::string surname;
  std::string address;
  std::string telephone;
  std::string fax;
  std::string email;
  std::string nationality;
  std::string date_of_birth;
  std::string gender;

  bool operator==(const PersonalInformation &other) const = default;
};

struct WorkExperience {
  std::string occupation;
  std::string date;
  std::string activities;

  bool operator==(const WorkExperience &other) const = default;
};

struct Education {
  std::string contents;
  std::string date;
  std::string skills;
  std::string level;

  bool operator==(const Education &other) const = default;
};

struct EuropassResume {
  PersonalInformation personal;
  std::vector<WorkExperience> work_experience;
  std::vector<Education> education;
  std::array<std::vector<std::string>, kSkillCategoryCount> skills;
  std::vector<std::string> additional;
  std::vector<std::string> annexes;

  std::vector<std::string> &skill(SkillCategory c) {
    return skills[static_cast<size_t>(c)];
  }
  const std::vector<std::string> &skill(SkillCategory c) const {
    return skills[static_cast<size_t>(c)];
  }

  bool operator==(const EuropassResume &other) const = default;
};

// XML that is well-formed but does not follow the EuropassCV layout.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// Dates closer to the start of the document than this are birth dates.
inline constexpr size_t kPersonalBlockChars = 300;

// Routes annotations into EUROPASS slots. Each annotation is routed by the
// nearest class in its lineage that has a slot:
//
//   Name         first_name, then surname (document order)
//   Gender, Nationality, Address, Phone, Fax, Email   personal fields
//   Date         date_of_birth when it starts in the first 300 characters
//                or its sentence mentions a birth keyword before it;
//                otherwise the date of the education entry of its sentence
//                if there is one, else the work entry of its sentence
//   Institute    education contents
//   Training     education level
//   Occupation   work entry occupation
//   Language     skills.language
//   Competency   skills.technical
//   SocialSkill, OrganisationalSkill, ComputerSkill, ArtisticSkill,
//   DrivingLicence, OtherSkill   the matching skill category
//
// Institute and Training annotations of one sentence share one education
// entry; Date and Occupation annotations of one sentence share a work
// entry. Anything unrouted, and any value whose slot is already filled, is
// appended to additional. Throws UnknownClass for classes missing from the
// schema.
EuropassResume Assemble(const SourceDocument &doc,
                        const std::vector<Annotation> &annotations,
                        const OntologySchema &schema);

// Serializes to the EuropassCV XML layout documented in docs/formats.md.
// Deterministic; every section is present even when empty.
std::string ToXml(const EuropassResume &resume);

// Inverse of ToXml. Throws SyntaxError for malformed XML and LayoutError for
// unknown or misplaced elements.
EuropassResume FromXml(std::string_view xml);

}  // namespace resumeann

#endif  // RESUMEANN_EUROPASS_H_
