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

#include "resumeann/ranker.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "resumeann/errors.h"
#include "resumeann/text.h"

namespace resumeann {

double RequirementProfile::TotalWeight() const {
  double total = 0;
  for (const Requirement &r : requirements) total += r.weight;
  return total;
}

RequirementProfile ParseProfile(std::string_view text,
                                const std::string &source) {
  DecodeUtf8(text);
  RequirementProfile profile;
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || Trim(line).front() == '#') continue;

    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string_view::npos
                                              ? std::string_view::npos
                                              : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3) {
      throw SyntaxError(source, line_number,
                        "expected class<TAB>needle<TAB>weight");
    }
    Requirement r;
    r.class_name = std::string(Trim(fields[0]));
    r.needle = std::string(Trim(fields[1]));
    std::string weight(Trim(fields[2]));
    if (r.class_name.empty()) {
      throw SyntaxError(source, line_number, "empty class name");
    }
    size_t used = 0;
    try {
      r.weight = std::stod(weight, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != weight.size() || !std::isfinite(r.weight) ||
        r.weight <= 0) {
      throw SyntaxError(source, line_number,
                        "weight must be a positive number: '" + weight + "'");
    }
    profile.requirements.push_back(std::move(r));
  }
  return profile;
}

RequirementProfile LoadProfile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read profile " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseProfile(buffer.str(), path.string());
}

void CheckProfile(const RequirementProfile &profile,
                  const OntologySchema &schema) {
  for (const Requirement &r : profile.requirements) schema.Class(r.class_name);
}

RankedResume ScoreResume(const std::string &resume_id,
                         const std::vector<Annotation> &annotations,
                         const RequirementProfile &profile,
                         const OntologySchema &schema) {
  CheckProfile(profile, schema);
  RankedResume result;
  result.resume_id = resume_id;
  std::vector<std::string> folded;
  folded.reserve(annotations.size());
  for (const Annotation &a : annotations) {
    folded.push_back(FoldNormalized(a.matched_text));
  }
  for (size_t i = 0; i < profile.requirements.size(); ++i) {
    const Requirement &r = profile.requirements[i];
    std::string needle = FoldNormalized(r.needle);
    for (size_t j = 0; j < annotations.size(); ++j) {
      if (!schema.IsA(annotations[j].class_name, r.class_name)) continue;
      if (!needle.empty() && folded[j] != needle) continue;
      result.satisfied.push_back(i);
      result.score += r.weight;
      break;
    }
  }
  return result;
}

std::vector<RankedResume> Rank(
    const std::vector<std::pair<std::string, std::vector<Annotation>>> &resumes,
    const RequirementProfile &profile, const OntologySchema &schema) {
  std::vector<RankedResume> ranking;
  ranking.reserve(resumes.size());
  for (const auto &[id, annotations] : resumes) {
    ranking.push_back(ScoreResume(id, annotations, profile, schema));
  }
  std::sort(ranking.begin(), ranking.end(),
            [](const RankedResume &a, const RankedResume &b) {
              if (a.score != b.score) return a.score > b.score;
              return a.resume_id < b.resume_id;
            });
  return ranking;
}

std::string FormatRanking(const std::vector<RankedResume> &ranking) {
  std::string out;
  char score[32];
  for (size_t i = 0; i < ranking.size(); ++i) {
    const RankedResume &r = ranking[i];
    std::snprintf(score, sizeof(score), "%g", r.score);
    out += std::to_string(i + 1) + "\t" + r.resume_id + "\t" + score + "\t";
    for (size_t j = 0; j < r.satisfied.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(r.satisfied[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace resumeann
