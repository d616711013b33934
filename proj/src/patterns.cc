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

#include "resumeann/patterns.h"

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <tuple>

namespace resumeann {
namespace {

constexpr const char *kMonth =
    "(?:janvier|fevrier|mars|avril|mai|juin|juillet|aout|septembre|octobre|"
    "novembre|decembre|january|february|march|april|may|june|july|august|"
    "september|october|november|december|janv|jan|fevr|fev|feb|avr|apr|juil|"
    "jul|aug|sept|sep|oct|nov|dec)(?![a-z])\\.?";

constexpr const char *kDay = "(?:0?[1-9]|[12][0-9]|3[01])";
constexpr const char *kMonthNumber = "(?:0?[1-9]|1[0-2])";
constexpr const char *kYear = "(?:19|20)[0-9]{2}";

// Whole-word keywords that decide between Phone and Fax.
constexpr std::string_view kFaxWords[] = {"fax", "telecopie", "telefax"};
constexpr std::string_view kPhoneWords[] = {
    "tel", "telephone", "phone", "mobile", "gsm", "portable", "mob", "cell"};

// How far back on the same line a keyword may appear.
constexpr size_t kKeywordWindow = 40;

enum Priority { kDatePriority = 0, kEmailPriority = 1, kPhonePriority = 2 };

struct Candidate {
  size_t start, end;
  int priority;
  const char *class_name;
};

bool IsWordChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\x01';
}

// Offset just past the last whole-word occurrence of any word in words
// within view[from, to), or 0 if there is none.
template <size_t N>
size_t LastKeyword(std::string_view view, size_t from, size_t to,
                   const std::string_view (&words)[N]) {
  size_t best = 0;
  for (std::string_view w : words) {
    size_t pos = from;
    while (true) {
      pos = view.find(w, pos);
      if (pos == std::string_view::npos || pos + w.size() > to) break;
      bool left = pos == 0 || !IsWordChar(view[pos - 1]);
      bool right = pos + w.size() >= view.size() ||
                   !IsWordChar(view[pos + w.size()]);
      if (left && right) best = std::max(best, pos + w.size());
      ++pos;
    }
  }
  return best;
}

void Collect(const std::regex &re, const std::string &view, int priority,
             const char *class_name, std::vector<Candidate> *out) {
  for (auto it = std::sregex_iterator(view.begin(), view.end(), re);
       it != std::sregex_iterator(); ++it) {
    const std::smatch &m = *it;
    size_t start = static_cast<size_t>(m.position(1));
    out->push_back({start, start + static_cast<size_t>(m.length(1)), priority,
                    class_name});
  }
}

bool AcceptablePhone(std::string_view text) {
  size_t digits = 0, runs = 0;
  bool in_run = false;
  for (char c : text) {
    bool digit = c >= '0' && c <= '9';
    if (digit) {
      ++digits;
      if (!in_run) ++runs;
    }
    in_run = digit;
  }
  if (digits < 8 || digits > 15) return false;
  bool prefixed = text.front() == '+' || text.front() == '(';
  return runs == 1 || runs >= 3 || prefixed;
}

}  // namespace

PatternRecognizer::PatternRecognizer() {
  const std::string day = kDay, month = kMonth, year = kYear;
  const auto flags = std::regex::ECMAScript | std::regex::optimize;
  // 10/04/1985, 10-04-1985, 10.04.1985
  dates_.emplace_back("(?:^|[^0-9])(" + day + "([/.-])" + kMonthNumber +
                          "\\2" + year + ")(?![0-9])",
                      flags);
  // 1985-04-10
  dates_.emplace_back("(?:^|[^0-9])(" + year + "-" + kMonthNumber + "-" + day +
                          ")(?![0-9])",
                      flags);
  // 10 avril 1985, 1er mai 2010, avril 1985, April 1985
  dates_.emplace_back("(?:^|[^a-z0-9\\x01])((?:" + day + "(?:er)?[ \\t]+)?" +
                          month + "[ \\t]+" + year + ")(?![0-9])",
                      flags);
  // April 10, 1985
  dates_.emplace_back("(?:^|[^a-z0-9\\x01])(" + month + "[ \\t]+" + day +
                          ",?[ \\t]+" + year + ")(?![0-9])",
                      flags);
  email_ = std::regex(
      "(?:^|[^a-z0-9._%+-])([a-z0-9][a-z0-9._%+-]*@[a-z0-9](?:[a-z0-9-]*"
      "[a-z0-9])?(?:\\.[a-z0-9](?:[a-z0-9-]*[a-z0-9])?)*\\.[a-z]{2,})"
      "(?![a-z0-9-])",
      flags);
  phone_ = std::regex(
      "(?:^|[^a-z0-9+(\\x01])("
      "(?:\\+[0-9]{1,3}[ .-]?|\\(\\+?[0-9]{1,4}\\)[ .-]?)"
      "[0-9]+(?:[ .-][0-9]{2,})*"
      "|[0-9]{2,}(?:[ .-][0-9]{2,})*)(?![0-9])",
      flags);
}

std::vector<Annotation> PatternRecognizer::Recognize(
    const SourceDocument &doc) const {
  const std::string &view = doc.folded_view();
  std::vector<Candidate> candidates;
  for (const std::regex &re : dates_) {
    Collect(re, view, kDatePriority, "Date", &candidates);
  }
  Collect(email_, view, kEmailPriority, "Email", &candidates);

  std::vector<Candidate> phones;
  Collect(phone_, view, kPhonePriority, "Phone", &phones);
  for (Candidate &c : phones) {
    if (!AcceptablePhone(std::string_view(view).substr(c.start, c.end - c.start))) {
      continue;
    }
    size_t line_start = view.rfind('\n', c.start == 0 ? 0 : c.start - 1);
    line_start = line_start == std::string::npos || c.start == 0
                     ? 0
                     : line_start + 1;
    size_t from = std::max(line_start, c.start > kKeywordWindow
                                           ? c.start - kKeywordWindow
                                           : size_t{0});
    size_t fax = LastKeyword(view, from, c.start, kFaxWords);
    size_t phone = LastKeyword(view, from, c.start, kPhoneWords);
    if (fax > 0 && fax > phone) c.class_name = "Fax";
    candidates.push_back(c);
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              size_t la = a.end - a.start, lb = b.end - b.start;
              return std::tie(a.priority, lb, a.start) <
                     std::tie(b.priority, la, b.start);
            });
  std::map<size_t, size_t> taken;
  std::vector<Annotation> result;
  for (const Candidate &c : candidates) {
    auto next = taken.lower_bound(c.start);
    if (next != taken.end() && next->first < c.end) continue;
    if (next != taken.begin() && std::prev(next)->second > c.start) continue;
    taken.emplace(c.start, c.end);
    Annotation a;
    a.start = c.start;
    a.end = c.end;
    a.class_name = c.class_name;
    a.matched_text = std::string(doc.Slice(c.start, c.end));
    a.recognizer = Recognizer::kPattern;
    result.push_back(std::move(a));
  }
  std::sort(result.begin(), result.end(), AnnotationLess);
  return result;
}

std::vector<Annotation> RecognizePatterns(const SourceDocument &doc) {
  static const PatternRecognizer recognizer;
  return recognizer.Recognize(doc);
}

}  // namespace resumeann
