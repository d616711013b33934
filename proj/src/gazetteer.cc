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

#include "resumeann/gazetteer.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "resumeann/text.h"
#include "resumeann/tokenizer.h"

namespace resumeann {
namespace {

bool IsWordChar(char32_t c) {
  CharClass k = Classify(c);
  return k == CharClass::kLetter || k == CharClass::kDigit;
}

}  // namespace

Gazetteer::Gazetteer(const OntologySchema &schema,
                     const StopwordList &stopwords) {
  size_t order = 0;
  for (const InstanceEntry &instance : schema.instances) {
    std::vector<std::string> forms{instance.label};
    forms.insert(forms.end(), instance.variants.begin(),
                 instance.variants.end());
    for (const std::string &form : forms) {
      SourceDocument label("", form);
      std::vector<Token> kept = FilterTokens(Tokenize(label), stopwords);
      if (kept.empty()) continue;
      Entry entry;
      for (const Token &t : kept) entry.keys.push_back(FoldText(t.surface));
      entry.core = FoldNormalized(label.Slice(kept.front().start,
                                              kept.back().end));
      entry.full = FoldNormalized(form);
      size_t first = 0, last = label.char_count();
      while (first < last && IsSpace(label.chars()[first])) ++first;
      while (last > first && IsSpace(label.chars()[last - 1])) --last;
      entry.prefix_chars = kept.front().start - first;
      entry.suffix_chars = last - kept.back().end;
      entry.class_name = instance.class_name;
      entry.order = order++;
      std::string key = entry.keys.front();
      by_first_key_[key].push_back(std::move(entry));
      ++entry_count_;
    }
  }
}

// Grows a core match [start, end) over the label's edge stopwords when the
// document text around it spells the whole label. The search window allows
// for extra whitespace and elisions; the nearest boundary that works wins.
std::pair<size_t, size_t> Gazetteer::Extend(const SourceDocument &doc,
                                            const Entry &entry, size_t start,
                                            size_t end) {
  const std::u32string &chars = doc.chars();
  auto at_boundary = [&](size_t s, size_t e) {
    return (s == 0 || !IsWordChar(chars[s - 1]) || !IsWordChar(chars[s])) &&
           (e == chars.size() || !IsWordChar(chars[e]) ||
            !IsWordChar(chars[e - 1]));
  };
  size_t window = 2 * (entry.prefix_chars + entry.suffix_chars) + 2;
  size_t lo = entry.prefix_chars == 0 ? start
               : start >= window ? start - window : 0;
  size_t hi = std::min(chars.size(), end + window);
  for (size_t s = start + 1; s-- > lo;) {
    if (entry.prefix_chars > 0 && s == start) continue;
    if (IsSpace(chars[s])) continue;
    for (size_t e = entry.suffix_chars > 0 ? end + 1 : end; e <= hi; ++e) {
      if (IsSpace(chars[e - 1]) || !at_boundary(s, e)) continue;
      if (FoldNormalized(doc.Slice(s, e)) == entry.full) return {s, e};
      if (entry.suffix_chars == 0) break;
    }
  }
  return {start, end};
}

std::vector<Annotation> Gazetteer::Match(
    const SourceDocument &doc, const std::vector<Token> &filtered) const {
  struct Candidate {
    size_t start, end, order;
    const std::string *class_name;
  };
  std::vector<std::string> keys;
  keys.reserve(filtered.size());
  for (const Token &t : filtered) keys.push_back(FoldText(t.surface));

  std::vector<Candidate> candidates;
  for (size_t i = 0; i < filtered.size(); ++i) {
    auto it = by_first_key_.find(keys[i]);
    if (it == by_first_key_.end()) continue;
    for (const Entry &entry : it->second) {
      const size_t m = entry.keys.size();
      if (i + m > filtered.size()) continue;
      bool same = true;
      for (size_t j = 1; j < m && same; ++j) {
        same = keys[i + j] == entry.keys[j];
      }
      if (!same) continue;
      size_t start = filtered[i].start;
      size_t end = filtered[i + m - 1].end;
      if (m > 1 && FoldNormalized(doc.Slice(start, end)) != entry.core) {
        continue;
      }
      if (entry.prefix_chars > 0 || entry.suffix_chars > 0) {
        std::tie(start, end) = Extend(doc, entry, start, end);
      }
      candidates.push_back({start, end, entry.order, &entry.class_name});
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              size_t la = a.end - a.start, lb = b.end - b.start;
              return std::tie(lb, a.start, a.order) <
                     std::tie(la, b.start, b.order);
            });

  // Accepted spans keyed by start; they never overlap each other.
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
    a.class_name = *c.class_name;
    a.matched_text = std::string(doc.Slice(c.start, c.end));
    a.recognizer = Recognizer::kGazetteer;
    result.push_back(std::move(a));
  }
  std::sort(result.begin(), result.end(), AnnotationLess);
  return result;
}

std::vector<Annotation> MatchGazetteer(const SourceDocument &doc,
                                       const std::vector<Token> &filtered,
                                       const OntologySchema &schema,
                                       const StopwordList &stopwords) {
  return Gazetteer(schema, stopwords).Match(doc, filtered);
}

}  // namespace resumeann
