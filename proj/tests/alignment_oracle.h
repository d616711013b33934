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

#ifndef RESUMEANN_TESTS_ALIGNMENT_ORACLE_H_
#define RESUMEANN_TESTS_ALIGNMENT_ORACLE_H_

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "resumeann/evaluator.h"

namespace resumeann::testing {

// Credit for pairing key k with response r: 1 for an exact match, the
// intersection over union of the spans for a partial one, and nothing for
// different classes or disjoint spans.
inline double PairCredit(const Annotation &k, const Annotation &r) {
  if (k.class_name != r.class_name) return 0;
  if (k.start == r.start && k.end == r.end) return 1;
  size_t lo = std::max(k.start, r.start), hi = std::min(k.end, r.end);
  if (hi <= lo) return 0;
  size_t union_length = std::max(k.end, r.end) - std::min(k.start, r.start);
  return static_cast<double>(hi - lo) / static_cast<double>(union_length);
}

inline double WeightedTotal(const std::vector<AlignedPair> &pairs) {
  double total = 0;
  for (const AlignedPair &p : pairs) {
    if (p.key && p.response) total += PairCredit(*p.key, *p.response);
  }
  return total;
}

// Best weighted total over every one-to-one matching, by exhaustive search.
inline double BruteForceOptimum(const std::vector<Annotation> &key,
                                const std::vector<Annotation> &response) {
  std::vector<bool> used(response.size(), false);
  std::function<double(size_t)> best = [&](size_t k) -> double {
    if (k == key.size()) return 0;
    double value = best(k + 1);  // key k left unmatched
    for (size_t r = 0; r < response.size(); ++r) {
      if (used[r]) continue;
      double credit = PairCredit(key[k], response[r]);
      if (credit == 0) continue;
      used[r] = true;
      value = std::max(value, credit + best(k + 1));
      used[r] = false;
    }
    return value;
  };
  return best(0);
}

// Small random annotation sets over a short span range and few classes, so
// overlaps and ties are frequent.
inline std::vector<Annotation> RandomAnnotations(std::mt19937 &rng,
                                                 size_t max_count) {
  static const char *kClasses[] = {"Name", "Date", "Email"};
  std::vector<Annotation> out;
  size_t n = std::uniform_int_distribution<size_t>(0, max_count)(rng);
  for (size_t i = 0; i < n; ++i) {
    Annotation a;
    a.start = std::uniform_int_distribution<size_t>(0, 30)(rng);
    a.end = a.start + std::uniform_int_distribution<size_t>(1, 8)(rng);
    a.class_name = kClasses[rng() % 2 == 0 ? 0 : rng() % 3];
    out.push_back(a);
  }
  return out;
}

}  // namespace resumeann::testing

#endif  // RESUMEANN_TESTS_ALIGNMENT_ORACLE_H_
