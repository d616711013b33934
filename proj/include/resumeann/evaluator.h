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

#ifndef RESUMEANN_EVALUATOR_H_
#define RESUMEANN_EVALUATOR_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resumeann/document.h"
#include "resumeann/errors.h"

namespace resumeann {

// Scores a response annotation set against a key (gold) set the way GATE's
// AnnotationDiff does: every annotation is correct, partially correct,
// missing or spurious.

enum class Verdict { kCorrect, kPartial, kMissing, kSpurious };

std::string_view VerdictName(Verdict v);

struct AlignedPair {
  std::optional<Annotation> key;
  std::optional<Annotation> response;
  Verdict verdict = Verdict::kMissing;
};

struct DiffCounts {
  int correct = 0;
  int partial = 0;
  int missing = 0;
  int spurious = 0;

  DiffCounts &operator+=(const DiffCounts &other) {
    correct += other.correct;
    partial += other.partial;
    missing += other.missing;
    spurious += other.spurious;
    return *this;
  }
  bool operator==(const DiffCounts &other) const = default;
};

// strict: partial matches are wrong. lenient: partial matches are right.
// average: partial matches earn half credit.
enum class ScoreMode { kStrict, kLenient, kAverage };

std::string_view ScoreModeName(ScoreMode mode);
std::optional<ScoreMode> ParseScoreMode(std::string_view name);

struct MetricSet {
  double precision = 0;
  double recall = 0;
  double f_measure = 0;
  ScoreMode mode = ScoreMode::kAverage;
  double beta = 1;
  // Set by per-class reports when neither side has the class.
  bool absent = false;
};

class InvalidBeta : public Error {
 public:
  explicit InvalidBeta(double beta)
      : Error("beta must be positive, got " + std::to_string(beta)) {}
};

class DocumentMismatch : public Error {
 public:
  using Error::Error;
};

// Greedy one-to-one alignment within each class. Exact (start, end) matches
// pair first as correct. Remaining overlapping pairs are then taken in order
// of decreasing overlap length, ties broken by earlier key start, then
// earlier response start. Leftover keys are missing, leftover responses
// spurious. Overlap across different classes earns nothing. Pairs are
// returned ordered by the start of their key (or response).
//
// If document_length is given, any span ending past it raises
// DocumentMismatch.
std::vector<AlignedPair> Align(const std::vector<Annotation> &key,
                               const std::vector<Annotation> &response,
                               std::optional<size_t> document_length = {});

DiffCounts Count(const std::vector<AlignedPair> &pairs);

// With quotients 0/0 defined as 0:
//   average  R = (C + P/2) / (C + M + P)    Pr = (C + P/2) / (C + S + P)
//   strict   R = C / (C + M + P)            Pr = C / (C + S + P)
//   lenient  R = (C + P) / (C + M + P)      Pr = (C + P) / (C + S + P)
// and F = (beta^2 + 1) Pr R / (beta^2 R + Pr). For beta = 1 this is the
// harmonic mean; for other values note that the denominator weights recall,
// the mirror image of van Rijsbergen's form. Throws InvalidBeta for beta <= 0.
MetricSet Metrics(const DiffCounts &counts, ScoreMode mode, double beta = 1);

double FMeasure(double precision, double recall, double beta = 1);

// Per-class scoring: both sets are partitioned by class and each partition
// aligned and scored on its own.
struct ClassReport {
  std::map<std::string, DiffCounts> counts;
  std::map<std::string, MetricSet> metrics;
  DiffCounts total;
  MetricSet micro;  // metrics of the summed counts
};

// classes lists columns that must appear even if empty; such columns score
// 0 and are flagged absent. Other classes seen in either set are added.
ClassReport PerClassReport(const std::vector<Annotation> &key,
                           const std::vector<Annotation> &response,
                           ScoreMode mode, double beta = 1,
                           const std::vector<std::string> &classes = {});

// Merges per-document reports into one and recomputes metrics.
void Accumulate(const ClassReport &doc, ClassReport *corpus);
void Rescore(ClassReport *report, ScoreMode mode, double beta);

// A table with rows Precision, Recall, F-measure and one column per class,
// followed by a line with the micro-averaged values.
std::string FormatReportTable(const ClassReport &report);

// "class,precision,recall,f_measure,mode" rows plus a final "ALL" row.
std::string FormatReportCsv(const ClassReport &report);

}  // namespace resumeann

#endif  // RESUMEANN_EVALUATOR_H_
