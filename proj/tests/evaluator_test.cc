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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "alignment_oracle.h"
#include "resumeann/evaluator.h"
#include "testing.h"

namespace resumeann {
namespace {

using testing::Ann;

// The six key/response rows of the annotation diff example.
std::vector<Annotation> DiffKey() {
  return {Ann(21, 26, "Name", "FEIZA"),
          Ann(114, 125, "MaritalStatus", "célibataire"),
          Ann(6, 11, "Name", "AHMED"),
          Ann(63, 73, "Date", "10/04/1985"),
          Ann(36, 42, "Gender", "Féminin"),
          Ann(89, 99, "Nationality", "tunisienne")};
}

std::vector<Annotation> DiffResponse() {
  return {Ann(22, 28, "Name", "FEIZA+"),
          Ann(115, 125, "MaritalStatus", "célibatair"),
          Ann(6, 13, "Name", "AHMED+"),
          Ann(64, 75, "Date", "10/04/1985+"),
          Ann(36, 43, "Gender", "Féminin"),
          Ann(90, 98, "Nationality", "tunisien")};
}

TEST_CASE("alignment examples") {
  std::vector<AlignedPair> pairs =
      Align({Ann(21, 26, "Name", "FEIZA")}, {Ann(22, 28, "Name", "FEIZA+")});
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].verdict == Verdict::kPartial);

  std::vector<Annotation> same = DiffKey();
  pairs = Align(same, same);
  CHECK(Count(pairs) == DiffCounts{6, 0, 0, 0});

  pairs = Align({Ann(0, 1, "Name"), Ann(2, 3, "Date"), Ann(4, 5, "Email")}, {});
  CHECK(Count(pairs) == DiffCounts{0, 0, 3, 0});
  for (const AlignedPair &p : pairs) {
    CHECK(p.verdict == Verdict::kMissing);
    CHECK_FALSE(p.response.has_value());
  }
}

TEST_CASE("diff example rows are all partial") {
  std::vector<AlignedPair> pairs = Align(DiffKey(), DiffResponse());
  CHECK(Count(pairs) == DiffCounts{0, 6, 0, 0});
  CHECK(Count({}) == DiffCounts{});
}

TEST_CASE("overlap across classes earns nothing") {
  std::vector<AlignedPair> pairs =
      Align({Ann(0, 10, "Name")}, {Ann(0, 10, "Address")});
  CHECK(Count(pairs) == DiffCounts{0, 0, 1, 1});
}

TEST_CASE("greedy prefers the largest overlap, then the earlier key") {
  // Key A overlaps the response by 4, key B by 6: B wins.
  std::vector<AlignedPair> pairs =
      Align({Ann(0, 6, "Name"), Ann(6, 14, "Name")}, {Ann(2, 12, "Name")});
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].verdict == Verdict::kMissing);
  CHECK(pairs[1].verdict == Verdict::kPartial);
  CHECK(pairs[1].key->start == 6);
  // Equal overlaps: the earlier key wins.
  pairs = Align({Ann(0, 5, "Name"), Ann(7, 12, "Name")}, {Ann(3, 9, "Name")});
  CHECK(pairs[0].verdict == Verdict::kPartial);
  CHECK(pairs[0].key->start == 0);
  // Exact matches are taken before partial ones.
  pairs = Align({Ann(0, 5, "Name")}, {Ann(0, 6, "Name"), Ann(0, 5, "Name")});
  CHECK(Count(pairs) == DiffCounts{1, 0, 0, 1});
}

TEST_CASE("spans past the document end are a mismatch") {
  CHECK_THROWS_AS(Align({Ann(0, 12, "Name")}, {}, size_t{10}), DocumentMismatch);
  CHECK_THROWS_AS(Align({}, {Ann(9, 11, "Name")}, size_t{10}), DocumentMismatch);
  CHECK_NOTHROW(Align({Ann(0, 10, "Name")}, {Ann(2, 4, "Name")}, size_t{10}));
}

TEST_CASE("metrics for the diff example counts in each mode") {
  DiffCounts six{0, 6, 0, 0};
  MetricSet strict = Metrics(six, ScoreMode::kStrict);
  CHECK(strict.precision == 0);
  CHECK(strict.recall == 0);
  CHECK(strict.f_measure == 0);
  MetricSet lenient = Metrics(six, ScoreMode::kLenient);
  CHECK(lenient.precision == 1);
  CHECK(lenient.recall == 1);
  CHECK(lenient.f_measure == 1);
  MetricSet average = Metrics(six, ScoreMode::kAverage);
  CHECK(average.precision == 0.5);
  CHECK(average.recall == 0.5);
  CHECK(average.f_measure == 0.5);
}

TEST_CASE("metrics against the formulas computed by hand") {
  DiffCounts c{3, 2, 1, 4};  // correct, partial, missing, spurious
  MetricSet m = Metrics(c, ScoreMode::kAverage);
  CHECK(m.recall == doctest::Approx(4.0 / 6.0));
  CHECK(m.precision == doctest::Approx(4.0 / 9.0));
  m = Metrics(c, ScoreMode::kStrict);
  CHECK(m.recall == doctest::Approx(3.0 / 6.0));
  CHECK(m.precision == doctest::Approx(3.0 / 9.0));
  m = Metrics(c, ScoreMode::kLenient);
  CHECK(m.recall == doctest::Approx(5.0 / 6.0));
  CHECK(m.precision == doctest::Approx(5.0 / 9.0));
  // Empty counts are 0/0, defined as 0.
  m = Metrics(DiffCounts{}, ScoreMode::kLenient);
  CHECK(m.precision == 0);
  CHECK(m.recall == 0);
  CHECK(m.f_measure == 0);
}

TEST_CASE("beta weights recall against precision") {
  // (b^2 + 1) P R / (b^2 R + P) with P = 0.5, R = 1, b = 2: 2.5 / 4.5.
  CHECK(FMeasure(0.5, 1, 2) == doctest::Approx(2.5 / 4.5));
  CHECK(FMeasure(1, 0.5, 2) == doctest::Approx(2.5 / 3.0));
  CHECK_THROWS_AS(FMeasure(0.5, 0.5, 0), InvalidBeta);
  CHECK_THROWS_AS(Metrics(DiffCounts{1, 0, 0, 0}, ScoreMode::kStrict, -1),
                  InvalidBeta);
  CHECK_THROWS_AS(Metrics(DiffCounts{1, 0, 0, 0}, ScoreMode::kStrict, NAN),
                  InvalidBeta);
}

TEST_CASE("per-class F-measure reference values") {
  CHECK(std::abs(FMeasure(0.91, 0.81) - 0.86) <= 0.005);
  CHECK(std::abs(FMeasure(1, 0.97) - 0.98) <= 0.005);
  CHECK(std::abs(FMeasure(0.98, 1) - 0.99) <= 0.005);
}

TEST_CASE("per-class report") {
  ClassReport report =
      PerClassReport(DiffKey(), DiffResponse(), ScoreMode::kAverage, 1,
                     {"Name", "Phone"});
  CHECK(report.counts.at("Name") == DiffCounts{0, 2, 0, 0});
  CHECK(report.metrics.at("Name").f_measure == 0.5);
  CHECK(report.metrics.at("Phone").absent);
  CHECK(report.metrics.at("Phone").f_measure == 0);
  CHECK_FALSE(report.metrics.at("Name").absent);
  CHECK(report.total == DiffCounts{0, 6, 0, 0});
  CHECK(report.micro.f_measure == 0.5);

  std::string table = FormatReportTable(report);
  CHECK(table.find("Precision") != std::string::npos);
  CHECK(table.find("F-measure") != std::string::npos);
  CHECK(table.find("Phone*") != std::string::npos);
  CHECK(table.find("0.50") != std::string::npos);

  std::string csv = FormatReportCsv(report);
  CHECK(csv.rfind("class,precision,recall,f_measure,mode\n", 0) == 0);
  CHECK(csv.find("\nName,0.500000,0.500000,0.500000,average\n") !=
        std::string::npos);
  CHECK(csv.find("\nPhone,0.000000,0.000000,0.000000,average\n") !=
        std::string::npos);
  CHECK(csv.find("\nALL,0.500000,0.500000,0.500000,average\n") !=
        std::string::npos);
}

TEST_CASE("property: conservation, mode ordering and symmetry") {
  std::mt19937 rng(29);
  for (int i = 0; i < 2000; ++i) {
    std::vector<Annotation> key = testing::RandomAnnotations(rng, 10);
    std::vector<Annotation> response = testing::RandomAnnotations(rng, 10);
    std::vector<AlignedPair> pairs = Align(key, response);
    DiffCounts c = Count(pairs);
    CHECK(c.correct + c.partial + c.missing == static_cast<int>(key.size()));
    CHECK(c.correct + c.partial + c.spurious == static_cast<int>(response.size()));
    for (const AlignedPair &p : pairs) {
      switch (p.verdict) {
        case Verdict::kCorrect:
          CHECK((p.key->start == p.response->start && p.key->end == p.response->end));
          CHECK(p.key->class_name == p.response->class_name);
          break;
        case Verdict::kPartial:
          CHECK(p.key->Overlaps(*p.response));
          CHECK(p.key->class_name == p.response->class_name);
          CHECK_FALSE((p.key->start == p.response->start &&
                       p.key->end == p.response->end));
          break;
        case Verdict::kMissing: CHECK_FALSE(p.response.has_value()); break;
        case Verdict::kSpurious: CHECK_FALSE(p.key.has_value()); break;
      }
    }
    MetricSet s = Metrics(c, ScoreMode::kStrict);
    MetricSet a = Metrics(c, ScoreMode::kAverage);
    MetricSet l = Metrics(c, ScoreMode::kLenient);
    CHECK(s.precision <= a.precision);
    CHECK(a.precision <= l.precision);
    CHECK(s.recall <= a.recall);
    CHECK(a.recall <= l.recall);
    CHECK(s.f_measure <= a.f_measure + 1e-12);
    CHECK(a.f_measure <= l.f_measure + 1e-12);
    for (const MetricSet &m : {s, a, l}) {
      double harmonic = m.precision + m.recall > 0
                            ? 2 * m.precision * m.recall / (m.precision + m.recall)
                            : 0;
      CHECK(std::abs(m.f_measure - harmonic) <= 1e-12);
    }
    if (!key.empty()) {
      // Duplicated spans can only pair with themselves.
      DiffCounts self = Count(Align(key, key));
      CHECK(self == DiffCounts{static_cast<int>(key.size()), 0, 0, 0});
      for (ScoreMode mode :
           {ScoreMode::kStrict, ScoreMode::kLenient, ScoreMode::kAverage}) {
        MetricSet m = Metrics(self, mode);
        CHECK((m.precision == 1 && m.recall == 1 && m.f_measure == 1));
      }
    }
  }
}

TEST_CASE("greedy alignment against exhaustive search") {
  std::mt19937 rng(31);
  int instances = 3000, discrepancies = 0;
  for (int i = 0; i < instances; ++i) {
    std::vector<Annotation> key = testing::RandomAnnotations(rng, 6);
    std::vector<Annotation> response = testing::RandomAnnotations(rng, 6);
    double greedy = testing::WeightedTotal(Align(key, response));
    double best = testing::BruteForceOptimum(key, response);
    CHECK(greedy <= best + 1e-9);
    if (greedy < best - 1e-9) ++discrepancies;
  }
  MESSAGE("greedy below optimum on " << discrepancies << " of " << instances);
  CHECK(discrepancies * 20 < instances);
}

}  // namespace
}  // namespace resumeann
