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

#include "resumeann/evaluator.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

namespace resumeann {
namespace {

double Ratio(double numerator, double denominator) {
  return denominator == 0 ? 0 : numerator / denominator;
}

size_t Overlap(const Annotation &a, const Annotation &b) {
  size_t lo = std::max(a.start, b.start);
  size_t hi = std::min(a.end, b.end);
  return hi > lo ? hi - lo : 0;
}

std::string FormatValue(double v) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

}  // namespace

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kCorrect: return "correct";
    case Verdict::kPartial: return "partial";
    case Verdict::kMissing: return "missing";
    case Verdict::kSpurious: return "spurious";
  }
  return "missing";
}

std::string_view ScoreModeName(ScoreMode mode) {
  switch (mode) {
    case ScoreMode::kStrict: return "strict";
    case ScoreMode::kLenient: return "lenient";
    case ScoreMode::kAverage: return "average";
  }
  return "average";
}

std::optional<ScoreMode> ParseScoreMode(std::string_view name) {
  if (name == "strict") return ScoreMode::kStrict;
  if (name == "lenient") return ScoreMode::kLenient;
  if (name == "average") return ScoreMode::kAverage;
  return std::nullopt;
}

std::vector<AlignedPair> Align(const std::vector<Annotation> &key,
                               const std::vector<Annotation> &response,
                               std::optional<size_t> document_length) {
  if (document_length) {
    for (const auto *set : {&key, &response}) {
      for (const Annotation &a : *set) {
        if (a.end > *document_length || a.start >= a.end) {
          throw DocumentMismatch(
              "annotation [" + std::to_string(a.start) + ", " +
              std::to_string(a.end) + ") exceeds document length " +
              std::to_string(*document_length));
        }
      }
    }
  }

  std::vector<int> key_match(key.size(), -1);
  std::vector<int> response_match(response.size(), -1);
  std::vector<AlignedPair> pairs;

  // Exact matches, keys in (start, end) order.
  std::vector<size_t> key_order(key.size());
  for (size_t i = 0; i < key.size(); ++i) key_order[i] = i;
  std::stable_sort(key_order.begin(), key_order.end(), [&](size_t a, size_t b) {
    return std::tie(key[a].start, key[a].end) <
           std::tie(key[b].start, key[b].end);
  });
  for (size_t k : key_order) {
    for (size_t r = 0; r < response.size(); ++r) {
      if (response_match[r] >= 0) continue;
      if (response[r].start == key[k].start && response[r].end == key[k].end &&
          response[r].class_name == key[k].class_name) {
        key_match[k] = static_cast<int>(r);
        response_match[r] = static_cast<int>(k);
        pairs.push_back({key[k], response[r], Verdict::kCorrect});
        break;
      }
    }
  }

  // Partial matches, largest overlap first.
  struct Edge {
    size_t overlap, key_start, response_start, k, r;
  };
  std::vector<Edge> edges;
  for (size_t k = 0; k < key.size(); ++k) {
    if (key_match[k] >= 0) continue;
    for (size_t r = 0; r < response.size(); ++r) {
      if (response_match[r] >= 0) continue;
      if (response[r].class_name != key[k].class_name) continue;
      size_t overlap = Overlap(key[k], response[r]);
      if (overlap == 0) continue;
      edges.push_back({overlap, key[k].start, response[r].start, k, r});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
    return std::tie(b.overlap, a.key_start, a.response_start, a.k, a.r) <
           std::tie(a.overlap, b.key_start, b.response_start, b.k, b.r);
  });
  for (const Edge &e : edges) {
    if (key_match[e.k] >= 0 || response_match[e.r] >= 0) continue;
    key_match[e.k] = static_cast<int>(e.r);
    response_match[e.r] = static_cast<int>(e.k);
    pairs.push_back({key[e.k], response[e.r], Verdict::kPartial});
  }

  for (size_t k = 0; k < key.size(); ++k) {
    if (key_match[k] < 0) pairs.push_back({key[k], std::nullopt, Verdict::kMissing});
  }
  for (size_t r = 0; r < response.size(); ++r) {
    if (response_match[r] < 0) {
      pairs.push_back({std::nullopt, response[r], Verdict::kSpurious});
    }
  }

  auto anchor = [](const AlignedPair &p) {
    const Annotation &a = p.key ? *p.key : *p.response;
    return std::make_tuple(a.start, a.end, a.class_name);
  };
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](const AlignedPair &a, const AlignedPair &b) {
                     return anchor(a) < anchor(b);
                   });
  return pairs;
}

DiffCounts Count(const std::vector<AlignedPair> &pairs) {
  DiffCounts counts;
  for (const AlignedPair &p : pairs) {
    switch (p.verdict) {
      case Verdict::kCorrect: ++counts.correct; break;
      case Verdict::kPartial: ++counts.partial; break;
      case Verdict::kMissing: ++counts.missing; break;
      case Verdict::kSpurious: ++counts.spurious; break;
    }
  }
  return counts;
}

double FMeasure(double precision, double recall, double beta) {
  if (!(beta > 0)) throw InvalidBeta(beta);
  double b2 = beta * beta;
  return Ratio((b2 + 1) * precision * recall, b2 * recall + precision);
}

MetricSet Metrics(const DiffCounts &c, ScoreMode mode, double beta) {
  if (!(beta > 0)) throw InvalidBeta(beta);
  double credit = 0;
  switch (mode) {
    case ScoreMode::kStrict: credit = c.correct; break;
    case ScoreMode::kLenient: credit = c.correct + c.partial; break;
    case ScoreMode::kAverage: credit = c.correct + 0.5 * c.partial; break;
  }
  MetricSet m;
  m.mode = mode;
  m.beta = beta;
  m.recall = Ratio(credit, c.correct + c.missing + c.partial);
  m.precision = Ratio(credit, c.correct + c.spurious + c.partial);
  m.f_measure = FMeasure(m.precision, m.recall, beta);
  return m;
}

ClassReport PerClassReport(const std::vector<Annotation> &key,
                           const std::vector<Annotation> &response,
                           ScoreMode mode, double beta,
                           const std::vector<std::string> &classes) {
  std::map<std::string, std::vector<Annotation>> key_by, response_by;
  for (const Annotation &a : key) key_by[a.class_name].push_back(a);
  for (const Annotation &a : response) response_by[a.class_name].push_back(a);

  ClassReport report;
  for (const std::string &c : classes) report.counts[c];
  for (const auto &[c, list] : key_by) report.counts[c];
  for (const auto &[c, list] : response_by) report.counts[c];
  for (auto &[c, counts] : report.counts) {
    counts = Count(Align(key_by[c], response_by[c]));
  }
  Rescore(&report, mode, beta);
  return report;
}

void Accumulate(const ClassReport &doc, ClassReport *corpus) {
  for (const auto &[c, counts] : doc.counts) corpus->counts[c] += counts;
}

void Rescore(ClassReport *report, ScoreMode mode, double beta) {
  report->total = DiffCounts();
  report->metrics.clear();
  for (const auto &[c, counts] : report->counts) {
    MetricSet m = Metrics(counts, mode, beta);
    m.absent = counts == DiffCounts();
    report->metrics[c] = m;
    report->total += counts;
  }
  report->micro = Metrics(report->total, mode, beta);
}

std::string FormatReportTable(const ClassReport &report) {
  std::vector<std::string> header{""};
  std::vector<std::vector<std::string>> rows(3);
  const char *labels[] = {"Precision", "Recall", "F-measure"};
  for (int i = 0; i < 3; ++i) rows[i].push_back(labels[i]);
  for (const auto &[c, m] : report.metrics) {
    header.push_back(m.absent ? c + "*" : c);
    rows[0].push_back(FormatValue(m.precision));
    rows[1].push_back(FormatValue(m.recall));
    rows[2].push_back(FormatValue(m.f_measure));
  }
  std::vector<size_t> widths(header.size());
  for (size_t j = 0; j < header.size(); ++j) {
    widths[j] = header[j].size();
    for (const auto &row : rows) widths[j] = std::max(widths[j], row[j].size());
  }
  auto emit = [&](const std::vector<std::string> &cells, std::string *out) {
    for (size_t j = 0; j < cells.size(); ++j) {
      if (j > 0) *out += "  ";
      *out += cells[j];
      if (j + 1 < cells.size()) out->append(widths[j] - cells[j].size(), ' ');
    }
    *out += '\n';
  };
  std::string out;
  emit(header, &out);
  for (const auto &row : rows) emit(row, &out);
  const MetricSet &m = report.micro;
  out += "micro-average (" + std::string(ScoreModeName(m.mode)) +
         "): precision " + FormatValue(m.precision) + "  recall " +
         FormatValue(m.recall) + "  F-measure " + FormatValue(m.f_measure) +
         "\n";
  const DiffCounts &t = report.total;
  out += "correct " + std::to_string(t.correct) + "  partial " +
         std::to_string(t.partial) + "  missing " + std::to_string(t.missing) +
         "  spurious " + std::to_string(t.spurious) + "\n";
  bool any_absent = std::any_of(report.metrics.begin(), report.metrics.end(),
                                [](const auto &kv) { return kv.second.absent; });
  if (any_absent) out += "* class absent from both key and response\n";
  return out;
}

std::string FormatReportCsv(const ClassReport &report) {
  std::string out = "class,precision,recall,f_measure,mode\n";
  char buffer[128];
  auto row = [&](const std::string &name, const MetricSet &m) {
    std::snprintf(buffer, sizeof(buffer), ",%.6f,%.6f,%.6f,", m.precision,
                  m.recall, m.f_measure);
    out += name;
    out += buffer;
    out += ScoreModeName(m.mode);
    out += '\n';
  };
  for (const auto &[c, m] : report.metrics) row(c, m);
  row("ALL", report.micro);
  return out;
}

}  // namespace resumeann
