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

#include "resumeann/batch.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "resumeann/annotation_io.h"
#include "resumeann/europass.h"

namespace resumeann {

namespace fs = std::filesystem;

KnowledgeBase KnowledgeBase::Load(const fs::path &ontology,
                                  const fs::path &lexicon,
                                  const fs::path &stopwords) {
  return KnowledgeBase{LoadOntology(ontology), Lexicon::Load(lexicon),
                       StopwordList::Load(stopwords)};
}

void ParallelFor(size_t n, int workers, const std::function<void(size_t)> &fn) {
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto loop = [&] {
    for (size_t i = next++; i < n; i = next++) fn(i);
  };
  std::vector<std::thread> threads;
  size_t count = std::min<size_t>(static_cast<size_t>(workers), n);
  for (size_t t = 1; t < count; ++t) threads.emplace_back(loop);
  loop();
  for (std::thread &t : threads) t.join();
}

std::vector<CorpusEntry> ListCorpus(const fs::path &input) {
  std::vector<CorpusEntry> corpus;
  if (fs::is_regular_file(input)) {
    corpus.push_back({input.stem().string(), input});
    return corpus;
  }
  if (!fs::is_directory(input)) {
    throw Error("input not found: " + input.string());
  }
  for (const fs::directory_entry &entry : fs::directory_iterator(input)) {
    if (entry.path().extension() != ".txt") continue;
    if (!entry.is_regular_file()) continue;
    corpus.push_back({entry.path().stem().string(), entry.path()});
  }
  std::sort(corpus.begin(), corpus.end(),
            [](const CorpusEntry &a, const CorpusEntry &b) {
              return a.path.filename() < b.path.filename();
            });
  return corpus;
}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("cannot read " + path.string());
  return buffer.str();
}

void WriteFile(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  if (!out) throw Error("cannot write " + path.string());
}

DocumentResult ProcessText(const Annotator &annotator, const std::string &id,
                           const std::string &text) {
  DocumentResult result;
  result.id = id;
  try {
    SourceDocument doc(id, text);
    std::vector<Annotation> annotations = annotator.Annotate(doc);
    result.ann = FormatAnnotations(annotations);
    result.xml = ToXml(Assemble(doc, annotations, annotator.schema()));
  } catch (const std::exception &e) {
    result.error = e.what();
  }
  return result;
}

BatchOutcome AnnotateCorpus(const Annotator &annotator,
                            const std::vector<CorpusEntry> &corpus,
                            const fs::path &out_dir, int workers) {
  std::vector<std::string> errors(corpus.size());
  ParallelFor(corpus.size(), workers, [&](size_t i) {
    const CorpusEntry &entry = corpus[i];
    try {
      DocumentResult r = ProcessText(annotator, entry.id, ReadFile(entry.path));
      if (!r.error.empty()) {
        errors[i] = r.error;
        return;
      }
      WriteFile(out_dir / (entry.id + ".ann"), r.ann);
      WriteFile(out_dir / (entry.id + ".xml"), r.xml);
    } catch (const std::exception &e) {
      errors[i] = e.what();
    }
  });
  BatchOutcome outcome;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (errors[i].empty()) {
      ++outcome.processed;
    } else {
      outcome.errors.push_back(corpus[i].id + ": " + errors[i]);
    }
  }
  return outcome;
}

namespace {

std::map<std::string, fs::path> AnnFiles(const fs::path &dir) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::map<std::string, fs::path> files;
  for (const fs::directory_entry &entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".ann" && entry.is_regular_file()) {
      files[entry.path().stem().string()] = entry.path();
    }
  }
  return files;
}

}  // namespace

EvaluationOutcome EvaluateDirectories(const fs::path &gold_dir,
                                      const fs::path &response_dir,
                                      ScoreMode mode, double beta,
                                      const std::vector<std::string> &classes) {
  std::map<std::string, fs::path> gold = AnnFiles(gold_dir);
  std::map<std::string, fs::path> response = AnnFiles(response_dir);
  EvaluationOutcome outcome;
  for (const std::string &c : classes) outcome.report.counts[c];
  for (const auto &[id, path] : response) {
    auto it = gold.find(id);
    if (it == gold.end()) {
      outcome.errors.push_back(MissingGold(id).what());
      continue;
    }
    try {
      ClassReport doc = PerClassReport(LoadAnnotations(it->second),
                                       LoadAnnotations(path), mode, beta);
      Accumulate(doc, &outcome.report);
      ++outcome.documents;
    } catch (const std::exception &e) {
      outcome.errors.push_back(id + ": " + e.what());
    }
  }
  for (const auto &[id, path] : gold) {
    if (!response.count(id)) {
      outcome.errors.push_back("no response annotations for " + id);
    }
  }
  Rescore(&outcome.report, mode, beta);
  return outcome;
}

BenchReport RunBench(const KnowledgeBase &kb,
                     const std::vector<std::string> &texts,
                     std::vector<size_t> sizes, int workers, int repeat) {
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  sizes.erase(std::remove(sizes.begin(), sizes.end(), size_t{0}), sizes.end());
  BenchReport report;
  if (texts.empty()) return report;
  repeat = std::max(repeat, 1);

  using Clock = std::chrono::steady_clock;
  for (size_t n : sizes) {
    std::chrono::duration<double> best{0};
    for (int run = 0; run < repeat; ++run) {
      std::vector<DocumentResult> results(n);
      auto start = Clock::now();
      Annotator annotator(kb.schema, kb.lexicon, kb.stopwords);
      ParallelFor(n, workers, [&](size_t i) {
        results[i] = ProcessText(annotator, "bench-" + std::to_string(i),
                                 texts[i % texts.size()]);
      });
      std::chrono::duration<double> elapsed = Clock::now() - start;
      if (run == 0 || elapsed < best) best = elapsed;
    }
    BenchRow row;
    row.n_docs = n;
    row.wall_time = best;
    if (report.rows.empty()) {
      row.marginal_per_doc = best / static_cast<double>(n);
    } else {
      const BenchRow &prev = report.rows.back();
      row.marginal_per_doc =
          (best - prev.wall_time) / static_cast<double>(n - prev.n_docs);
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string FormatBench(const BenchReport &report) {
  std::string out = "n_docs\twall_s\tmarginal_per_doc_s\n";
  char line[96];
  for (const BenchRow &row : report.rows) {
    std::snprintf(line, sizeof(line), "%zu\t%.6f\t%.6f\n", row.n_docs,
                  row.wall_time.count(), row.marginal_per_doc.count());
    out += line;
  }
  return out;
}

}  // namespace resumeann
