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

#ifndef RESUMEANN_BATCH_H_
#define RESUMEANN_BATCH_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "resumeann/annotator.h"
#include "resumeann/errors.h"
#include "resumeann/evaluator.h"
#include "resumeann/lexicon.h"
#include "resumeann/ontology.h"
#include "resumeann/tagger.h"

namespace resumeann {

// Corpus-level driving code shared by the command line tool and the tests.

// The three knowledge bases, loaded once and shared read-only by workers.
struct KnowledgeBase {
  OntologySchema schema;
  Lexicon lexicon;
  StopwordList stopwords;

  static KnowledgeBase Load(const std::filesystem::path &ontology,
                            const std::filesystem::path &lexicon,
                            const std::filesystem::path &stopwords);
};

// Runs fn(i) for i in [0, n) on `workers` threads. Indices are handed out
// from a shared counter, so fn must only touch state owned by index i.
void ParallelFor(size_t n, int workers, const std::function<void(size_t)> &fn);

struct CorpusEntry {
  std::string id;  // file stem
  std::filesystem::path path;
};

// A single file, or every regular *.txt file of a directory (not recursive)
// in lexicographic order. Throws Error if the path does not exist.
std::vector<CorpusEntry> ListCorpus(const std::filesystem::path &input);

// Everything produced for one document.
struct DocumentResult {
  std::string id;
  std::string ann;  // FormatAnnotations output
  std::string xml;  // ToXml output
  std::string error;  // non-empty if the document failed
};

DocumentResult ProcessText(const Annotator &annotator, const std::string &id,
                           const std::string &text);

std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, const std::string &content);

struct BatchOutcome {
  size_t processed = 0;
  std::vector<std::string> errors;  // "id: message"
};

// Annotates each entry and writes <id>.ann and <id>.xml into out_dir.
// Per-document failures are collected; the rest of the batch continues.
BatchOutcome AnnotateCorpus(const Annotator &annotator,
                            const std::vector<CorpusEntry> &corpus,
                            const std::filesystem::path &out_dir, int workers);

// An id present in only one of the key and response directories.
class MissingGold : public Error {
 public:
  explicit MissingGold(const std::string &id)
      : Error("no gold annotations for " + id), id_(id) {}
  const std::string &id() const { return id_; }

 private:
  std::string id_;
};

struct EvaluationOutcome {
  ClassReport report;
  size_t documents = 0;
  std::vector<std::string> errors;
};

// Pairs <id>.ann files of the two directories by id and accumulates a
// per-class report. Unpaired ids and unreadable files are listed as errors
// and left out of the totals. classes forces report columns.
EvaluationOutcome EvaluateDirectories(const std::filesystem::path &gold_dir,
                                      const std::filesystem::path &response_dir,
                                      ScoreMode mode, double beta,
                                      const std::vector<std::string> &classes);

struct BenchRow {
  size_t n_docs = 0;
  std::chrono::duration<double> wall_time{0};
  std::chrono::duration<double> marginal_per_doc{0};
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

// Times the annotate loop for the first n documents of texts, for each n in
// sizes (sorted ascending, duplicates dropped). texts is cycled when a size
// exceeds it. Each timing builds a fresh Annotator over the already loaded
// knowledge base, annotates, assembles and serialises every document into
// memory; the best of `repeat` runs is kept. The marginal time of a row is
// (wall - previous wall) / (n - previous n); the first row reports wall / n.
BenchReport RunBench(const KnowledgeBase &kb,
                     const std::vector<std::string> &texts,
                     std::vector<size_t> sizes, int workers, int repeat = 1);

std::string FormatBench(const BenchReport &report);

}  // namespace resumeann

#endif  // RESUMEANN_BATCH_H_
