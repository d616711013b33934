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

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <string>
#include <vector>

#include "resumeann/annotation_io.h"
#include "resumeann/batch.h"
#include "resumeann/europass.h"
#include "testing.h"

namespace resumeann {
namespace {

namespace fs = std::filesystem;
using testing::Ann;

// A fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string &name)
      : path_(fs::temp_directory_path() /
              ("resumeann-" + name + "-" + std::to_string(::getpid()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path &path() const { return path_; }

 private:
  fs::path path_;
};

TEST_CASE("parallel for visits every index once") {
  for (int workers : {1, 2, 4, 16}) {
    std::vector<std::atomic<int>> hits(257);
    ParallelFor(hits.size(), workers, [&](size_t i) { ++hits[i]; });
    for (const auto &h : hits) CHECK(h == 1);
  }
  ParallelFor(0, 4, [](size_t) { FAIL("called"); });
}

TEST_CASE("corpus listing") {
  ScratchDir dir("list");
  WriteFile(dir.path() / "b.txt", "x");
  WriteFile(dir.path() / "a.txt", "y");
  WriteFile(dir.path() / "notes.md", "z");
  fs::create_directories(dir.path() / "sub.txt");
  std::vector<CorpusEntry> corpus = ListCorpus(dir.path());
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].id == "a");
  CHECK(corpus[1].id == "b");
  CHECK(ListCorpus(dir.path() / "b.txt").size() == 1);
  CHECK_THROWS_AS(ListCorpus(dir.path() / "missing"), Error);
}

TEST_CASE("annotating a corpus with 1 and 4 workers gives identical files") {
  const KnowledgeBase &kb = testing::DefaultKnowledge();
  Annotator annotator(kb.schema, kb.lexicon, kb.stopwords);
  std::vector<CorpusEntry> corpus = ListCorpus(testing::DataPath("corpus"));
  ScratchDir one("w1"), four("w4");
  BatchOutcome a = AnnotateCorpus(annotator, corpus, one.path(), 1);
  BatchOutcome b = AnnotateCorpus(annotator, corpus, four.path(), 4);
  CHECK(a.errors.empty());
  CHECK(b.errors.empty());
  CHECK(a.processed == corpus.size());
  for (const CorpusEntry &entry : corpus) {
    for (const char *ext : {".ann", ".xml"}) {
      std::string name = entry.id + ext;
      CHECK(ReadFile(one.path() / name) == ReadFile(four.path() / name));
    }
    // The xml reads back and the annotation file parses.
    std::string xml = ReadFile(one.path() / (entry.id + ".xml"));
    CHECK(ToXml(FromXml(xml)) == xml);
    CHECK_FALSE(LoadAnnotations(one.path() / (entry.id + ".ann")).empty());
  }
}

TEST_CASE("a bad document does not stop the batch") {
  const KnowledgeBase &kb = testing::DefaultKnowledge();
  Annotator annotator(kb.schema, kb.lexicon, kb.stopwords);
  ScratchDir in("bad-in"), out("bad-out");
  WriteFile(in.path() / "a.txt", "Nom : AHMED");
  WriteFile(in.path() / "b.txt", "caf\xC3");
  WriteFile(in.path() / "c.txt", "Sexe : masculin");
  std::vector<CorpusEntry> corpus = ListCorpus(in.path());
  corpus.push_back({"gone", in.path() / "gone.txt"});
  BatchOutcome outcome = AnnotateCorpus(annotator, corpus, out.path(), 2);
  CHECK(outcome.processed == 2);
  REQUIRE(outcome.errors.size() == 2);
  CHECK(outcome.errors[0].rfind("b: ", 0) == 0);
  CHECK(outcome.errors[1].rfind("gone: ", 0) == 0);
  CHECK(fs::exists(out.path() / "a.ann"));
  CHECK(fs::exists(out.path() / "c.xml"));
  CHECK_FALSE(fs::exists(out.path() / "b.ann"));
}

TEST_CASE("an empty corpus produces nothing") {
  const KnowledgeBase &kb = testing::DefaultKnowledge();
  Annotator annotator(kb.schema, kb.lexicon, kb.stopwords);
  ScratchDir in("empty-in"), out("empty-out");
  BatchOutcome outcome = AnnotateCorpus(annotator, ListCorpus(in.path()), out.path(), 4);
  CHECK(outcome.processed == 0);
  CHECK(outcome.errors.empty());
  CHECK(fs::is_empty(out.path()));
}

TEST_CASE("evaluating directories pairs files by id") {
  ScratchDir gold("gold"), response("response");
  WriteFile(gold.path() / "a.ann", FormatAnnotations({Ann(0, 5, "Name", "AHMED")}));
  WriteFile(response.path() / "a.ann", FormatAnnotations({Ann(0, 5, "Name", "AHMED")}));
  WriteFile(gold.path() / "b.ann", FormatAnnotations({Ann(0, 4, "Date", "2010")}));
  WriteFile(response.path() / "c.ann", FormatAnnotations({Ann(0, 4, "Date", "2010")}));
  EvaluationOutcome outcome = EvaluateDirectories(
      gold.path(), response.path(), ScoreMode::kAverage, 1, {"Phone"});
  CHECK(outcome.documents == 1);
  REQUIRE(outcome.errors.size() == 2);
  CHECK(outcome.errors[0] == MissingGold("c").what());
  CHECK(outcome.errors[1].find("b") != std::string::npos);
  CHECK(outcome.report.metrics.at("Name").f_measure == 1);
  CHECK(outcome.report.metrics.at("Phone").absent);
  CHECK(outcome.report.total == DiffCounts{1, 0, 0, 0});
}

TEST_CASE("bench rows") {
  const KnowledgeBase &kb = testing::DefaultKnowledge();
  std::vector<std::string> texts = {testing::PersonalText()};
  BenchReport report = RunBench(kb, texts, {4, 1, 4, 2}, 2, 1);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].n_docs == 1);
  CHECK(report.rows[1].n_docs == 2);
  CHECK(report.rows[2].n_docs == 4);
  CHECK(report.rows[0].marginal_per_doc == report.rows[0].wall_time);
  for (const BenchRow &row : report.rows) CHECK(row.wall_time.count() > 0);
  CHECK(FormatBench(report).rfind("n_docs\twall_s\tmarginal_per_doc_s\n", 0) == 0);
  CHECK(RunBench(kb, {}, {1}, 1).rows.empty());
}

}  // namespace
}  // namespace resumeann
