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

// resumeann: annotate resumes, export EUROPASS XML, score against gold
// annotations, rank candidates and time the annotation loop.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "resumeann/annotation_io.h"
#include "resumeann/batch.h"
#include "resumeann/evaluator.h"
#include "resumeann/ontology.h"
#include "resumeann/ranker.h"

namespace fs = std::filesystem;
using namespace resumeann;

namespace {

constexpr int kOk = 0;
constexpr int kPartialFailure = 1;
constexpr int kConfigError = 2;

struct RunConfig {
  std::string ontology = RESUMEANN_DATA_DIR "/ontology/ereco.onto";
  std::string lexicon = RESUMEANN_DATA_DIR "/lexicon/sample.dic";
  std::string stopwords = RESUMEANN_DATA_DIR "/lexicon/stopwords.txt";
  std::vector<std::string> instances;
  std::string input;
  std::string output_dir;
  std::string mode = "average";
  double beta = 1;
  int workers = 1;
};

// Configuration problems abort the command with exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

void RequirePath(const std::string &path, const char *what) {
  if (!fs::exists(path)) throw ConfigError(std::string(what) + " not found: " + path);
}

KnowledgeBase LoadKnowledge(const RunConfig &config) {
  RequirePath(config.ontology, "ontology");
  RequirePath(config.lexicon, "lexicon");
  RequirePath(config.stopwords, "stopword list");
  KnowledgeBase kb = KnowledgeBase::Load(config.ontology, config.lexicon,
                                         config.stopwords);
  for (const std::string &path : config.instances) {
    RequirePath(path, "instance file");
    LoadBulkInstances(path, &kb.schema);
  }
  return kb;
}

ScoreMode ModeOf(const RunConfig &config) {
  std::optional<ScoreMode> mode = ParseScoreMode(config.mode);
  if (!mode) throw ConfigError("unknown mode: " + config.mode);
  if (!(config.beta > 0)) throw InvalidBeta(config.beta);
  return *mode;
}

int ReportErrors(const std::vector<std::string> &errors) {
  for (const std::string &e : errors) std::cerr << "error: " << e << "\n";
  return errors.empty() ? kOk : kPartialFailure;
}

int CmdAnnotate(const RunConfig &config) {
  KnowledgeBase kb = LoadKnowledge(config);
  RequirePath(config.input, "input");
  if (config.output_dir.empty()) throw ConfigError("--out is required");
  fs::create_directories(config.output_dir);
  std::vector<CorpusEntry> corpus = ListCorpus(config.input);
  Annotator annotator(kb.schema, kb.lexicon, kb.stopwords);
  BatchOutcome outcome =
      AnnotateCorpus(annotator, corpus, config.output_dir, config.workers);
  std::cout << "annotated " << outcome.processed << " of " << corpus.size()
            << " documents into " << config.output_dir << "\n";
  return ReportErrors(outcome.errors);
}

int CmdEvaluate(const RunConfig &config, const std::string &gold_dir,
                const std::string &csv_path) {
  ScoreMode mode = ModeOf(config);
  RequirePath(gold_dir, "gold directory");
  RequirePath(config.input, "response directory");
  // The twelve target classes are always reported, present or not.
  std::vector<std::string> classes(kTargetClasses.begin(), kTargetClasses.end());
  EvaluationOutcome outcome =
      EvaluateDirectories(gold_dir, config.input, mode, config.beta, classes);
  std::cout << outcome.documents << " documents\n"
            << FormatReportTable(outcome.report);
  std::string csv = FormatReportCsv(outcome.report);
  if (!csv_path.empty()) {
    WriteFile(csv_path, csv);
  } else if (!config.output_dir.empty()) {
    fs::create_directories(config.output_dir);
    WriteFile(fs::path(config.output_dir) / "report.csv", csv);
  }
  return ReportErrors(outcome.errors);
}

int CmdRank(const RunConfig &config, const std::string &profile_path) {
  KnowledgeBase kb = LoadKnowledge(config);
  RequirePath(profile_path, "profile");
  RequirePath(config.input, "input");
  RequirementProfile profile = LoadProfile(profile_path);
  CheckProfile(profile, kb.schema);

  // Annotation files are used when the input holds any; otherwise the
  // *.txt documents are annotated on the fly.
  std::vector<std::pair<std::string, std::vector<Annotation>>> resumes;
  std::vector<std::string> errors;
  std::vector<fs::path> ann_files;
  if (fs::is_directory(config.input)) {
    for (const auto &entry : fs::directory_iterator(config.input)) {
      if (entry.path().extension() == ".ann") ann_files.push_back(entry.path());
    }
  } else if (fs::path(config.input).extension() == ".ann") {
    ann_files.push_back(config.input);
  }
  std::sort(ann_files.begin(), ann_files.end());
  if (!ann_files.empty()) {
    for (const fs::path &path : ann_files) {
      try {
        resumes.emplace_back(path.stem().string(), LoadAnnotations(path));
      } catch (const std::exception &e) {
        errors.push_back(path.stem().string() + ": " + e.what());
      }
    }
  } else {
    Annotator annotator(kb.schema, kb.lexicon, kb.stopwords);
    for (const CorpusEntry &entry : ListCorpus(config.input)) {
      try {
        SourceDocument doc(entry.id, ReadFile(entry.path));
        resumes.emplace_back(entry.id, annotator.Annotate(doc));
      } catch (const std::exception &e) {
        errors.push_back(entry.id + ": " + e.what());
      }
    }
  }
  std::vector<RankedResume> ranking;
  std::vector<std::pair<std::string, std::vector<Annotation>>> scorable;
  for (auto &resume : resumes) {
    try {
      ScoreResume(resume.first, resume.second, profile, kb.schema);
      scorable.push_back(std::move(resume));
    } catch (const std::exception &e) {
      errors.push_back(resume.first + ": " + e.what());
    }
  }
  std::cout << FormatRanking(Rank(scorable, profile, kb.schema));
  return ReportErrors(errors);
}

int CmdBench(const RunConfig &config, const std::vector<size_t> &sizes,
             int repeat) {
  KnowledgeBase kb = LoadKnowledge(config);
  RequirePath(config.input, "input");
  std::vector<std::string> texts;
  for (const CorpusEntry &entry : ListCorpus(config.input)) {
    texts.push_back(ReadFile(entry.path));
  }
  if (texts.empty()) throw ConfigError("no documents in " + config.input);
  BenchReport report = RunBench(kb, texts, sizes, config.workers, repeat);
  std::cout << FormatBench(report);
  return kOk;
}

int CmdOntologyCheck(const RunConfig &config) {
  RequirePath(config.ontology, "ontology");
  OntologySchema schema;
  try {
    schema = LoadOntology(config.ontology);
    for (const std::string &path : config.instances) {
      RequirePath(path, "instance file");
      LoadBulkInstances(path, &schema);
    }
  } catch (const ValidationError &e) {
    for (const Violation &v : e.violations()) {
      std::cerr << "violation: " << v.ToString() << "\n";
    }
    return kConfigError;
  }
  std::vector<Violation> violations = ValidateOntology(schema);
  for (const Violation &v : violations) {
    std::cerr << "violation: " << v.ToString() << "\n";
  }
  if (!violations.empty()) return kConfigError;
  std::cout << "ok: version " << (schema.version.empty() ? "-" : schema.version)
            << ", " << schema.classes.size() << " classes, "
            << schema.instances.size() << " instances\n";
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Ontology-driven resume annotation and evaluation"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_knowledge = [&](CLI::App *cmd) {
    cmd->add_option("--ontology", config.ontology, "Ontology file");
    cmd->add_option("--lexicon", config.lexicon, "Lexicon file");
    cmd->add_option("--stopwords", config.stopwords, "Stopword list");
    cmd->add_option("--instances", config.instances,
                    "Extra bulk instance files");
  };
  auto add_workers = [&](CLI::App *cmd) {
    cmd->add_option("--workers", config.workers, "Worker threads")
        ->check(CLI::PositiveNumber);
  };

  CLI::App *annotate = app.add_subcommand(
      "annotate", "Write <id>.ann and <id>.xml for each input document");
  add_knowledge(annotate);
  add_workers(annotate);
  annotate->add_option("input,--input", config.input,
                       "A .txt file or a directory of them")
      ->required();
  annotate->add_option("--out", config.output_dir, "Output directory")
      ->required();

  std::string gold_dir, csv_path;
  CLI::App *evaluate = app.add_subcommand(
      "evaluate", "Score response annotations against gold annotations");
  evaluate->add_option("input,--input", config.input,
                       "Directory of response .ann files")
      ->required();
  evaluate->add_option("--gold", gold_dir, "Directory of gold .ann files")
      ->required();
  evaluate->add_option("--mode", config.mode, "strict, lenient or average")
      ->check(CLI::IsMember({"strict", "lenient", "average"}));
  evaluate->add_option("--beta", config.beta, "F-measure beta");
  evaluate->add_option("--csv", csv_path, "CSV report path");
  evaluate->add_option("--out", config.output_dir,
                       "Directory for report.csv when --csv is absent");

  std::string profile_path;
  CLI::App *rank = app.add_subcommand(
      "rank", "Rank resumes against a requirement profile");
  add_knowledge(rank);
  rank->add_option("input,--input", config.input,
                   "Directory of .ann files, or of .txt documents")
      ->required();
  rank->add_option("--profile", profile_path, "Requirement profile")
      ->required();

  std::vector<size_t> sizes{1, 10};
  int repeat = 3;
  CLI::App *bench = app.add_subcommand(
      "bench", "Time the annotation loop for several corpus sizes");
  add_knowledge(bench);
  add_workers(bench);
  bench->add_option("input,--input", config.input, "Corpus directory")
      ->required();
  bench->add_option("--sizes", sizes, "Corpus sizes")->delimiter(',');
  bench->add_option("--repeat", repeat, "Timings per size; the best is kept")
      ->check(CLI::PositiveNumber);

  CLI::App *ontology = app.add_subcommand("ontology", "Ontology tools");
  ontology->require_subcommand(1);
  CLI::App *check =
      ontology->add_subcommand("check", "Load and validate an ontology");
  check->add_option("--ontology", config.ontology, "Ontology file");
  check->add_option("--instances", config.instances, "Bulk instance files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*annotate) return CmdAnnotate(config);
    if (*evaluate) return CmdEvaluate(config, gold_dir, csv_path);
    if (*rank) return CmdRank(config, profile_path);
    if (*bench) return CmdBench(config, sizes, repeat);
    if (*check) return CmdOntologyCheck(config);
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const Violation &v : e.violations()) {
      std::cerr << "violation: " << v.ToString() << "\n";
    }
    return kConfigError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kOk;
}
