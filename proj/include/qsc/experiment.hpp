// Copyright 2026 qsc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSC_EXPERIMENT_HPP
#define QSC_EXPERIMENT_HPP

#include <optional>
#include <string>

#include "qsc/config.hpp"
#include "qsc/report.hpp"

namespace qsc {

/// A trained model as persisted to model.json: the lexicon it was trained
/// over, the ansatz shape, and the learned parameters.
struct Model {
  Lexicon lexicon;
  AnsatzConfig ansatz;
  ParameterStore params;

  void save(const std::string &path) const;
  static Model load(const std::string &path);
};

struct RunOverrides {
  std::optional<uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::string> output_dir;
};

/// Builds the corpus and lexicon the config describes, without training.
struct PreparedCorpus {
  Lexicon lexicon;
  LabeledCorpus corpus;
};
PreparedCorpus prepare_corpus(const ExperimentConfig &cfg);

/// The five-step pipeline: diagrams -> ansatz circuits -> loss -> SPSA ->
/// test, writing report.json, model.json, loss_history.csv, corpus.jsonl,
/// lexicon.json, checkpoints/ and qasm/ under the output directory. The
/// report is a pure function of (config, seeds) except for generated_at.
/// Non-convergence shows up in the report, never as a failure.
ExperimentReport run_experiment(const ExperimentConfig &cfg,
                                const RunOverrides &overrides = {});

struct Answer {
  double truth_estimate = 0.0;
  bool verdict = false;
  int circuit_width = 0;
};

/// Parses the question over the model's lexicon, compiles it, and evaluates
/// it with the trained parameters at threshold 0.5.
Answer ask_model(const Model &model, const std::vector<std::string> &tokens);

/// Writes one QASM file per corpus sentence; parameters come from the model
/// when given, otherwise from a seeded random initialization.
void export_corpus_qasm(const ExperimentConfig &cfg,
                        const std::optional<Model> &model,
                        const std::string &out_dir);

}  // namespace qsc

#endif
