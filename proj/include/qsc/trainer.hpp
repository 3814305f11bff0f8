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

#ifndef QSC_TRAINER_HPP
#define QSC_TRAINER_HPP

#include <functional>
#include <string>
#include <vector>

#include "qsc/compiler.hpp"
#include "qsc/corpus.hpp"
#include "qsc/simulator.hpp"

namespace qsc {

struct SpsaConfig {
  double a = 0.1;
  double c = 0.1;
  double big_a = 10.0;
  double alpha_decay = 0.602;
  double gamma_decay = 0.101;
  int iterations = 400;
  uint64_t seed = 11;

  void validate() const;
};

struct EvaluatorSpec {
  enum class Mode { exact, shots };
  Mode mode = Mode::exact;
  uint64_t shots = 8192;
  uint64_t seed = 0;  // base seed for shot noise
};

/// A corpus with its circuits compiled once; parameters are bound at
/// evaluation time, so word parameters stay shared across sentences.
struct CompiledSentence {
  std::vector<std::string> tokens;
  int label = 0;
  ParamCircuit circuit;
  std::string id;  // tokens joined by spaces
};

struct CompiledCorpus {
  std::vector<CompiledSentence> sentences;
  std::vector<size_t> train_indices;
  std::vector<size_t> test_indices;

  static CompiledCorpus compile(const LabeledCorpus &corpus,
                                const AnsatzConfig &cfg);
};

struct LossTerm {
  std::string sentence_id;
  double prediction = 0.0;
  int label = 0;
  double distance = 0.0;
};

struct LossReport {
  double total = 0.0;
  std::vector<LossTerm> per_sentence;
};

/// Sum of squared distances between predictions and labels over the given
/// subset. `call_tag` decorrelates shot noise between separate loss calls
/// while keeping runs reproducible.
LossReport loss(const ParameterStore &params, const CompiledCorpus &corpus,
                const std::vector<size_t> &indices, const EvaluatorSpec &eval,
                uint64_t call_tag = 0, int workers = 1);

using LossFn = std::function<double(const ParameterStore &, uint64_t call_tag)>;

/// One SPSA update at iteration k >= 1: a symmetric Bernoulli perturbation of
/// size c_k = c / k^gamma probes the loss twice; the gradient estimate steps
/// with gain a_k = a / (A + k)^alpha; parameters wrap into [0, 2pi).
ParameterStore spsa_step(const ParameterStore &params, const LossFn &loss_fn,
                         int k, const SpsaConfig &cfg);

struct TrainResult {
  ParameterStore final_params;
  std::vector<double> loss_history;  // length iterations + 1
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
};

using TrainCallback =
    std::function<void(int iteration, const ParameterStore &, double loss)>;

/// Uniform [0, 2pi) parameter vectors for every word the corpus uses.
ParameterStore init_params(const LabeledCorpus &corpus, const Lexicon &lexicon,
                           const AnsatzConfig &cfg, uint64_t init_seed);

/// SPSA training on the train split; accuracies are computed with the exact
/// evaluator at threshold 0.5. Non-convergence is reported through the
/// history and accuracies, never as an error.
TrainResult train(const CompiledCorpus &corpus, ParameterStore initial,
                  const SpsaConfig &spsa, const EvaluatorSpec &eval,
                  int workers = 1, const TrainCallback &callback = nullptr);

/// Fraction of the subset whose exact prediction lands on the label's side
/// of 0.5.
double accuracy(const ParameterStore &params, const CompiledCorpus &corpus,
                const std::vector<size_t> &indices, int workers = 1);

/// Compiles and exactly evaluates a question against trained parameters;
/// fails with UnknownWord when the question uses vocabulary without
/// parameters (the relative pronoun is parameterless and always known).
std::pair<double, bool> answer_question(const Sentence &question,
                                        const ParameterStore &params,
                                        const AnsatzConfig &cfg);

}  // namespace qsc

#endif
