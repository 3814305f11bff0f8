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

#include "qsc/trainer.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "qsc/error.hpp"
#include "qsc/parallel.hpp"
#include "qsc/rng.hpp"

namespace qsc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double x) {
  double w = std::fmod(x, kTwoPi);
  if (w < 0) w += kTwoPi;
  return w;
}

std::string join_tokens(const std::vector<std::string> &tokens) {
  std::string s;
  for (const auto &t : tokens) s += (s.empty() ? "" : " ") + t;
  return s;
}
}  // namespace

void SpsaConfig::validate() const {
  if (a < 0 || c <= 0 || big_a < 0 || alpha_decay <= 0 || gamma_decay <= 0) {
    fail(QSC_ERR_CONFIG, "SPSA gains must be positive (a may be zero)");
  }
  if (iterations < 0) fail(QSC_ERR_CONFIG, "SPSA iterations must be >= 0");
}

CompiledCorpus CompiledCorpus::compile(const LabeledCorpus &corpus,
                                       const AnsatzConfig &cfg) {
  CompiledCorpus out;
  for (const LabeledEntry &e : corpus.entries) {
    ParamCircuit circuit = compile_sentence(e.sentence, cfg);
    if (cfg.qubit_reduction) circuit = apply_qubit_reduction(circuit);
    out.sentences.push_back(CompiledSentence{e.sentence.tokens, e.label,
                                             std::move(circuit),
                                             join_tokens(e.sentence.tokens)});
  }
  out.train_indices = corpus.train_indices;
  out.test_indices = corpus.test_indices;
  return out;
}

LossReport loss(const ParameterStore &params, const CompiledCorpus &corpus,
                const std::vector<size_t> &indices, const EvaluatorSpec &eval,
                uint64_t call_tag, int workers) {
  LossReport report;
  report.per_sentence.resize(indices.size());
  parallel_for(indices.size(), workers, [&](size_t i) {
    const CompiledSentence &cs = corpus.sentences[indices[i]];
    double prediction;
    if (eval.mode == EvaluatorSpec::Mode::exact) {
      prediction = evaluate(cs.circuit, params).truth_value;
    } else {
      uint64_t seed = derive_seed(eval.seed, "shots", call_tag, indices[i]);
      prediction = sample(cs.circuit, params, eval.shots, seed).truth_value;
    }
    double d = prediction - cs.label;
    report.per_sentence[i] =
        LossTerm{cs.id, prediction, cs.label, d * d};
  });
  for (const LossTerm &t : report.per_sentence) report.total += t.distance;
  return report;
}

ParameterStore spsa_step(const ParameterStore &params, const LossFn &loss_fn,
                         int k, const SpsaConfig &cfg) {
  if (k < 1) fail(QSC_ERR_INVALID_ARGUMENT, "SPSA iterations are 1-based");
  cfg.validate();
  std::vector<double> theta = params.flatten();
  const size_t dim = theta.size();
  auto rng = make_rng(derive_seed(cfg.seed, "spsa-delta", uint64_t(k)));
  std::bernoulli_distribution coin(0.5);
  std::vector<double> delta(dim);
  for (double &d : delta) d = coin(rng) ? 1.0 : -1.0;

  const double ck = cfg.c / std::pow(double(k), cfg.gamma_decay);
  const double ak = cfg.a / std::pow(cfg.big_a + k, cfg.alpha_decay);

  ParameterStore plus = params, minus = params;
  std::vector<double> tp = theta, tm = theta;
  for (size_t i = 0; i < dim; ++i) {
    tp[i] = wrap_angle(theta[i] + ck * delta[i]);
    tm[i] = wrap_angle(theta[i] - ck * delta[i]);
  }
  plus.unflatten(tp);
  minus.unflatten(tm);
  const double lp = loss_fn(plus, 2 * uint64_t(k));
  const double lm = loss_fn(minus, 2 * uint64_t(k) + 1);
  const double diff = (lp - lm) / (2.0 * ck);
  for (size_t i = 0; i < dim; ++i) {
    theta[i] = wrap_angle(theta[i] - ak * diff / delta[i]);
  }
  ParameterStore next = params;
  next.unflatten(theta);
  return next;
}

ParameterStore init_params(const LabeledCorpus &corpus, const Lexicon &lexicon,
                           const AnsatzConfig &cfg, uint64_t init_seed) {
  std::set<std::string> vocabulary;
  for (const LabeledEntry &e : corpus.entries) {
    for (const auto &t : e.sentence.tokens) vocabulary.insert(t);
  }
  ParameterStore store;
  auto rng = make_rng(derive_seed(init_seed, "init"));
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
  for (const std::string &word : vocabulary) {  // std::set: sorted order
    const LexiconEntry *entry = lexicon.find(word);
    if (entry == nullptr) {
      fail(QSC_ERR_UNKNOWN_WORD, "corpus word '" + word + "' not in lexicon");
    }
    int count = param_count_for(*entry, cfg);
    std::vector<double> values(count);
    for (double &v : values) v = uniform(rng);
    store.set_vector(word, std::move(values));
  }
  return store;
}

double accuracy(const ParameterStore &params, const CompiledCorpus &corpus,
                const std::vector<size_t> &indices, int workers) {
  if (indices.empty()) return 0.0;
  std::vector<int> correct(indices.size(), 0);
  parallel_for(indices.size(), workers, [&](size_t i) {
    const CompiledSentence &cs = corpus.sentences[indices[i]];
    double p = evaluate(cs.circuit, params).truth_value;
    correct[i] = (p > 0.5) == (cs.label == 1) ? 1 : 0;
  });
  double sum = 0.0;
  for (int c : correct) sum += c;
  return sum / double(indices.size());
}

TrainResult train(const CompiledCorpus &corpus, ParameterStore initial,
                  const SpsaConfig &spsa, const EvaluatorSpec &eval,
                  int workers, const TrainCallback &callback) {
  spsa.validate();
  TrainResult result;
  ParameterStore params = std::move(initial);
  LossFn train_loss = [&](const ParameterStore &p, uint64_t call_tag) {
    return loss(p, corpus, corpus.train_indices, eval, call_tag, workers).total;
  };
  result.loss_history.push_back(train_loss(params, 0));
  if (callback) callback(0, params, result.loss_history.back());
  for (int k = 1; k <= spsa.iterations; ++k) {
    params = spsa_step(params, train_loss, k, spsa);
    result.loss_history.push_back(train_loss(params, 2 * uint64_t(k) + 1'000'000));
    if (callback) callback(k, params, result.loss_history.back());
  }
  result.train_accuracy = accuracy(params, corpus, corpus.train_indices, workers);
  result.test_accuracy = accuracy(params, corpus, corpus.test_indices, workers);
  result.final_params = std::move(params);
  return result;
}

std::pair<double, bool> answer_question(const Sentence &question,
                                        const ParameterStore &params,
                                        const AnsatzConfig &cfg) {
  ParamCircuit circuit = compile_question(question, cfg);
  if (cfg.qubit_reduction) circuit = apply_qubit_reduction(circuit);
  for (const ParamRef &slot : circuit.parameter_slots()) {
    if (!params.has_word(slot.word)) {
      fail(QSC_ERR_UNKNOWN_WORD,
           "word '" + slot.word + "' has no trained parameters");
    }
  }
  double estimate = evaluate(circuit, params).truth_value;
  return {estimate, estimate > 0.5};
}

}  // namespace qsc
