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

#include "qsc/experiment.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsc/error.hpp"
#include "qsc/qasm.hpp"
#include "qsc/rng.hpp"
#include "qsc/trainer.hpp"

namespace qsc {

namespace fs = std::filesystem;

namespace {

nlohmann::json ansatz_to_json(const AnsatzConfig &a) {
  return {{"family", "IQP"},
          {"qubits_per_noun", a.qubits_per_noun},
          {"noun_layers", a.noun_layers},
          {"verb_layers", a.verb_layers},
          {"qubit_reduction", a.qubit_reduction}};
}

AnsatzConfig ansatz_from_json(const nlohmann::json &j) {
  AnsatzConfig a;
  a.qubits_per_noun = j.at("qubits_per_noun").get<int>();
  a.noun_layers = j.at("noun_layers").get<int>();
  a.verb_layers = j.at("verb_layers").get<int>();
  a.qubit_reduction = j.at("qubit_reduction").get<bool>();
  return a;
}

std::string timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string loss_history_csv(const std::vector<double> &history) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "iteration,loss\n";
  for (size_t i = 0; i < history.size(); ++i) {
    out << i << "," << history[i] << "\n";
  }
  return out.str();
}

double majority_baseline_on_test(const LabeledCorpus &corpus) {
  if (corpus.test_indices.empty()) return 0.0;
  int train_true = 0;
  for (size_t i : corpus.train_indices) train_true += corpus.entries[i].label;
  int majority = 2 * train_true >= static_cast<int>(corpus.train_indices.size())
                     ? 1
                     : 0;
  int hits = 0;
  for (size_t i : corpus.test_indices) {
    hits += corpus.entries[i].label == majority ? 1 : 0;
  }
  return double(hits) / double(corpus.test_indices.size());
}

}  // namespace

void Model::save(const std::string &path) const {
  nlohmann::json j{{"lexicon", lexicon.to_json()},
                   {"ansatz", ansatz_to_json(ansatz)},
                   {"params", params.to_json()},
                   {"threshold", 0.5}};
  write_text_file(path, j.dump(2) + "\n");
}

Model Model::load(const std::string &path) {
  nlohmann::json j = nlohmann::json::parse(read_text_file(path), nullptr, false);
  if (j.is_discarded()) fail(QSC_ERR_IO, "model file '" + path + "' is not JSON");
  Model m{Lexicon::from_json(j.at("lexicon")), ansatz_from_json(j.at("ansatz")),
          ParameterStore::from_json(j.at("params"))};
  return m;
}

PreparedCorpus prepare_corpus(const ExperimentConfig &cfg) {
  cfg.validate();
  Lexicon lexicon = cfg.lexicon_path.empty() ? Lexicon::toy()
                                             : load_lexicon(cfg.lexicon_path);
  if (cfg.corpus_source == "file") {
    return PreparedCorpus{lexicon, load_corpus(cfg.corpus_path, lexicon)};
  }
  RelationalWorld world = cfg.world == "default"
                              ? RelationalWorld::default_world()
                              : RelationalWorld::random_world(lexicon, cfg.world_seed);
  LabeledCorpus corpus = build_corpus(lexicon, world);
  if (cfg.split == "fixed") {
    apply_fixed_split(corpus, cfg.test_sentences);
  } else {
    apply_random_split(corpus, cfg.test_fraction, cfg.split_seed);
  }
  return PreparedCorpus{std::move(lexicon), std::move(corpus)};
}

ExperimentReport run_experiment(const ExperimentConfig &cfg,
                                const RunOverrides &overrides) {
  ExperimentConfig effective = cfg;
  if (overrides.seed) effective.seed = *overrides.seed;
  if (overrides.workers) effective.workers = *overrides.workers;
  if (overrides.output_dir) effective.output_dir = *overrides.output_dir;
  effective.validate();

  PreparedCorpus prepared = prepare_corpus(effective);
  const fs::path out_dir(effective.output_dir);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  fs::create_directories(out_dir / "checkpoints", ec);
  fs::create_directories(out_dir / "qasm", ec);
  if (!fs::exists(out_dir)) {
    fail(QSC_ERR_IO, "cannot create output directory '" + out_dir.string() + "'");
  }

  CompiledCorpus compiled =
      CompiledCorpus::compile(prepared.corpus, effective.ansatz);

  SpsaConfig spsa = effective.spsa;
  spsa.seed = derive_seed(effective.seed, "spsa");
  EvaluatorSpec eval;
  eval.mode = effective.evaluator_mode;
  eval.shots = effective.shots;
  eval.seed = derive_seed(effective.seed, "shots");
  ParameterStore initial =
      init_params(prepared.corpus, prepared.lexicon, effective.ansatz,
                  derive_seed(effective.seed, "init"));

  TrainCallback checkpoint = nullptr;
  if (effective.checkpoint_every > 0) {
    checkpoint = [&](int iteration, const ParameterStore &params, double l) {
      if (iteration % effective.checkpoint_every != 0) return;
      nlohmann::json j{{"iteration", iteration},
                       {"params", params.to_json()},
                       {"loss", l}};
      std::ostringstream name;
      name << "ck_" << std::setw(6) << std::setfill('0') << iteration << ".json";
      write_text_file((out_dir / "checkpoints" / name.str()).string(),
                      j.dump(2) + "\n");
    };
  }

  TrainResult trained = train(compiled, initial, spsa, eval, effective.workers,
                              checkpoint);

  ExperimentReport report;
  report.config_text = effective.raw_text.empty() ? default_config_text()
                                                  : effective.raw_text;
  report.seed = effective.seed;
  report.loss_history = trained.loss_history;
  report.train_accuracy = trained.train_accuracy;
  report.test_accuracy = trained.test_accuracy;
  report.majority_baseline = majority_baseline_on_test(prepared.corpus);
  report.parameter_count = static_cast<int>(trained.final_params.size());
  report.generated_at = timestamp_utc();

  std::set<size_t> test_set(prepared.corpus.test_indices.begin(),
                            prepared.corpus.test_indices.end());
  for (size_t i = 0; i < compiled.sentences.size(); ++i) {
    const CompiledSentence &cs = compiled.sentences[i];
    double p = evaluate(cs.circuit, trained.final_params).truth_value;
    report.predictions.push_back(SentenceOutcome{
        cs.tokens, cs.label, test_set.count(i) ? "test" : "train", p,
        (p > 0.5) == (cs.label == 1)});
  }

  Model model{prepared.lexicon, effective.ansatz, trained.final_params};
  model.save((out_dir / "model.json").string());
  save_corpus(prepared.corpus, (out_dir / "corpus.jsonl").string());
  save_lexicon(prepared.lexicon, (out_dir / "lexicon.json").string());
  write_text_file((out_dir / "loss_history.csv").string(),
                  loss_history_csv(trained.loss_history));
  write_text_file((out_dir / "report.json").string(),
                  report.to_json().dump(2) + "\n");
  for (const CompiledSentence &cs : compiled.sentences) {
    std::string id;
    for (const auto &t : cs.tokens) id += (id.empty() ? "" : " ") + t;
    std::string text = to_qasm(cs.circuit, trained.final_params, id);
    write_text_file(
        (out_dir / "qasm" / (qasm_file_stem(cs.tokens) + ".qasm")).string(),
        text);
  }
  return report;
}

Answer ask_model(const Model &model, const std::vector<std::string> &tokens) {
  Sentence question = parse(tokens, model.lexicon);
  ParamCircuit circuit = compile_question(question, model.ansatz);
  if (model.ansatz.qubit_reduction) circuit = apply_qubit_reduction(circuit);
  for (const ParamRef &slot : circuit.parameter_slots()) {
    if (!model.params.has_word(slot.word)) {
      fail(QSC_ERR_UNKNOWN_WORD,
           "word '" + slot.word + "' has no trained parameters");
    }
  }
  double estimate = evaluate(circuit, model.params).truth_value;
  return Answer{estimate, estimate > 0.5, circuit.width};
}

void export_corpus_qasm(const ExperimentConfig &cfg,
                        const std::optional<Model> &model,
                        const std::string &out_dir) {
  PreparedCorpus prepared = prepare_corpus(cfg);
  CompiledCorpus compiled = CompiledCorpus::compile(prepared.corpus, cfg.ansatz);
  ParameterStore params =
      model ? model->params
            : init_params(prepared.corpus, prepared.lexicon, cfg.ansatz,
                          derive_seed(cfg.seed, "init"));
  fs::create_directories(fs::path(out_dir));
  for (const CompiledSentence &cs : compiled.sentences) {
    std::string id;
    for (const auto &t : cs.tokens) id += (id.empty() ? "" : " ") + t;
    write_text_file(
        (fs::path(out_dir) / (qasm_file_stem(cs.tokens) + ".qasm")).string(),
        to_qasm(cs.circuit, params, id));
  }
}

}  // namespace qsc
