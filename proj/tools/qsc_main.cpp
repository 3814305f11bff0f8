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

// Command-line front end. All functionality goes through the libqsc C API.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsc/qsc.h"

namespace {

int report_failure(const std::string &what, qsc_status status) {
  std::cerr << what << ": " << qsc_status_name(status) << ": "
            << qsc_last_error() << "\n";
  return 1;
}

std::string resolve_out_dir(const std::string &flag_value) {
  if (!flag_value.empty()) return flag_value;
  const char *env = std::getenv("QSC_OUT_DIR");
  if (env != nullptr && env[0] != '\0') return env;
  return "";
}

std::vector<std::string> tokenize(const std::vector<std::string> &args) {
  // Accepts both quoted sentences and one-token-per-argument invocations.
  std::vector<std::string> tokens;
  for (const std::string &arg : args) {
    std::istringstream in(arg);
    std::string t;
    while (in >> t) tokens.push_back(t);
  }
  return tokens;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"qsc: compile sentences to parameterized quantum circuits, "
               "learn word parameters from truth labels, answer questions"};
  app.require_subcommand(1);

  std::string config = "configs/default.toml";
  std::string out;
  std::string model_path;
  long seed = -1;
  int workers = 0;

  auto *generate = app.add_subcommand("generate", "write the corpus and lexicon files");
  generate->add_option("--config", config, "experiment config file");
  generate->add_option("--out", out, "output directory (default: QSC_OUT_DIR or .)");

  auto *train = app.add_subcommand("train", "run the full experiment");
  train->add_option("--config", config, "experiment config file");
  train->add_option("--out", out, "output directory override");
  train->add_option("--seed", seed, "seed override");
  train->add_option("--workers", workers, "worker thread count");

  std::vector<std::string> question;
  auto *ask = app.add_subcommand("ask", "answer a question with a trained model");
  ask->add_option("--model", model_path, "model.json from a training run")->required();
  ask->add_option("question", question, "question tokens")->required();

  auto *export_qasm = app.add_subcommand("export-qasm", "write per-sentence QASM files");
  export_qasm->add_option("--config", config, "experiment config file");
  export_qasm->add_option("--model", model_path, "bind parameters from this model");
  export_qasm->add_option("--out", out, "output directory");

  auto *demo = app.add_subcommand("demo-density", "print the density-matrix hyponymy demo");
  (void)demo;

  CLI11_PARSE(app, argc, argv);

  if (generate->parsed()) {
    std::string dir = resolve_out_dir(out);
    if (dir.empty()) dir = ".";
    std::string corpus_path = dir + "/corpus.jsonl";
    std::string lexicon_path = dir + "/lexicon.json";
    qsc_status s = qsc_generate(config.c_str(), corpus_path.c_str(),
                                lexicon_path.c_str());
    if (s != QSC_OK) return report_failure("generate", s);
    std::cout << "wrote " << corpus_path << " and " << lexicon_path << "\n";
    return 0;
  }

  if (train->parsed()) {
    std::string dir = resolve_out_dir(out);
    qsc_status s = qsc_run_experiment(config.c_str(),
                                      dir.empty() ? nullptr : dir.c_str(),
                                      seed, workers);
    if (s != QSC_OK) return report_failure("train", s);
    std::cout << "experiment complete; see report.json in the output directory\n";
    return 0;
  }

  if (ask->parsed()) {
    qsc_model *model = nullptr;
    qsc_status s = qsc_model_open(model_path.c_str(), &model);
    if (s != QSC_OK) return report_failure("ask", s);
    std::vector<std::string> tokens = tokenize(question);
    std::vector<const char *> raw;
    raw.reserve(tokens.size());
    for (const std::string &t : tokens) raw.push_back(t.c_str());
    double estimate = 0.0;
    int verdict = 0;
    int width = 0;
    s = qsc_model_ask(model, raw.data(), raw.size(), &estimate, &verdict, &width);
    qsc_model_free(model);
    if (s != QSC_OK) return report_failure("ask", s);
    std::cout << "truth estimate: " << estimate << "\n";
    std::cout << "verdict: " << (verdict ? "true" : "false") << "\n";
    std::cout << "circuit width: " << width << "\n";
    return 0;
  }

  if (export_qasm->parsed()) {
    std::string dir = resolve_out_dir(out);
    if (dir.empty()) dir = "qasm";
    qsc_status s = qsc_export_qasm(config.c_str(),
                                   model_path.empty() ? nullptr : model_path.c_str(),
                                   dir.c_str());
    if (s != QSC_OK) return report_failure("export-qasm", s);
    std::cout << "wrote QASM files under " << dir << "\n";
    return 0;
  }

  if (demo->parsed()) {
    size_t needed = 0;
    qsc_status s = qsc_density_demo(nullptr, 0, &needed);
    if (s != QSC_OK) return report_failure("demo-density", s);
    std::vector<char> buf(needed);
    s = qsc_density_demo(buf.data(), buf.size(), nullptr);
    if (s != QSC_OK) return report_failure("demo-density", s);
    std::cout << buf.data();
    return 0;
  }

  return 0;
}
