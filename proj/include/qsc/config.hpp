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

#ifndef QSC_CONFIG_HPP
#define QSC_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsc/circuit.hpp"
#include "qsc/trainer.hpp"

namespace qsc {

/// Value of one `key = ...` line in the TOML-style config: a string, number,
/// boolean, or homogeneous array of strings/numbers.
using ConfigValue = std::variant<std::string, double, bool,
                                 std::vector<std::string>, std::vector<double>>;

/// Parses the TOML subset used for experiment files: [section] headers,
/// key = value lines, # comments, quoted strings, numbers, booleans and
/// flat arrays. Keys are reported as "section.key".
std::map<std::string, ConfigValue> parse_config_text(const std::string &text,
                                                     const std::string &origin);

struct ExperimentConfig {
  // [corpus]
  std::string corpus_source = "generate";  // "generate" | "file"
  std::string corpus_path;                 // for source = "file"
  std::string lexicon_path;                // optional; empty = toy lexicon
  std::string world = "default";           // "default" | "random"
  uint64_t world_seed = 0;
  std::string split = "fixed";             // "fixed" | "random"
  std::vector<std::vector<std::string>> test_sentences;
  double test_fraction = 0.25;
  uint64_t split_seed = 7;

  AnsatzConfig ansatz;
  SpsaConfig spsa;

  // [evaluator]
  EvaluatorSpec::Mode evaluator_mode = EvaluatorSpec::Mode::exact;
  uint64_t shots = 8192;

  // [run]
  uint64_t seed = 11;
  int workers = 1;
  std::string output_dir = "out";
  int checkpoint_every = 100;

  std::string raw_text;  // config file contents, echoed into reports

  void validate() const;
};

ExperimentConfig load_config(const std::string &path);
ExperimentConfig parse_config(const std::string &text, const std::string &origin);

/// The bundled default configuration (the committed configs/default.toml).
std::string default_config_text();

}  // namespace qsc

#endif
