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

#ifndef QSC_REPORT_HPP
#define QSC_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace qsc {

struct SentenceOutcome {
  std::vector<std::string> tokens;
  int label = 0;
  std::string split;  // "train" | "test"
  double prediction = 0.0;
  bool correct = false;
};

struct ExperimentReport {
  std::string config_text;
  uint64_t seed = 0;
  std::vector<double> loss_history;
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
  double majority_baseline = 0.0;  // train-majority label's share of the test set
  std::vector<SentenceOutcome> predictions;
  int parameter_count = 0;
  std::string generated_at;  // the only field allowed to differ across reruns

  nlohmann::json to_json() const;
};

/// Checks a JSON document against the committed report schema (a small
/// structural subset of JSON Schema: type, required, properties, items).
/// Returns an empty string on success, else the first violation found.
std::string validate_against_schema(const nlohmann::json &document,
                                    const nlohmann::json &schema);

/// The schema text committed at schemas/report.schema.json.
std::string report_schema_text();

void write_text_file(const std::string &path, const std::string &contents);
std::string read_text_file(const std::string &path);

}  // namespace qsc

#endif
