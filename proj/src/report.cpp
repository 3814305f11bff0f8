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

#include "qsc/report.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsc/error.hpp"

namespace qsc {

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json preds = nlohmann::json::array();
  for (const SentenceOutcome &p : predictions) {
    preds.push_back({{"tokens", p.tokens},
                     {"label", p.label},
                     {"split", p.split},
                     {"prediction", p.prediction},
                     {"correct", p.correct}});
  }
  return nlohmann::json{{"config_text", config_text},
                        {"seed", seed},
                        {"loss_history", loss_history},
                        {"train_accuracy", train_accuracy},
                        {"test_accuracy", test_accuracy},
                        {"majority_baseline", majority_baseline},
                        {"predictions", preds},
                        {"parameter_count", parameter_count},
                        {"generated_at", generated_at}};
}

namespace {

bool type_matches(const nlohmann::json &value, const std::string &type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "boolean") return value.is_boolean();
  return false;
}

std::string validate_node(const nlohmann::json &value,
                          const nlohmann::json &schema,
                          const std::string &path) {
  if (schema.contains("type")) {
    std::string type = schema.at("type").get<std::string>();
    if (!type_matches(value, type)) {
      return path + ": expected " + type;
    }
  }
  if (schema.contains("required")) {
    for (const auto &key : schema.at("required")) {
      if (!value.contains(key.get<std::string>())) {
        return path + ": missing required field '" + key.get<std::string>() + "'";
      }
    }
  }
  if (schema.contains("properties") && value.is_object()) {
    for (auto it = schema.at("properties").begin();
         it != schema.at("properties").end(); ++it) {
      if (!value.contains(it.key())) continue;
      std::string err = validate_node(value.at(it.key()), it.value(),
                                      path + "." + it.key());
      if (!err.empty()) return err;
    }
  }
  if (schema.contains("items") && value.is_array()) {
    for (size_t i = 0; i < value.size(); ++i) {
      std::string err = validate_node(value.at(i), schema.at("items"),
                                      path + "[" + std::to_string(i) + "]");
      if (!err.empty()) return err;
    }
  }
  return "";
}

}  // namespace

std::string validate_against_schema(const nlohmann::json &document,
                                    const nlohmann::json &schema) {
  return validate_node(document, schema, "$");
}

std::string report_schema_text() {
  return R"({
  "type": "object",
  "required": ["config_text", "seed", "loss_history", "train_accuracy",
               "test_accuracy", "majority_baseline", "predictions",
               "parameter_count", "generated_at"],
  "properties": {
    "config_text": {"type": "string"},
    "seed": {"type": "integer"},
    "loss_history": {"type": "array", "items": {"type": "number"}},
    "train_accuracy": {"type": "number"},
    "test_accuracy": {"type": "number"},
    "majority_baseline": {"type": "number"},
    "parameter_count": {"type": "integer"},
    "generated_at": {"type": "string"},
    "predictions": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["tokens", "label", "split", "prediction", "correct"],
        "properties": {
          "tokens": {"type": "array", "items": {"type": "string"}},
          "label": {"type": "integer"},
          "split": {"type": "string"},
          "prediction": {"type": "number"},
          "correct": {"type": "boolean"}
        }
      }
    }
  }
}
)";
}

void write_text_file(const std::string &path, const std::string &contents) {
  std::ofstream out(path);
  if (!out) fail(QSC_ERR_IO, "cannot open '" + path + "' for writing");
  out << contents;
  if (!out) fail(QSC_ERR_IO, "failed writing '" + path + "'");
}

std::string read_text_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) fail(QSC_ERR_IO, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace qsc
