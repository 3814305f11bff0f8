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

#include "qsc/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qsc/error.hpp"

namespace qsc {

namespace {

[[noreturn]] void config_fail(const std::string &origin, size_t line,
                              const std::string &message) {
  fail(QSC_ERR_CONFIG, origin + ":" + std::to_string(line) + ": " + message);
}

std::string trim(const std::string &s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Strips a trailing comment that is not inside a quoted string.
std::string strip_comment(const std::string &s) {
  bool in_string = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') in_string = !in_string;
    if (s[i] == '#' && !in_string) return s.substr(0, i);
  }
  return s;
}

ConfigValue parse_scalar(const std::string &raw, const std::string &origin,
                         size_t line) {
  std::string v = trim(raw);
  if (v.empty()) config_fail(origin, line, "missing value");
  if (v.front() == '"') {
    if (v.size() < 2 || v.back() != '"') {
      config_fail(origin, line, "unterminated string");
    }
    return v.substr(1, v.size() - 2);
  }
  if (v == "true") return true;
  if (v == "false") return false;
  try {
    size_t used = 0;
    double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (...) {
  }
  config_fail(origin, line, "cannot parse value '" + v + "'");
}

ConfigValue parse_value(const std::string &raw, const std::string &origin,
                        size_t line) {
  std::string v = trim(raw);
  if (!v.empty() && v.front() == '[') {
    if (v.back() != ']') config_fail(origin, line, "unterminated array");
    std::string inner = v.substr(1, v.size() - 2);
    std::vector<std::string> strings;
    std::vector<double> numbers;
    bool any_string = false, any_number = false;
    std::string item;
    bool in_string = false;
    auto flush = [&]() {
      std::string t = trim(item);
      item.clear();
      if (t.empty()) return;
      ConfigValue cv = parse_scalar(t, origin, line);
      if (std::holds_alternative<std::string>(cv)) {
        strings.push_back(std::get<std::string>(cv));
        any_string = true;
      } else if (std::holds_alternative<double>(cv)) {
        numbers.push_back(std::get<double>(cv));
        any_number = true;
      } else {
        config_fail(origin, line, "arrays hold strings or numbers only");
      }
    };
    for (char c : inner) {
      if (c == '"') in_string = !in_string;
      if (c == ',' && !in_string) {
        flush();
      } else {
        item += c;
      }
    }
    flush();
    if (any_string && any_number) {
      config_fail(origin, line, "mixed array types");
    }
    if (any_number) return numbers;
    return strings;
  }
  return parse_scalar(v, origin, line);
}

struct ConfigReader {
  const std::map<std::string, ConfigValue> &values;
  const std::string &origin;

  std::optional<ConfigValue> get(const std::string &key) const {
    auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }

  std::string get_string(const std::string &key, const std::string &dflt) const {
    auto v = get(key);
    if (!v) return dflt;
    if (!std::holds_alternative<std::string>(*v)) {
      fail(QSC_ERR_CONFIG, origin + ": " + key + " must be a string");
    }
    return std::get<std::string>(*v);
  }

  double get_number(const std::string &key, double dflt) const {
    auto v = get(key);
    if (!v) return dflt;
    if (!std::holds_alternative<double>(*v)) {
      fail(QSC_ERR_CONFIG, origin + ": " + key + " must be a number");
    }
    return std::get<double>(*v);
  }

  int get_int(const std::string &key, int dflt) const {
    double d = get_number(key, dflt);
    int i = static_cast<int>(d);
    if (double(i) != d) {
      fail(QSC_ERR_CONFIG, origin + ": " + key + " must be an integer");
    }
    return i;
  }

  uint64_t get_seed(const std::string &key, uint64_t dflt) const {
    double d = get_number(key, double(dflt));
    if (d < 0 || double(uint64_t(d)) != d) {
      fail(QSC_ERR_CONFIG, origin + ": " + key + " must be a nonnegative integer");
    }
    return uint64_t(d);
  }

  bool get_bool(const std::string &key, bool dflt) const {
    auto v = get(key);
    if (!v) return dflt;
    if (!std::holds_alternative<bool>(*v)) {
      fail(QSC_ERR_CONFIG, origin + ": " + key + " must be a boolean");
    }
    return std::get<bool>(*v);
  }

  std::vector<std::string> get_strings(const std::string &key) const {
    auto v = get(key);
    if (!v) return {};
    if (std::holds_alternative<std::vector<std::string>>(*v)) {
      return std::get<std::vector<std::string>>(*v);
    }
    fail(QSC_ERR_CONFIG, origin + ": " + key + " must be an array of strings");
  }
};

std::vector<std::string> split_words(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

std::map<std::string, ConfigValue> parse_config_text(const std::string &text,
                                                     const std::string &origin) {
  std::map<std::string, ConfigValue> values;
  std::istringstream in(text);
  std::string line;
  std::string section;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(strip_comment(line));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') config_fail(origin, line_no, "unterminated section");
      section = trim(s.substr(1, s.size() - 2));
      if (section.empty()) config_fail(origin, line_no, "empty section name");
      continue;
    }
    size_t eq = s.find('=');
    if (eq == std::string::npos) {
      config_fail(origin, line_no, "expected key = value");
    }
    std::string key = trim(s.substr(0, eq));
    if (key.empty()) config_fail(origin, line_no, "empty key");
    std::string full = section.empty() ? key : section + "." + key;
    if (values.count(full)) {
      config_fail(origin, line_no, "duplicate key '" + full + "'");
    }
    values[full] = parse_value(s.substr(eq + 1), origin, line_no);
  }
  return values;
}

void ExperimentConfig::validate() const {
  if (corpus_source != "generate" && corpus_source != "file") {
    fail(QSC_ERR_CONFIG, "corpus.source must be generate or file");
  }
  if (corpus_source == "file" && corpus_path.empty()) {
    fail(QSC_ERR_CONFIG, "corpus.source = file needs corpus.corpus_path");
  }
  if (world != "default" && world != "random") {
    fail(QSC_ERR_CONFIG, "corpus.world must be default or random");
  }
  if (split != "fixed" && split != "random") {
    fail(QSC_ERR_CONFIG, "corpus.split must be fixed or random");
  }
  if (split == "fixed" && test_sentences.empty()) {
    fail(QSC_ERR_CONFIG, "fixed split needs corpus.test_sentences");
  }
  if (split == "random" && !(test_fraction > 0.0 && test_fraction < 1.0)) {
    fail(QSC_ERR_CONFIG, "corpus.test_fraction must lie in (0, 1)");
  }
  if (ansatz.qubits_per_noun < 1) {
    fail(QSC_ERR_CONFIG, "ansatz.qubits_per_noun must be >= 1");
  }
  if (ansatz.noun_layers < 1 || ansatz.verb_layers < 1) {
    fail(QSC_ERR_CONFIG, "ansatz layers must be >= 1");
  }
  spsa.validate();
  if (shots < 1) fail(QSC_ERR_CONFIG, "evaluator.shots must be >= 1");
  if (checkpoint_every < 0) {
    fail(QSC_ERR_CONFIG, "run.checkpoint_every must be >= 0");
  }
  if (workers < 1) fail(QSC_ERR_CONFIG, "run.workers must be >= 1");
}

ExperimentConfig parse_config(const std::string &text, const std::string &origin) {
  auto values = parse_config_text(text, origin);
  ConfigReader r{values, origin};
  ExperimentConfig cfg;
  cfg.raw_text = text;
  cfg.corpus_source = r.get_string("corpus.source", cfg.corpus_source);
  cfg.corpus_path = r.get_string("corpus.corpus_path", "");
  cfg.lexicon_path = r.get_string("corpus.lexicon_path", "");
  cfg.world = r.get_string("corpus.world", cfg.world);
  cfg.world_seed = r.get_seed("corpus.world_seed", cfg.world_seed);
  cfg.split = r.get_string("corpus.split", cfg.split);
  for (const std::string &s : r.get_strings("corpus.test_sentences")) {
    cfg.test_sentences.push_back(split_words(s));
  }
  cfg.test_fraction = r.get_number("corpus.test_fraction", cfg.test_fraction);
  cfg.split_seed = r.get_seed("corpus.split_seed", cfg.split_seed);

  std::string family = r.get_string("ansatz.family", "IQP");
  if (family != "IQP") fail(QSC_ERR_CONFIG, origin + ": ansatz.family must be IQP");
  cfg.ansatz.qubits_per_noun =
      r.get_int("ansatz.qubits_per_noun", cfg.ansatz.qubits_per_noun);
  cfg.ansatz.noun_layers = r.get_int("ansatz.noun_layers", cfg.ansatz.noun_layers);
  cfg.ansatz.verb_layers = r.get_int("ansatz.verb_layers", cfg.ansatz.verb_layers);
  cfg.ansatz.qubit_reduction =
      r.get_bool("ansatz.qubit_reduction", cfg.ansatz.qubit_reduction);

  cfg.spsa.a = r.get_number("spsa.a", cfg.spsa.a);
  cfg.spsa.c = r.get_number("spsa.c", cfg.spsa.c);
  cfg.spsa.big_a = r.get_number("spsa.A", cfg.spsa.big_a);
  cfg.spsa.alpha_decay = r.get_number("spsa.alpha", cfg.spsa.alpha_decay);
  cfg.spsa.gamma_decay = r.get_number("spsa.gamma", cfg.spsa.gamma_decay);
  cfg.spsa.iterations = r.get_int("spsa.iterations", cfg.spsa.iterations);

  std::string mode = r.get_string("evaluator.mode", "exact");
  if (mode == "exact") {
    cfg.evaluator_mode = EvaluatorSpec::Mode::exact;
  } else if (mode == "shots") {
    cfg.evaluator_mode = EvaluatorSpec::Mode::shots;
  } else {
    fail(QSC_ERR_CONFIG, origin + ": evaluator.mode must be exact or shots");
  }
  cfg.shots = r.get_seed("evaluator.shots", cfg.shots);

  cfg.seed = r.get_seed("run.seed", cfg.seed);
  cfg.workers = r.get_int("run.workers", cfg.workers);
  cfg.output_dir = r.get_string("run.output_dir", cfg.output_dir);
  cfg.checkpoint_every = r.get_int("run.checkpoint_every", cfg.checkpoint_every);

  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) fail(QSC_ERR_IO, "cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

std::string default_config_text() {
  return R"(# qsc experiment configuration

[corpus]
source = "generate"
world = "default"
world_seed = 0
split = "fixed"
test_sentences = ["Bob loves Bob", "Bob is rich", "Bob hates Bob"]
test_fraction = 0.25
split_seed = 7

[ansatz]
family = "IQP"
qubits_per_noun = 1
noun_layers = 1
verb_layers = 2
qubit_reduction = true

[spsa]
a = 0.1
c = 0.1
A = 10.0
alpha = 0.602
gamma = 0.101
iterations = 400

[evaluator]
mode = "exact"
shots = 8192

[run]
seed = 11
workers = 1
output_dir = "out"
checkpoint_every = 100
)";
}

}  // namespace qsc
