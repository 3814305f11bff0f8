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

#include "qsc/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsc/error.hpp"
#include "qsc/rng.hpp"

namespace qsc {

RelationalWorld RelationalWorld::default_world() {
  RelationalWorld w;
  // loves holds only of Bob toward himself; hates only of Alice toward Bob.
  w.set_relation_fact("Alice", "loves", "Alice", false);
  w.set_relation_fact("Alice", "loves", "Bob", false);
  w.set_relation_fact("Bob", "loves", "Alice", false);
  w.set_relation_fact("Bob", "loves", "Bob", true);
  w.set_relation_fact("Alice", "hates", "Alice", false);
  w.set_relation_fact("Alice", "hates", "Bob", true);
  w.set_relation_fact("Bob", "hates", "Alice", false);
  w.set_relation_fact("Bob", "hates", "Bob", false);
  w.set_adjective_fact("Alice", "rich", true);
  w.set_adjective_fact("Alice", "silly", false);
  w.set_adjective_fact("Bob", "rich", false);
  w.set_adjective_fact("Bob", "silly", true);
  return w;
}

RelationalWorld RelationalWorld::random_world(const Lexicon &lexicon,
                                              uint64_t seed) {
  RelationalWorld w;
  auto rng = make_rng(derive_seed(seed, "world"));
  std::bernoulli_distribution coin(0.5);
  const auto nouns = lexicon.words_with(Pos::noun);
  const auto verbs = lexicon.words_with(Pos::transitive_verb);
  const auto adjectives = lexicon.words_with(Pos::adjective);
  for (const auto &s : nouns) {
    for (const auto &v : verbs) {
      for (const auto &o : nouns) w.set_relation_fact(s, v, o, coin(rng));
    }
  }
  for (const auto &noun : nouns) {
    for (const auto &adj : adjectives) w.set_adjective_fact(noun, adj, coin(rng));
  }
  return w;
}

void RelationalWorld::set_adjective_fact(const std::string &noun,
                                         const std::string &adjective,
                                         bool value) {
  adjective_facts_[{noun, adjective}] = value;
}

void RelationalWorld::set_relation_fact(const std::string &subject,
                                        const std::string &verb,
                                        const std::string &object, bool value) {
  relation_facts_[{subject, verb, object}] = value;
}

int RelationalWorld::label_for(const std::vector<std::string> &tokens,
                               const Lexicon &lexicon) const {
  if (tokens.size() == 3) {
    const LexiconEntry *mid = lexicon.find(tokens[1]);
    if (mid != nullptr && mid->pos == Pos::transitive_verb) {
      auto it = relation_facts_.find({tokens[0], tokens[1], tokens[2]});
      return it != relation_facts_.end() && it->second ? 1 : 0;
    }
    if (mid != nullptr && mid->pos == Pos::copula) {
      auto it = adjective_facts_.find({tokens[0], tokens[2]});
      return it != adjective_facts_.end() && it->second ? 1 : 0;
    }
  }
  fail(QSC_ERR_INVALID_ARGUMENT,
       "no ground-truth label for this sentence shape");
}

void LabeledCorpus::check_split() const {
  std::vector<bool> seen(entries.size(), false);
  for (size_t i : train_indices) {
    if (i >= entries.size() || seen[i]) {
      fail(QSC_ERR_INVALID_ARGUMENT, "bad train index in corpus split");
    }
    seen[i] = true;
  }
  for (size_t i : test_indices) {
    if (i >= entries.size() || seen[i]) {
      fail(QSC_ERR_INVALID_ARGUMENT, "train and test overlap or index invalid");
    }
    seen[i] = true;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    fail(QSC_ERR_INVALID_ARGUMENT, "split does not cover the corpus");
  }
  std::set<std::string> train_vocab;
  for (size_t i : train_indices) {
    for (const auto &t : entries[i].sentence.tokens) train_vocab.insert(t);
  }
  for (size_t i : test_indices) {
    for (const auto &t : entries[i].sentence.tokens) {
      if (!train_vocab.count(t)) {
        fail(QSC_ERR_INVALID_ARGUMENT,
             "test word '" + t + "' never occurs in a training sentence");
      }
    }
  }
}

LabeledCorpus build_corpus(const Lexicon &lexicon, const RelationalWorld &world) {
  LabeledCorpus corpus;
  for (Sentence &s : generate_all(lexicon, default_templates())) {
    int label = world.label_for(s.tokens, lexicon);
    corpus.entries.push_back(LabeledEntry{std::move(s), label});
  }
  corpus.train_indices.resize(corpus.entries.size());
  for (size_t i = 0; i < corpus.entries.size(); ++i) corpus.train_indices[i] = i;
  return corpus;
}

void apply_fixed_split(LabeledCorpus &corpus,
                       const std::vector<std::vector<std::string>> &test_sentences) {
  corpus.train_indices.clear();
  corpus.test_indices.clear();
  auto is_test = [&](const std::vector<std::string> &tokens) {
    return std::find(test_sentences.begin(), test_sentences.end(), tokens) !=
           test_sentences.end();
  };
  for (size_t i = 0; i < corpus.entries.size(); ++i) {
    if (is_test(corpus.entries[i].sentence.tokens)) {
      corpus.test_indices.push_back(i);
    } else {
      corpus.train_indices.push_back(i);
    }
  }
  if (corpus.test_indices.size() != test_sentences.size()) {
    fail(QSC_ERR_CONFIG, "a requested test sentence is missing from the corpus");
  }
  corpus.check_split();
}

void apply_random_split(LabeledCorpus &corpus, double test_fraction,
                        uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    fail(QSC_ERR_CONFIG, "split fraction must lie in (0, 1)");
  }
  const size_t n = corpus.entries.size();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  auto rng = make_rng(derive_seed(seed, "split"));
  std::shuffle(order.begin(), order.end(), rng);
  size_t n_test = std::min(n - 1, std::max<size_t>(1, size_t(test_fraction * n + 0.5)));
  std::set<size_t> test(order.begin(), order.begin() + n_test);
  // Coverage repair: keep moving test sentences with train-unseen words back
  // into training until the vocabulary invariant holds.
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<std::string> train_vocab;
    for (size_t i = 0; i < n; ++i) {
      if (test.count(i)) continue;
      for (const auto &t : corpus.entries[i].sentence.tokens) train_vocab.insert(t);
    }
    for (size_t i : test) {
      bool covered = std::all_of(
          corpus.entries[i].sentence.tokens.begin(),
          corpus.entries[i].sentence.tokens.end(),
          [&](const std::string &t) { return train_vocab.count(t) > 0; });
      if (!covered) {
        test.erase(i);
        changed = true;
        break;
      }
    }
  }
  if (test.empty()) {
    fail(QSC_ERR_CONFIG, "random split left no coverable test sentences");
  }
  corpus.train_indices.clear();
  corpus.test_indices.clear();
  for (size_t i = 0; i < n; ++i) {
    (test.count(i) ? corpus.test_indices : corpus.train_indices).push_back(i);
  }
  corpus.check_split();
}

void save_corpus(const LabeledCorpus &corpus, const std::string &path) {
  std::ofstream out(path);
  if (!out) fail(QSC_ERR_IO, "cannot open '" + path + "' for writing");
  std::set<size_t> test(corpus.test_indices.begin(), corpus.test_indices.end());
  for (size_t i = 0; i < corpus.entries.size(); ++i) {
    nlohmann::json j{{"tokens", corpus.entries[i].sentence.tokens},
                     {"label", corpus.entries[i].label},
                     {"split", test.count(i) ? "test" : "train"}};
    out << j.dump() << "\n";
  }
}

LabeledCorpus load_corpus(const std::string &path, const Lexicon &lexicon) {
  std::ifstream in(path);
  if (!in) fail(QSC_ERR_IO, "cannot open corpus file '" + path + "'");
  LabeledCorpus corpus;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("tokens") || !j.contains("label") ||
        !j.contains("split")) {
      fail(QSC_ERR_IO, "malformed corpus record at " + path + ":" +
                           std::to_string(line_no));
    }
    auto tokens = j.at("tokens").get<std::vector<std::string>>();
    int label = j.at("label").get<int>();
    if (label != 0 && label != 1) {
      fail(QSC_ERR_IO, "label must be 0 or 1 at " + path + ":" +
                           std::to_string(line_no));
    }
    std::string split = j.at("split").get<std::string>();
    if (split != "train" && split != "test") {
      fail(QSC_ERR_IO, "split must be train or test at " + path + ":" +
                           std::to_string(line_no));
    }
    Sentence s = parse(tokens, lexicon);
    corpus.entries.push_back(LabeledEntry{std::move(s), label});
    (split == "test" ? corpus.test_indices : corpus.train_indices)
        .push_back(corpus.entries.size() - 1);
  }
  corpus.check_split();
  return corpus;
}

void save_lexicon(const Lexicon &lexicon, const std::string &path) {
  std::ofstream out(path);
  if (!out) fail(QSC_ERR_IO, "cannot open '" + path + "' for writing");
  out << lexicon.to_json().dump(2) << "\n";
}

Lexicon load_lexicon(const std::string &path) {
  std::ifstream in(path);
  if (!in) fail(QSC_ERR_IO, "cannot open lexicon file '" + path + "'");
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(QSC_ERR_IO, "lexicon file '" + path + "' is not JSON");
  return Lexicon::from_json(j);
}

}  // namespace qsc
