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

#ifndef QSC_CORPUS_HPP
#define QSC_CORPUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qsc/grammar.hpp"

namespace qsc {

/// Ground truth behind the toy corpus: one bit per (noun, adjective) pair
/// and one per (subject, verb, object) triple. Labels derive from this fixed
/// relational model rather than coin flips, so held-out sentences remain
/// inferable from the training set.
class RelationalWorld {
 public:
  /// The hand-picked default world. It pins the paper's examples --
  /// (Alice loves Bob, false), (Bob is silly, true), (Alice is rich, true)
  /// -- and keeps "Bob loves Alice" false so the worked question answers
  /// false under a trained model.
  static RelationalWorld default_world();

  /// A seeded random world over the lexicon's vocabulary.
  static RelationalWorld random_world(const Lexicon &lexicon, uint64_t seed);

  void set_adjective_fact(const std::string &noun, const std::string &adjective,
                          bool value);
  void set_relation_fact(const std::string &subject, const std::string &verb,
                         const std::string &object, bool value);

  /// Truth label of a template sentence (noun-verb-noun or
  /// noun-copula-adjective); unknown facts default to false.
  int label_for(const std::vector<std::string> &tokens,
                const Lexicon &lexicon) const;

 private:
  std::map<std::pair<std::string, std::string>, bool> adjective_facts_;
  std::map<std::tuple<std::string, std::string, std::string>, bool> relation_facts_;
};

struct LabeledEntry {
  Sentence sentence;
  int label = 0;  // 0 false, 1 true
};

struct LabeledCorpus {
  std::vector<LabeledEntry> entries;
  std::vector<size_t> train_indices;
  std::vector<size_t> test_indices;

  /// Train and Test partition the corpus and every test word occurs in some
  /// training sentence; fails otherwise.
  void check_split() const;
};

/// All template sentences over the lexicon, labeled by the world.
LabeledCorpus build_corpus(const Lexicon &lexicon, const RelationalWorld &world);

/// Splits by an explicit test-sentence list (matched on tokens).
void apply_fixed_split(LabeledCorpus &corpus,
                       const std::vector<std::vector<std::string>> &test_sentences);

/// Seeded random split with vocabulary-coverage repair: test sentences whose
/// words never occur in training move back to the training side.
void apply_random_split(LabeledCorpus &corpus, double test_fraction,
                        uint64_t seed);

// Line-oriented JSON corpus records {"tokens": [...], "label": 0|1,
// "split": "train"|"test"}.
void save_corpus(const LabeledCorpus &corpus, const std::string &path);
LabeledCorpus load_corpus(const std::string &path, const Lexicon &lexicon);

void save_lexicon(const Lexicon &lexicon, const std::string &path);
Lexicon load_lexicon(const std::string &path);

}  // namespace qsc

#endif
