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

#ifndef QSC_GRAMMAR_HPP
#define QSC_GRAMMAR_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qsc/diagram.hpp"

namespace qsc {

enum class Pos { noun, transitive_verb, copula, adjective, relative_pronoun };

std::string to_string(Pos pos);
Pos pos_from_string(const std::string &s);

/// Pregroup types of the toy fragment. The transitive verb and the copula
/// take a noun on each side (n.r s n.l); predicative adjectives are typed as
/// bare noun states so that "Bob is silly" reduces to s; the relative
/// pronoun takes the head noun on its left, emits the modified noun, and
/// consumes the clause's sentence wire (n.r n s.l n).
TypeList pregroup_type_for(Pos pos);

struct LexiconEntry {
  std::string word;
  Pos pos;
  TypeList pregroup_type;
};

class Lexicon {
 public:
  void add(const std::string &word, Pos pos);
  const LexiconEntry *find(const std::string &word) const;
  const std::vector<LexiconEntry> &entries() const { return entries_; }
  std::vector<std::string> words_with(Pos pos) const;

  /// The experiment vocabulary: Alice, Bob, loves, hates, is, rich, silly
  /// and the relative pronoun who.
  static Lexicon toy();

  nlohmann::json to_json() const;
  static Lexicon from_json(const nlohmann::json &j);

 private:
  std::vector<LexiconEntry> entries_;
};

struct Sentence {
  std::vector<std::string> tokens;
  Diagram diagram;  // dom [], cod [s]
};

struct NounPhrase {
  std::vector<std::string> tokens;
  Diagram diagram;  // dom [], cod [n]
};

/// Parses a token sequence into its sentence diagram: words tensored in
/// token order, then cups in nested order. Fails with UnknownWord for
/// out-of-lexicon tokens and NoReduction (reporting the stuck type list)
/// when the type sequence does not reduce to s.
Sentence parse(const std::vector<std::string> &tokens, const Lexicon &lexicon);

/// Same machinery with target type n, for relative-clause fragments like
/// "Bob who is silly".
NounPhrase parse_noun_phrase(const std::vector<std::string> &tokens,
                             const Lexicon &lexicon);

/// A sentence template as a part-of-speech pattern.
using Template = std::vector<Pos>;

std::vector<Template> default_templates();

/// Every instantiation of the templates over the lexicon, in deterministic
/// order; each sentence is parsed and therefore well-typed by construction.
std::vector<Sentence> generate_all(const Lexicon &lexicon,
                                   const std::vector<Template> &templates);

/// Composes "subject-clause verb object-clause" into one question diagram,
/// e.g. "Bob who is silly" + loves + "Alice who is rich".
Sentence build_question(const NounPhrase &subject, const std::string &verb,
                        const NounPhrase &object, const Lexicon &lexicon);

}  // namespace qsc

#endif
