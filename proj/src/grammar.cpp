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

#include "qsc/grammar.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include <nlohmann/json.hpp>

#include "qsc/error.hpp"

namespace qsc {

std::string to_string(Pos pos) {
  switch (pos) {
    case Pos::noun: return "noun";
    case Pos::transitive_verb: return "transitive_verb";
    case Pos::copula: return "copula";
    case Pos::adjective: return "adjective";
    case Pos::relative_pronoun: return "relative_pronoun";
  }
  return "?";
}

Pos pos_from_string(const std::string &s) {
  if (s == "noun") return Pos::noun;
  if (s == "transitive_verb") return Pos::transitive_verb;
  if (s == "copula") return Pos::copula;
  if (s == "adjective") return Pos::adjective;
  if (s == "relative_pronoun") return Pos::relative_pronoun;
  fail(QSC_ERR_INVALID_ARGUMENT, "unknown part of speech '" + s + "'");
}

TypeList pregroup_type_for(Pos pos) {
  const BasicType n = noun_type();
  const BasicType s = sentence_type();
  switch (pos) {
    case Pos::noun:
    case Pos::adjective:
      return {n};
    case Pos::transitive_verb:
    case Pos::copula:
      return {n.right_adjoint(), s, n.left_adjoint()};
    case Pos::relative_pronoun:
      return {n.right_adjoint(), n, s.left_adjoint(), n};
  }
  fail(QSC_ERR_INVALID_ARGUMENT, "unknown part of speech");
}

void Lexicon::add(const std::string &word, Pos pos) {
  if (find(word) != nullptr) {
    fail(QSC_ERR_INVALID_ARGUMENT, "duplicate lexicon entry '" + word + "'");
  }
  entries_.push_back(LexiconEntry{word, pos, pregroup_type_for(pos)});
}

const LexiconEntry *Lexicon::find(const std::string &word) const {
  for (const LexiconEntry &e : entries_) {
    if (e.word == word) return &e;
  }
  return nullptr;
}

std::vector<std::string> Lexicon::words_with(Pos pos) const {
  std::vector<std::string> out;
  for (const LexiconEntry &e : entries_) {
    if (e.pos == pos) out.push_back(e.word);
  }
  return out;
}

Lexicon Lexicon::toy() {
  Lexicon lex;
  lex.add("Alice", Pos::noun);
  lex.add("Bob", Pos::noun);
  lex.add("loves", Pos::transitive_verb);
  lex.add("hates", Pos::transitive_verb);
  lex.add("is", Pos::copula);
  lex.add("rich", Pos::adjective);
  lex.add("silly", Pos::adjective);
  lex.add("who", Pos::relative_pronoun);
  return lex;
}

nlohmann::json Lexicon::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const LexiconEntry &e : entries_) {
    j.push_back({{"word", e.word}, {"pos", to_string(e.pos)}});
  }
  return j;
}

Lexicon Lexicon::from_json(const nlohmann::json &j) {
  Lexicon lex;
  for (const auto &ej : j) {
    lex.add(ej.at("word").get<std::string>(),
            pos_from_string(ej.at("pos").get<std::string>()));
  }
  return lex;
}

namespace {

// Planar reduction of a flat basic-type sequence to a target list: finds a
// non-crossing perfect matching of contracted pairs such that the unmatched
// positions, read left to right, equal the target. Memoized over
// (span start, span end, target position); sequences here are tiny.
struct Reducer {
  const std::vector<BasicType> &flat;
  const TypeList &target;
  std::map<std::tuple<int, int, int>, int> memo;  // -1 unknown, 0 no, 1 yes

  bool full(int i, int j) { return match(i, j, int(target.size()), int(target.size())); }

  bool match(int i, int j, int t_lo, int t_hi) {
    if (i > j) return t_lo == t_hi;
    auto key = std::make_tuple(i, j, t_lo);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second == 1;
    bool ok = false;
    if (t_lo < t_hi && flat[i] == target[t_lo] &&
        match(i + 1, j, t_lo + 1, t_hi)) {
      ok = true;
    }
    if (!ok) {
      for (int k = i + 1; k <= j; ++k) {
        if (!contracts(flat[i], flat[k])) continue;
        if (match(i + 1, k - 1, int(target.size()), int(target.size())) &&
            match(k + 1, j, t_lo, t_hi)) {
          ok = true;
          break;
        }
      }
    }
    memo[key] = ok ? 1 : 0;
    return ok;
  }

  // Reconstructs the canonical matching (leftmost choices first).
  void collect(int i, int j, int t_lo, int t_hi,
               std::vector<std::pair<int, int>> &pairs) {
    if (i > j) return;
    if (t_lo < t_hi && flat[i] == target[t_lo] &&
        match(i + 1, j, t_lo + 1, t_hi)) {
      collect(i + 1, j, t_lo + 1, t_hi, pairs);
      return;
    }
    for (int k = i + 1; k <= j; ++k) {
      if (!contracts(flat[i], flat[k])) continue;
      if (match(i + 1, k - 1, int(target.size()), int(target.size())) &&
          match(k + 1, j, t_lo, t_hi)) {
        pairs.emplace_back(i, k);
        collect(i + 1, k - 1, int(target.size()), int(target.size()), pairs);
        collect(k + 1, j, t_lo, t_hi, pairs);
        return;
      }
    }
    fail(QSC_ERR_INTERNAL, "reduction reconstruction diverged from the check");
  }
};

// Greedy maximal reduction used only for error reporting: contracts adjacent
// pairs until stuck and returns what remains.
TypeList stuck_types(std::vector<BasicType> flat) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < flat.size(); ++i) {
      if (contracts(flat[i], flat[i + 1])) {
        flat.erase(flat.begin() + i, flat.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return flat;
}

struct ParsedWords {
  std::vector<const LexiconEntry *> entries;
  std::vector<BasicType> flat;
  std::vector<int> word_of_position;
};

ParsedWords look_up(const std::vector<std::string> &tokens,
                    const Lexicon &lexicon) {
  ParsedWords out;
  for (size_t w = 0; w < tokens.size(); ++w) {
    const LexiconEntry *e = lexicon.find(tokens[w]);
    if (e == nullptr) {
      fail(QSC_ERR_UNKNOWN_WORD, "unknown word '" + tokens[w] + "'");
    }
    out.entries.push_back(e);
    for (const BasicType &t : e->pregroup_type) {
      out.flat.push_back(t);
      out.word_of_position.push_back(int(w));
    }
  }
  return out;
}

Diagram diagram_from_matching(const std::vector<std::string> &tokens,
                              const ParsedWords &words,
                              const std::vector<std::pair<int, int>> &pairs) {
  Diagram d = Diagram::identity({});
  for (size_t w = 0; w < tokens.size(); ++w) {
    d = d.tensor(Diagram::word(tokens[w], words.entries[w]->pregroup_type));
  }
  // Apply cups innermost-first; a non-crossing matching always exposes an
  // adjacent pair on the shrinking frontier.
  std::vector<int> open;  // flat positions still on the frontier
  for (size_t i = 0; i < words.flat.size(); ++i) open.push_back(int(i));
  std::vector<std::pair<int, int>> remaining = pairs;
  while (!remaining.empty()) {
    bool advanced = false;
    for (size_t r = 0; r < remaining.size(); ++r) {
      auto [a, b] = remaining[r];
      auto ia = std::find(open.begin(), open.end(), a);
      auto ib = std::find(open.begin(), open.end(), b);
      if (ia == open.end() || ib == open.end() || ib != ia + 1) continue;
      size_t offset = size_t(ia - open.begin());
      const BasicType &ta = words.flat[a];
      const BasicType &tb = words.flat[b];
      const BasicType &base = ta.adjoint >= 0 ? ta : tb;
      Box cup_box{"cup(" + to_string(base) + ")", {ta, tb}, {}, BoxKind::cup};
      TypeList cod = d.cod();
      TypeList left(cod.begin(), cod.begin() + offset);
      TypeList right(cod.begin() + offset + 2, cod.end());
      Diagram step = Diagram::identity(left)
                         .tensor(Diagram::from_box(cup_box))
                         .tensor(Diagram::identity(right));
      d = d.then(step);
      open.erase(open.begin() + offset, open.begin() + offset + 2);
      remaining.erase(remaining.begin() + r);
      advanced = true;
      break;
    }
    if (!advanced) {
      fail(QSC_ERR_INTERNAL, "matching was not planar");
    }
  }
  return d;
}

Diagram parse_to_target(const std::vector<std::string> &tokens,
                        const Lexicon &lexicon, const TypeList &target) {
  if (tokens.empty()) {
    fail(QSC_ERR_NO_REDUCTION, "empty token sequence");
  }
  ParsedWords words = look_up(tokens, lexicon);
  Reducer reducer{words.flat, target, {}};
  if (!reducer.match(0, int(words.flat.size()) - 1, 0, int(target.size()))) {
    std::string sentence;
    for (const auto &t : tokens) sentence += (sentence.empty() ? "" : " ") + t;
    fail(QSC_ERR_NO_REDUCTION,
         "'" + sentence + "' does not reduce to " + to_string(target) +
             "; stuck at " + to_string(stuck_types(words.flat)));
  }
  std::vector<std::pair<int, int>> pairs;
  reducer.collect(0, int(words.flat.size()) - 1, 0, int(target.size()), pairs);
  return diagram_from_matching(tokens, words, pairs);
}

}  // namespace

Sentence parse(const std::vector<std::string> &tokens, const Lexicon &lexicon) {
  Diagram d = parse_to_target(tokens, lexicon, {sentence_type()});
  return Sentence{tokens, std::move(d)};
}

NounPhrase parse_noun_phrase(const std::vector<std::string> &tokens,
                             const Lexicon &lexicon) {
  Diagram d = parse_to_target(tokens, lexicon, {noun_type()});
  return NounPhrase{tokens, std::move(d)};
}

std::vector<Template> default_templates() {
  return {{Pos::noun, Pos::transitive_verb, Pos::noun},
          {Pos::noun, Pos::copula, Pos::adjective}};
}

std::vector<Sentence> generate_all(const Lexicon &lexicon,
                                   const std::vector<Template> &templates) {
  std::vector<Sentence> out;
  for (const Template &tmpl : templates) {
    std::vector<std::vector<std::string>> slots;
    for (Pos pos : tmpl) slots.push_back(lexicon.words_with(pos));
    if (std::any_of(slots.begin(), slots.end(),
                    [](const auto &s) { return s.empty(); })) {
      continue;
    }
    std::vector<size_t> idx(slots.size(), 0);
    bool done = false;
    while (!done) {
      std::vector<std::string> tokens;
      for (size_t i = 0; i < slots.size(); ++i) tokens.push_back(slots[i][idx[i]]);
      out.push_back(parse(tokens, lexicon));
      size_t pos = slots.size();
      while (pos > 0) {
        --pos;
        if (++idx[pos] < slots[pos].size()) break;
        idx[pos] = 0;
        if (pos == 0) done = true;
      }
    }
  }
  return out;
}

Sentence build_question(const NounPhrase &subject, const std::string &verb,
                        const NounPhrase &object, const Lexicon &lexicon) {
  const BasicType n = noun_type();
  if (!(subject.diagram.cod() == TypeList{n}) ||
      !(object.diagram.cod() == TypeList{n})) {
    fail(QSC_ERR_TYPE_MISMATCH, "question clauses must be typed [n]");
  }
  const LexiconEntry *v = lexicon.find(verb);
  if (v == nullptr) fail(QSC_ERR_UNKNOWN_WORD, "unknown word '" + verb + "'");
  if (v->pos != Pos::transitive_verb && v->pos != Pos::copula) {
    fail(QSC_ERR_TYPE_MISMATCH, "'" + verb + "' is not a verb");
  }
  Diagram body = subject.diagram
                     .tensor(Diagram::word(verb, v->pregroup_type))
                     .tensor(object.diagram);
  const BasicType s = sentence_type();
  Diagram subject_cup =
      Diagram::cup(n, Side::right)
          .tensor(Diagram::identity({s, n.left_adjoint(), n}));
  Diagram object_cup = Diagram::identity({s}).tensor(Diagram::cup(n, Side::left));
  Diagram full = body.then(subject_cup).then(object_cup);
  std::vector<std::string> tokens = subject.tokens;
  tokens.push_back(verb);
  tokens.insert(tokens.end(), object.tokens.begin(), object.tokens.end());
  return Sentence{std::move(tokens), std::move(full)};
}

}  // namespace qsc
