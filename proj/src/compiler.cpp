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

#include "qsc/compiler.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qsc/error.hpp"

namespace qsc {

namespace {

enum class BlockShape { state, verb, relpron, bell_pair };

BlockShape classify_word(const Box &box) {
  const TypeList &cod = box.cod;
  auto is_noun_like = [](const BasicType &t) { return t.name != "s"; };
  if (cod.size() == 1 && is_noun_like(cod[0])) return BlockShape::state;
  if (cod.size() == 3 && is_noun_like(cod[0]) && cod[1] == sentence_type() &&
      is_noun_like(cod[2])) {
    return BlockShape::verb;
  }
  if (cod.size() == 4 && is_noun_like(cod[0]) && is_noun_like(cod[1]) &&
      cod[2] == sentence_type().left_adjoint() && is_noun_like(cod[3])) {
    return BlockShape::relpron;
  }
  fail(QSC_ERR_UNSUPPORTED_TYPE,
       "word '" + box.label + "' of type " + to_string(cod) +
           " lies outside the toy grammar");
}

// GHZ copy pattern realizing the relative pronoun: the incoming noun wire is
// copied onto the head-noun wire and the clause's subject wire, qubit by
// qubit; the sentence wire carries nothing. Parameterless.
WordBlock relpron_block(const Box &box, const AnsatzConfig &cfg) {
  int q = cfg.qubits_per_noun;
  WordBlock block;
  block.word = box.label;
  std::vector<int> a, b, c;
  for (int i = 0; i < q; ++i) a.push_back(i);
  for (int i = 0; i < q; ++i) b.push_back(q + i);
  for (int i = 0; i < q; ++i) c.push_back(2 * q + i);
  block.wire_qubits = {a, b, {}, c};
  for (int i = 0; i < q; ++i) {
    block.gates.push_back(Gate::h(a[i]));
    block.gates.push_back(Gate::cx(a[i], b[i]));
    block.gates.push_back(Gate::cx(a[i], c[i]));
  }
  block.scalar_halves = q;  // Sum_i |iii> carries norm sqrt(2)^q
  return block;
}

}  // namespace

WordBlock word_block_for(const Box &box, const AnsatzConfig &cfg) {
  if (!box.dom.empty()) {
    fail(QSC_ERR_UNSUPPORTED_TYPE,
         "word '" + box.label + "' is not a state box");
  }
  BlockShape shape = classify_word(box);
  if (shape == BlockShape::relpron) return relpron_block(box, cfg);

  WordBlock block;
  block.word = box.label;
  int next = 0;
  std::vector<int> all;
  for (const BasicType &t : box.cod) {
    std::vector<int> wire;
    for (int i = 0; i < cfg.qubits_for(t); ++i) wire.push_back(next++);
    all.insert(all.end(), wire.begin(), wire.end());
    block.wire_qubits.push_back(std::move(wire));
  }
  int layers = shape == BlockShape::verb ? cfg.verb_layers : cfg.noun_layers;
  int slot = 0;
  block.gates = iqp_block(box.label, all, layers, slot);
  block.scalar_halves = 0;
  return block;
}

int param_count_for(const LexiconEntry &entry, const AnsatzConfig &cfg) {
  switch (entry.pos) {
    case Pos::noun:
    case Pos::adjective:
      return iqp_param_count(cfg.qubits_per_noun, cfg.noun_layers);
    case Pos::transitive_verb:
    case Pos::copula:
      return iqp_param_count(2 * cfg.qubits_per_noun, cfg.verb_layers);
    case Pos::relative_pronoun:
      return 0;
  }
  return 0;
}

namespace {

struct OpenWire {
  BasicType type;
  std::vector<int> qubits;
  int block = -1;  // producing block index
};

CircuitLayout layout_diagram(const Diagram &diagram, const AnsatzConfig &cfg) {
  if (!diagram.dom().empty()) {
    fail(QSC_ERR_UNSUPPORTED_TYPE,
         "only closed diagrams (empty dom) compile to circuits");
  }
  CircuitLayout layout;
  std::vector<OpenWire> frontier;
  int next_qubit = 0;

  for (const Layer &layer : diagram.layers()) {
    const Box &box = layer.box;
    size_t k = layer.offset;
    switch (box.kind) {
      case BoxKind::word:
      case BoxKind::cap: {
        WordBlock block;
        if (box.kind == BoxKind::word) {
          block = word_block_for(box, cfg);
        } else {
          // A cap is an unnormalized Bell pair across its two wires.
          int q = cfg.qubits_for(box.cod[0]);
          block.word = box.label;
          std::vector<int> left, right;
          for (int i = 0; i < q; ++i) left.push_back(i);
          for (int i = 0; i < q; ++i) right.push_back(q + i);
          for (int i = 0; i < q; ++i) {
            block.gates.push_back(Gate::h(left[i]));
            block.gates.push_back(Gate::cx(left[i], right[q - 1 - i]));
          }
          block.scalar_halves = q;
          block.wire_qubits = {left, right};
        }
        // Relocate local qubit ids to fresh physical qubits.
        int local_count = 0;
        for (const auto &w : block.wire_qubits) {
          local_count += static_cast<int>(w.size());
        }
        std::vector<int> map(local_count);
        for (int i = 0; i < local_count; ++i) map[i] = next_qubit + i;
        next_qubit += local_count;
        for (auto &w : block.wire_qubits) {
          for (int &q : w) q = map[q];
        }
        for (Gate &g : block.gates) {
          for (int &q : g.qubits) q = map[q];
        }
        int block_id = static_cast<int>(layout.words.size());
        std::vector<OpenWire> created;
        for (size_t wi = 0; wi < box.cod.size(); ++wi) {
          created.push_back(OpenWire{box.cod[wi], block.wire_qubits[wi], block_id});
        }
        layout.words.push_back(std::move(block));
        frontier.insert(frontier.begin() + k, created.begin(), created.end());
        break;
      }
      case BoxKind::cup: {
        OpenWire left = frontier.at(k);
        OpenWire right = frontier.at(k + 1);
        layout.cups.push_back(CupRecord{left.qubits, right.qubits});
        frontier.erase(frontier.begin() + k, frontier.begin() + k + 2);
        break;
      }
      case BoxKind::swap_wires:
        std::swap(frontier.at(k), frontier.at(k + 1));
        break;
      case BoxKind::wire:
        break;
      case BoxKind::custom:
        fail(QSC_ERR_UNSUPPORTED_TYPE,
             "box '" + box.label + "' lies outside the toy grammar");
    }
  }
  layout.width = next_qubit;
  for (const OpenWire &w : frontier) {
    layout.output_qubits.insert(layout.output_qubits.end(), w.qubits.begin(),
                                w.qubits.end());
  }
  return layout;
}

// Owning block of a qubit list, or -1 when the qubits span blocks.
int owner_block(const CircuitLayout &layout, const std::vector<int> &qubits) {
  int owner = -1;
  for (size_t b = 0; b < layout.words.size(); ++b) {
    for (const auto &wire : layout.words[b].wire_qubits) {
      for (int q : wire) {
        if (std::find(qubits.begin(), qubits.end(), q) != qubits.end()) {
          if (owner == -1) owner = static_cast<int>(b);
          if (owner != static_cast<int>(b)) return -1;
        }
      }
    }
  }
  return owner;
}

bool block_is_single_wire(const WordBlock &block, const std::vector<int> &qubits) {
  return block.wire_qubits.size() == 1 && block.wire_qubits[0] == qubits;
}

ParamCircuit lower(const CircuitLayout &layout, bool reduce) {
  // A cup side is reducible when its qubits are exactly the single wire of
  // one preparation block; the block folds onto the partner side as its
  // transposed gate list (every gate matrix here is symmetric, so the
  // transpose is the reversed list).
  struct Reduction {
    int cup_index;
    int block_index;
    std::vector<int> block_qubits;    // in wire order
    std::vector<int> partner_qubits;  // in wire order
  };
  std::vector<Reduction> reductions;
  std::vector<bool> cup_reduced(layout.cups.size(), false);
  std::set<int> removed_blocks;
  if (reduce) {
    for (size_t ci = 0; ci < layout.cups.size(); ++ci) {
      const CupRecord &cup = layout.cups[ci];
      int left_owner = owner_block(layout, cup.left_qubits);
      int right_owner = owner_block(layout, cup.right_qubits);
      if (left_owner < 0 || right_owner < 0 || left_owner == right_owner) continue;
      bool left_ok = !removed_blocks.count(left_owner) &&
                     !removed_blocks.count(right_owner) &&
                     block_is_single_wire(layout.words[left_owner], cup.left_qubits);
      bool right_ok = !removed_blocks.count(right_owner) &&
                      !removed_blocks.count(left_owner) &&
                      block_is_single_wire(layout.words[right_owner], cup.right_qubits);
      if (right_ok) {
        reductions.push_back(Reduction{static_cast<int>(ci), right_owner,
                                       cup.right_qubits, cup.left_qubits});
        removed_blocks.insert(right_owner);
        cup_reduced[ci] = true;
      } else if (left_ok) {
        reductions.push_back(Reduction{static_cast<int>(ci), left_owner,
                                       cup.left_qubits, cup.right_qubits});
        removed_blocks.insert(left_owner);
        cup_reduced[ci] = true;
      }
    }
  }

  // Compact the surviving qubits.
  std::vector<int> qubit_map(layout.width, -1);
  int new_width = 0;
  std::vector<bool> removed_qubit(layout.width, false);
  for (const Reduction &r : reductions) {
    for (int q : r.block_qubits) removed_qubit[q] = true;
  }
  for (int q = 0; q < layout.width; ++q) {
    if (!removed_qubit[q]) qubit_map[q] = new_width++;
  }

  ParamCircuit circuit;
  circuit.width = new_width;
  circuit.scalar_halves = 0;
  auto remap = [&](int q) {
    if (qubit_map[q] < 0) {
      fail(QSC_ERR_INTERNAL, "reduced qubit referenced after removal");
    }
    return qubit_map[q];
  };

  for (size_t b = 0; b < layout.words.size(); ++b) {
    if (removed_blocks.count(static_cast<int>(b))) continue;
    const WordBlock &block = layout.words[b];
    for (const auto &wire : block.wire_qubits) {
      for (int q : wire) circuit.gates.push_back(Gate::prep(remap(q)));
    }
    for (Gate g : block.gates) {
      for (int &q : g.qubits) q = remap(q);
      circuit.gates.push_back(std::move(g));
    }
    circuit.scalar_halves += block.scalar_halves;
  }

  // Folded preparations: reversed gates on the partner wire, nested pairing,
  // then post-selection. These realize <0| U^T exactly, with no 1/sqrt(2).
  for (const Reduction &r : reductions) {
    const WordBlock &block = layout.words[r.block_index];
    const size_t k = r.block_qubits.size();
    std::vector<int> onto(k);
    for (size_t i = 0; i < k; ++i) {
      onto[i] = r.partner_qubits[k - 1 - i];  // block qubit i lands here
    }
    for (auto it = block.gates.rbegin(); it != block.gates.rend(); ++it) {
      Gate g = *it;
      for (int &q : g.qubits) {
        auto pos = std::find(r.block_qubits.begin(), r.block_qubits.end(), q);
        if (pos == r.block_qubits.end()) {
          fail(QSC_ERR_INTERNAL, "reduced block gate leaves its wire");
        }
        q = remap(onto[pos - r.block_qubits.begin()]);
      }
      circuit.gates.push_back(std::move(g));
    }
    circuit.scalar_halves += block.scalar_halves;
    for (size_t i = 0; i < k; ++i) {
      circuit.gates.push_back(Gate::measure0(remap(r.partner_qubits[i])));
    }
  }

  // Remaining cups: CNOT + H + two postselections per nested qubit pair.
  for (size_t ci = 0; ci < layout.cups.size(); ++ci) {
    if (cup_reduced[ci]) continue;
    const CupRecord &cup = layout.cups[ci];
    const size_t k = cup.left_qubits.size();
    for (size_t i = 0; i < k; ++i) {
      int a = remap(cup.left_qubits[i]);
      int b = remap(cup.right_qubits[k - 1 - i]);
      circuit.gates.push_back(Gate::cx(a, b));
      circuit.gates.push_back(Gate::h(a));
      circuit.gates.push_back(Gate::measure0(a));
      circuit.gates.push_back(Gate::measure0(b));
      circuit.scalar_halves += 1;
    }
  }

  for (int q : layout.output_qubits) circuit.output_wires.push_back(remap(q));
  CircuitLayout kept = layout;
  kept.reduced = reduce;
  circuit.layout = std::move(kept);
  circuit.check_well_formed();
  return circuit;
}

}  // namespace

ParamCircuit compile_diagram(const Diagram &diagram, const AnsatzConfig &cfg) {
  return lower(layout_diagram(diagram, cfg), false);
}

ParamCircuit compile_sentence(const Sentence &sentence, const AnsatzConfig &cfg) {
  return compile_diagram(sentence.diagram, cfg);
}

ParamCircuit compile_question(const Sentence &question, const AnsatzConfig &cfg) {
  return compile_diagram(question.diagram, cfg);
}

ParamCircuit apply_qubit_reduction(const ParamCircuit &circuit) {
  if (!circuit.layout.has_value() || circuit.layout->reduced) {
    return circuit;
  }
  return lower(*circuit.layout, true);
}

BoxInterp interp_from_params(const ParameterStore &params,
                             const AnsatzConfig &cfg) {
  return [params, cfg](const Box &box) -> Tensor {
    WordBlock block = word_block_for(box, cfg);
    int width = 0;
    for (const auto &w : block.wire_qubits) width += static_cast<int>(w.size());
    std::vector<std::complex<double>> state =
        oracle_block_state(block.gates, width, params);
    const double scale = std::pow(2.0, 0.5 * block.scalar_halves);
    for (auto &a : state) a *= scale;
    return Tensor::state(std::move(state));
  };
}

}  // namespace qsc
