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

#ifndef QSC_CIRCUIT_HPP
#define QSC_CIRCUIT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qsc/types.hpp"

namespace qsc {

// Gate kinds follow the ZX-to-circuit translation table; the matrices below
// are their action in the computational basis.
//
//   x_prep                  prepares (1, 0)^T, i.e. |0>
//   x_phase(a)              diag(1, e^{ia})
//   z_phase(a)              H . diag(1, e^{ia}) . H
//   cnot                    [[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,1,0]]
//   hadamard                H
//   x_measure_postselect0   the effect (1, 0), i.e. projection on <0|
enum class GateKind {
  x_prep,
  x_phase,
  z_phase,
  cnot,
  hadamard,
  x_measure_postselect0
};

std::string to_string(GateKind kind);

/// Names one entry of a word's parameter vector.
struct ParamRef {
  std::string word;
  int index = 0;

  bool operator==(const ParamRef &) const = default;
  auto operator<=>(const ParamRef &) const = default;
};

struct Gate {
  GateKind kind = GateKind::hadamard;
  std::vector<int> qubits;             // 1 entry, or {control, target} for cnot
  std::optional<double> angle;         // literal angle
  std::optional<ParamRef> param;       // symbolic slot; excludes `angle`

  static Gate prep(int q) { return {GateKind::x_prep, {q}, {}, {}}; }
  static Gate h(int q) { return {GateKind::hadamard, {q}, {}, {}}; }
  static Gate cx(int control, int target) {
    return {GateKind::cnot, {control, target}, {}, {}};
  }
  static Gate xphase(int q, double a) { return {GateKind::x_phase, {q}, a, {}}; }
  static Gate xphase(int q, ParamRef p) {
    return {GateKind::x_phase, {q}, {}, std::move(p)};
  }
  static Gate zphase(int q, double a) { return {GateKind::z_phase, {q}, a, {}}; }
  static Gate measure0(int q) {
    return {GateKind::x_measure_postselect0, {q}, {}, {}};
  }

  bool parameterized() const { return param.has_value(); }
  bool operator==(const Gate &) const = default;
};

/// Map from word identities to their real parameter vectors (radians).
class ParameterStore {
 public:
  ParameterStore() = default;

  double get(const ParamRef &ref) const;
  void set_vector(const std::string &word, std::vector<double> values);
  bool has_word(const std::string &word) const;
  const std::vector<double> &vector(const std::string &word) const;
  const std::map<std::string, std::vector<double>> &all() const { return params_; }

  /// Deterministic flattening: words in lexicographic order, then index.
  std::vector<double> flatten() const;
  void unflatten(const std::vector<double> &flat);
  size_t size() const;

  nlohmann::json to_json() const;
  static ParameterStore from_json(const nlohmann::json &j);

 private:
  std::map<std::string, std::vector<double>> params_;
};

struct AnsatzConfig {
  enum class Family { IQP };
  Family family = Family::IQP;
  int noun_layers = 1;       // layers per noun/adjective word box
  int verb_layers = 2;       // layers per verb/copula word box
  int qubits_per_noun = 1;   // q_n; the sentence type s always carries 0
  bool qubit_reduction = true;

  int qubits_for(const BasicType &t) const {
    return t.name == "s" ? 0 : qubits_per_noun;
  }
};

/// Records how a compiled circuit was assembled so the qubit-reduction pass
/// can rebuild it; produced by compile_sentence.
struct WordBlock {
  std::string word;
  std::vector<std::vector<int>> wire_qubits;  // one list per output wire
  std::vector<Gate> gates;                    // excludes the x_prep layer
  int scalar_halves = 0;                      // unnormalized-state factor 2^{k/2}
};

struct CupRecord {
  std::vector<int> left_qubits;
  std::vector<int> right_qubits;
};

struct CircuitLayout {
  int width = 0;
  std::vector<WordBlock> words;
  std::vector<CupRecord> cups;
  std::vector<int> output_qubits;
  bool reduced = false;
};

/// An ordered gate list over qubits with symbolic parameters and
/// post-selection markers. Scalar circuits (empty output_wires) evaluate to
/// a single amplitude; `scalar_halves` records the parameter-independent
/// global factor 2^{-scalar_halves/2} the raw amplitude carries relative to
/// the diagram contraction.
struct ParamCircuit {
  int width = 0;
  std::vector<Gate> gates;
  std::vector<int> output_wires;
  int scalar_halves = 0;
  std::optional<CircuitLayout> layout;

  std::vector<int> postselect_qubits() const;
  std::vector<ParamRef> parameter_slots() const;
  void check_well_formed() const;
};

/// IQP-style ansatz block on `wire_count` qubits: a Hadamard layer in front
/// of each repetition, then one diagonal phase per wire and a
/// nearest-neighbour entangling phase (CNOT . phase . CNOT) per adjacent
/// pair. Parameter slots are named (word, k) in emission order; the count is
/// layers * (2 * wire_count - 1) for wire_count > 1 and `layers` otherwise.
std::vector<Gate> iqp_block(const std::string &word,
                            const std::vector<int> &qubits, int layers,
                            int &next_slot);

int iqp_param_count(int wire_count, int layers);

}  // namespace qsc

#endif
