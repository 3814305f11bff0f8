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

#include "qsc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "qsc/error.hpp"

namespace qsc {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::x_prep: return "x_prep";
    case GateKind::x_phase: return "x_phase";
    case GateKind::z_phase: return "z_phase";
    case GateKind::cnot: return "cnot";
    case GateKind::hadamard: return "hadamard";
    case GateKind::x_measure_postselect0: return "x_measure_postselect0";
  }
  return "?";
}

double ParameterStore::get(const ParamRef &ref) const {
  auto it = params_.find(ref.word);
  if (it == params_.end() || ref.index < 0 ||
      static_cast<size_t>(ref.index) >= it->second.size()) {
    fail(QSC_ERR_UNBOUND_PARAMETER,
         "unbound parameter slot " + ref.word + "[" + std::to_string(ref.index) + "]");
  }
  return it->second[ref.index];
}

void ParameterStore::set_vector(const std::string &word, std::vector<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      fail(QSC_ERR_INVALID_ARGUMENT, "non-finite parameter for word '" + word + "'");
    }
  }
  params_[word] = std::move(values);
}

bool ParameterStore::has_word(const std::string &word) const {
  return params_.count(word) > 0;
}

const std::vector<double> &ParameterStore::vector(const std::string &word) const {
  auto it = params_.find(word);
  if (it == params_.end()) {
    fail(QSC_ERR_UNBOUND_PARAMETER, "no parameters for word '" + word + "'");
  }
  return it->second;
}

std::vector<double> ParameterStore::flatten() const {
  std::vector<double> flat;
  for (const auto &[word, vec] : params_) {
    flat.insert(flat.end(), vec.begin(), vec.end());
  }
  return flat;
}

void ParameterStore::unflatten(const std::vector<double> &flat) {
  size_t pos = 0;
  for (auto &[word, vec] : params_) {
    if (pos + vec.size() > flat.size()) {
      fail(QSC_ERR_INVALID_ARGUMENT, "flattened parameter vector too short");
    }
    std::copy(flat.begin() + pos, flat.begin() + pos + vec.size(), vec.begin());
    pos += vec.size();
  }
  if (pos != flat.size()) {
    fail(QSC_ERR_INVALID_ARGUMENT, "flattened parameter vector too long");
  }
}

size_t ParameterStore::size() const {
  size_t n = 0;
  for (const auto &[word, vec] : params_) n += vec.size();
  return n;
}

nlohmann::json ParameterStore::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto &[word, vec] : params_) j[word] = vec;
  return j;
}

ParameterStore ParameterStore::from_json(const nlohmann::json &j) {
  ParameterStore store;
  for (auto it = j.begin(); it != j.end(); ++it) {
    store.set_vector(it.key(), it.value().get<std::vector<double>>());
  }
  return store;
}

std::vector<int> ParamCircuit::postselect_qubits() const {
  std::vector<int> qs;
  for (const Gate &g : gates) {
    if (g.kind == GateKind::x_measure_postselect0) qs.push_back(g.qubits[0]);
  }
  return qs;
}

std::vector<ParamRef> ParamCircuit::parameter_slots() const {
  std::vector<ParamRef> slots;
  for (const Gate &g : gates) {
    if (g.param) slots.push_back(*g.param);
  }
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  return slots;
}

void ParamCircuit::check_well_formed() const {
  std::vector<bool> dead(width, false);
  for (const Gate &g : gates) {
    if (g.qubits.empty() || g.qubits.size() > 2) {
      fail(QSC_ERR_INVALID_ARGUMENT, "gate with bad qubit count");
    }
    std::set<int> distinct(g.qubits.begin(), g.qubits.end());
    if (distinct.size() != g.qubits.size()) {
      fail(QSC_ERR_INVALID_ARGUMENT, "gate with repeated qubit");
    }
    for (int q : g.qubits) {
      if (q < 0 || q >= width) {
        fail(QSC_ERR_INVALID_ARGUMENT, "gate qubit outside circuit width");
      }
      if (dead[q]) {
        fail(QSC_ERR_INVALID_ARGUMENT,
             "qubit " + std::to_string(q) + " used after post-selection");
      }
    }
    bool needs_angle = g.kind == GateKind::x_phase || g.kind == GateKind::z_phase;
    if (needs_angle == !(g.angle.has_value() || g.param.has_value())) {
      fail(QSC_ERR_INVALID_ARGUMENT, "parameter slot mismatch on " + to_string(g.kind));
    }
    if (g.angle.has_value() && g.param.has_value()) {
      fail(QSC_ERR_INVALID_ARGUMENT, "gate carries both literal and symbolic angle");
    }
    if (g.kind == GateKind::x_measure_postselect0) dead[g.qubits[0]] = true;
  }
  for (int q : output_wires) {
    if (q < 0 || q >= width || dead[q]) {
      fail(QSC_ERR_INVALID_ARGUMENT, "output wire measured or out of range");
    }
  }
}

int iqp_param_count(int wire_count, int layers) {
  if (wire_count <= 0 || layers <= 0) return 0;
  return wire_count == 1 ? layers : layers * (2 * wire_count - 1);
}

std::vector<Gate> iqp_block(const std::string &word,
                            const std::vector<int> &qubits, int layers,
                            int &next_slot) {
  if (qubits.empty()) return {};
  if (layers < 1) {
    fail(QSC_ERR_INVALID_ARGUMENT, "iqp_block requires layers >= 1");
  }
  std::vector<Gate> gates;
  for (int layer = 0; layer < layers; ++layer) {
    for (int q : qubits) gates.push_back(Gate::h(q));
    for (int q : qubits) {
      gates.push_back(Gate::xphase(q, ParamRef{word, next_slot++}));
    }
    for (size_t i = 0; i + 1 < qubits.size(); ++i) {
      // diag(1, e^{ia}, e^{ia}, 1) on the pair: entangling but diagonal.
      gates.push_back(Gate::cx(qubits[i], qubits[i + 1]));
      gates.push_back(Gate::xphase(qubits[i + 1], ParamRef{word, next_slot++}));
      gates.push_back(Gate::cx(qubits[i], qubits[i + 1]));
    }
  }
  return gates;
}

}  // namespace qsc
