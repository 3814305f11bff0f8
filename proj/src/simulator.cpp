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

#include "qsc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsc/error.hpp"
#include "qsc/rng.hpp"

namespace qsc {

namespace {
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

StateVector::StateVector(int width)
    : width_(width), amplitudes_(size_t(1) << width, cdouble(0.0, 0.0)) {
  amplitudes_[0] = 1.0;
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const cdouble &a : amplitudes_) s += std::norm(a);
  return s;
}

void StateVector::apply_single(int qubit, const cdouble u[4]) {
  const size_t n = amplitudes_.size();
  const size_t bit = size_t(1) << (width_ - 1 - qubit);
  for (size_t i = 0; i < n; ++i) {
    if (i & bit) continue;
    cdouble a0 = amplitudes_[i];
    cdouble a1 = amplitudes_[i | bit];
    amplitudes_[i] = u[0] * a0 + u[1] * a1;
    amplitudes_[i | bit] = u[2] * a0 + u[3] * a1;
  }
}

void StateVector::apply_hadamard(int qubit) {
  const cdouble u[4] = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
  apply_single(qubit, u);
}

void StateVector::apply_phase(int qubit, double angle) {
  const size_t bit = size_t(1) << (width_ - 1 - qubit);
  const cdouble phase = std::polar(1.0, angle);
  for (size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & bit) amplitudes_[i] *= phase;
  }
}

void StateVector::apply_cnot(int control, int target) {
  const size_t cbit = size_t(1) << (width_ - 1 - control);
  const size_t tbit = size_t(1) << (width_ - 1 - target);
  for (size_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(amplitudes_[i], amplitudes_[i | tbit]);
    }
  }
}

void StateVector::project(int qubit, int outcome) {
  const size_t bit = size_t(1) << (width_ - 1 - qubit);
  for (size_t i = 0; i < amplitudes_.size(); ++i) {
    bool one = (i & bit) != 0;
    if (one != (outcome == 1)) amplitudes_[i] = 0.0;
  }
}

RunOutput run_circuit(const ParamCircuit &circuit, const ParameterStore &params,
                      const SimOptions &options) {
  if (circuit.width > options.qubit_budget) {
    fail(QSC_ERR_WIDTH_EXCEEDED,
         "circuit width " + std::to_string(circuit.width) +
             " exceeds the qubit budget " + std::to_string(options.qubit_budget));
  }
  circuit.check_well_formed();
  StateVector state(circuit.width);
  std::vector<bool> touched(circuit.width, false);
  for (const Gate &g : circuit.gates) {
    switch (g.kind) {
      case GateKind::x_prep:
        // Fresh qubits start in |0>; a preparation on a used qubit is a bug.
        if (touched[g.qubits[0]]) {
          fail(QSC_ERR_INVALID_ARGUMENT,
               "x_prep on already-used qubit " + std::to_string(g.qubits[0]));
        }
        break;
      case GateKind::x_phase:
        state.apply_phase(g.qubits[0], g.param ? params.get(*g.param) : *g.angle);
        break;
      case GateKind::z_phase: {
        double angle = g.param ? params.get(*g.param) : *g.angle;
        state.apply_hadamard(g.qubits[0]);
        state.apply_phase(g.qubits[0], angle);
        state.apply_hadamard(g.qubits[0]);
        break;
      }
      case GateKind::cnot:
        state.apply_cnot(g.qubits[0], g.qubits[1]);
        break;
      case GateKind::hadamard:
        state.apply_hadamard(g.qubits[0]);
        break;
      case GateKind::x_measure_postselect0:
        state.project(g.qubits[0], 0);
        break;
    }
    for (int q : g.qubits) touched[q] = true;
  }
  double success = state.norm_squared();
  return RunOutput{std::move(state), success};
}

EvalResult evaluate(const ParamCircuit &circuit, const ParameterStore &params,
                    const SimOptions &options) {
  if (!circuit.output_wires.empty()) {
    fail(QSC_ERR_NOT_SCALAR,
         "evaluate needs a fully post-selected circuit; this one has open outputs");
  }
  std::vector<int> measured = circuit.postselect_qubits();
  if (measured.size() != static_cast<size_t>(circuit.width)) {
    fail(QSC_ERR_NOT_SCALAR,
         "scalar circuit leaves qubits neither measured nor output");
  }
  RunOutput out = run_circuit(circuit, params, options);
  // All qubits are post-selected on 0, so the surviving branch is index 0.
  cdouble raw = out.state[0];
  double success = std::norm(raw);
  cdouble normalized = raw * std::pow(2.0, 0.5 * circuit.scalar_halves);
  EvalResult r;
  r.amplitude = normalized;
  r.success_probability = success;
  r.truth_value = std::clamp(std::norm(normalized), 0.0, 1.0);
  return r;
}

EvalResult sample(const ParamCircuit &circuit, const ParameterStore &params,
                  uint64_t shots, uint64_t seed, const SimOptions &options) {
  if (shots == 0) {
    fail(QSC_ERR_INVALID_ARGUMENT, "sample requires shots >= 1");
  }
  EvalResult exact = evaluate(circuit, params, options);
  double p = std::clamp(exact.success_probability, 0.0, 1.0);
  auto rng = make_rng(seed);
  std::bernoulli_distribution shot(p);
  uint64_t successes = 0;
  for (uint64_t i = 0; i < shots; ++i) {
    if (shot(rng)) ++successes;
  }
  double p_hat = static_cast<double>(successes) / static_cast<double>(shots);
  EvalResult r;
  double magnitude_sq = p_hat * std::pow(2.0, circuit.scalar_halves);
  r.amplitude = std::sqrt(magnitude_sq);  // phase is unobservable by sampling
  r.success_probability = p_hat;
  r.truth_value = std::clamp(magnitude_sq, 0.0, 1.0);
  r.zero_success = successes == 0;
  return r;
}

}  // namespace qsc
