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

#ifndef QSC_SIMULATOR_HPP
#define QSC_SIMULATOR_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "qsc/circuit.hpp"

namespace qsc {

using cdouble = std::complex<double>;

/// Dense statevector over `width` qubits; qubit 0 is the most significant
/// index bit, matching Kronecker-product order of wire lists.
class StateVector {
 public:
  explicit StateVector(int width);

  int width() const { return width_; }
  size_t size() const { return amplitudes_.size(); }
  cdouble &operator[](size_t i) { return amplitudes_[i]; }
  const cdouble &operator[](size_t i) const { return amplitudes_[i]; }
  const std::vector<cdouble> &amplitudes() const { return amplitudes_; }

  double norm_squared() const;

  void apply_single(int qubit, const cdouble u[4]);
  void apply_hadamard(int qubit);
  void apply_phase(int qubit, double angle);  // diag(1, e^{ia})
  void apply_cnot(int control, int target);
  /// Projects the qubit onto |outcome> without renormalizing.
  void project(int qubit, int outcome);

 private:
  int width_;
  std::vector<cdouble> amplitudes_;
};

struct EvalResult {
  cdouble amplitude;             // normalized by the circuit's global scalar
  double success_probability;    // squared norm surviving post-selection
  double truth_value;            // |amplitude|^2 clamped to [0, 1]
  bool zero_success = false;     // set by `sample` when no shot survives
};

struct SimOptions {
  int qubit_budget = 16;
};

/// Runs the circuit and returns the final (unrenormalized) state together
/// with the cumulative post-selection success probability.
struct RunOutput {
  StateVector state;
  double success_probability;
};
RunOutput run_circuit(const ParamCircuit &circuit, const ParameterStore &params,
                      const SimOptions &options = {});

/// Exact evaluation of a fully post-selected (scalar) circuit.
EvalResult evaluate(const ParamCircuit &circuit, const ParameterStore &params,
                    const SimOptions &options = {});

/// Shot-based estimate: draws `shots` Bernoulli outcomes at the exact
/// post-selection success probability and rescales the surviving fraction by
/// the circuit's parameter-independent scalar. Deterministic given the seed.
/// A run where no shot survives reports zero_success instead of failing.
EvalResult sample(const ParamCircuit &circuit, const ParameterStore &params,
                  uint64_t shots, uint64_t seed, const SimOptions &options = {});

}  // namespace qsc

#endif
