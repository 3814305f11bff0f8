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

#ifndef QSC_CONTRACTION_HPP
#define QSC_CONTRACTION_HPP

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qsc/circuit.hpp"
#include "qsc/diagram.hpp"

namespace qsc {

/// Dense tensor of a diagram box or of a whole diagram: a linear map from
/// `in_qubits` to `out_qubits`, laid out as data[out * 2^in + in] with the
/// first wire as the most significant bit.
struct Tensor {
  std::vector<std::complex<double>> data;
  int in_qubits = 0;
  int out_qubits = 0;

  static Tensor state(std::vector<std::complex<double>> amplitudes);
  std::complex<double> scalar() const;
};

/// Supplies tensors for word and custom boxes during contraction.
using BoxInterp = std::function<Tensor(const Box &)>;

/// Direct DisCoCat evaluation: contracts word tensors along cups and caps,
/// wire by wire, with cup pairs contracted in nested order. This is the
/// oracle the circuit compiler is checked against. Wire widths come from
/// `qubits_for`; the sentence type carries zero qubits under the scalar
/// reading, so a sentence diagram contracts to a single complex number.
Tensor contract_diagram(const Diagram &d, const BoxInterp &interp,
                        const AnsatzConfig &cfg, int qubit_budget = 16);

/// Computational-basis matrix of a single gate kind (1- or 2-qubit).
Eigen::MatrixXcd gate_matrix(GateKind kind, double angle);

/// Brute-force unitary of a gate list via Kronecker products; independent of
/// the fast statevector path, so it can serve as its oracle. Preparations
/// and post-selections are rejected here: this is for unitary blocks only.
Eigen::MatrixXcd oracle_unitary(const std::vector<Gate> &gates, int width,
                                const ParameterStore &params);

/// State an ansatz block prepares from |0...0>, as a flat amplitude vector.
std::vector<std::complex<double>> oracle_block_state(
    const std::vector<Gate> &gates, int width, const ParameterStore &params);

}  // namespace qsc

#endif
