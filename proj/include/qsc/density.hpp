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

#ifndef QSC_DENSITY_HPP
#define QSC_DENSITY_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qsc {

/// Hermitian positive-semidefinite word representation. Traces need not be
/// one: word hierarchies are encoded as unnormalized sums of projectors.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd matrix);

  const Eigen::MatrixXcd &matrix() const { return matrix_; }
  Eigen::Index dimension() const { return matrix_.rows(); }

 private:
  Eigen::MatrixXcd matrix_;
};

/// Ambiguity as mixing: sum of w_i |v_i><v_i| over unit vectors, all weights
/// one when omitted.
DensityMatrix mix_meanings(const std::vector<Eigen::VectorXcd> &states,
                           const std::vector<double> &weights = {});

/// Hyponymy as support containment: true iff support(a) is contained in
/// support(b), decided through the eigendecomposition of b and the Frobenius
/// norm of (I - P_b) a (I - P_b) against 1e-10.
bool is_hyponym(const DensityMatrix &a, const DensityMatrix &b);

Eigen::VectorXcd basis_state(int dimension, int index);
Eigen::VectorXcd plus_state(int dimension);   // (|0> + |1>) / sqrt(2)
Eigen::VectorXcd minus_state(int dimension);  // (|0> - |1>) / sqrt(2)

/// The lion/tiger/cheetah <= big cat <= mammal <= vertebrate chain rendered
/// as a text table of is_hyponym results.
std::string hyponymy_demo();

}  // namespace qsc

#endif
