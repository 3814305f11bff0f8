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

#include "qsc/density.hpp"

#include <sstream>

#include "qsc/error.hpp"

namespace qsc {

namespace {
constexpr double kHermitianTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kSupportTol = 1e-10;
}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    fail(QSC_ERR_DIMENSION_MISMATCH, "density matrix must be square");
  }
  double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    fail(QSC_ERR_INVALID_ARGUMENT, "density matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_);
  if (solver.eigenvalues().minCoeff() < -kPsdTol) {
    fail(QSC_ERR_INVALID_ARGUMENT, "density matrix has a negative eigenvalue");
  }
}

DensityMatrix mix_meanings(const std::vector<Eigen::VectorXcd> &states,
                           const std::vector<double> &weights) {
  if (states.empty()) {
    fail(QSC_ERR_INVALID_ARGUMENT, "mix_meanings needs at least one state");
  }
  if (!weights.empty() && weights.size() != states.size()) {
    fail(QSC_ERR_DIMENSION_MISMATCH, "weight count does not match state count");
  }
  const Eigen::Index dim = states[0].size();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() != dim) {
      fail(QSC_ERR_DIMENSION_MISMATCH, "meaning vectors differ in dimension");
    }
    if (std::abs(states[i].norm() - 1.0) > 1e-9) {
      fail(QSC_ERR_INVALID_ARGUMENT, "meaning vectors must be unit vectors");
    }
    double w = weights.empty() ? 1.0 : weights[i];
    if (w < 0) fail(QSC_ERR_INVALID_ARGUMENT, "weights must be nonnegative");
    sum += w * (states[i] * states[i].adjoint());
  }
  return DensityMatrix(std::move(sum));
}

bool is_hyponym(const DensityMatrix &a, const DensityMatrix &b) {
  if (a.dimension() != b.dimension()) {
    fail(QSC_ERR_DIMENSION_MISMATCH, "density matrices differ in dimension");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(b.matrix());
  const Eigen::Index dim = b.dimension();
  Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (solver.eigenvalues()(i) > kSupportTol) {
      Eigen::VectorXcd v = solver.eigenvectors().col(i);
      projector += v * v.adjoint();
    }
  }
  Eigen::MatrixXcd complement =
      Eigen::MatrixXcd::Identity(dim, dim) - projector;
  double residual = (complement * a.matrix() * complement).norm();
  return residual <= kSupportTol;
}

Eigen::VectorXcd basis_state(int dimension, int index) {
  if (index < 0 || index >= dimension) {
    fail(QSC_ERR_DIMENSION_MISMATCH, "basis index outside dimension");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dimension);
  v(index) = 1.0;
  return v;
}

Eigen::VectorXcd plus_state(int dimension) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dimension);
  v(0) = 1.0 / std::sqrt(2.0);
  v(1) = 1.0 / std::sqrt(2.0);
  return v;
}

Eigen::VectorXcd minus_state(int dimension) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dimension);
  v(0) = 1.0 / std::sqrt(2.0);
  v(1) = -1.0 / std::sqrt(2.0);
  return v;
}

std::string hyponymy_demo() {
  const int d = 4;
  struct Named {
    std::string name;
    DensityMatrix rho;
  };
  std::vector<Named> words;
  words.push_back({"lion", mix_meanings({basis_state(d, 0)})});
  words.push_back({"tiger", mix_meanings({plus_state(d)})});
  words.push_back({"cheetah", mix_meanings({minus_state(d)})});
  words.push_back({"big cat", mix_meanings({basis_state(d, 0), basis_state(d, 1)})});
  words.push_back({"mammal", mix_meanings({basis_state(d, 0), basis_state(d, 1),
                                           basis_state(d, 2)})});
  words.push_back({"vertebrate",
                   mix_meanings({basis_state(d, 0), basis_state(d, 1),
                                 basis_state(d, 2), basis_state(d, 3)})});
  std::ostringstream out;
  out << "hyponymy (row <= column?)\n";
  out << "            ";
  for (const auto &w : words) out << w.name << "  ";
  out << "\n";
  for (const auto &a : words) {
    out << a.name;
    for (size_t i = a.name.size(); i < 12; ++i) out << ' ';
    for (const auto &b : words) {
      bool yes = is_hyponym(a.rho, b.rho);
      out << (yes ? "yes" : " . ");
      for (size_t i = 3; i < b.name.size() + 2; ++i) out << ' ';
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace qsc
