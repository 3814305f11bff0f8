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

// Test-side oracles, independent of the implementation paths they check:
// slicing enumeration for diagram interchange, scalar-normalized matrix
// comparison for ZX rewrites, and random-structure generators.

#ifndef QSC_TESTS_ORACLES_HPP
#define QSC_TESTS_ORACLES_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsc/diagram.hpp"
#include "qsc/zx.hpp"

namespace qsc::testing {

/// Every slicing of the diagram reachable through legal interchange moves
/// (both directions), found by breadth-first search; capped to keep the
/// enumeration finite on adversarial inputs.
std::vector<Diagram> all_interchange_slicings(const Diagram &d,
                                              size_t cap = 4096);

/// A random well-typed diagram over single-wire custom boxes, for normal
/// form property tests.
Diagram random_boxes_diagram(std::mt19937_64 &rng, int n_boxes);

/// Largest-magnitude entry of m.
std::complex<double> dominant_entry(const Eigen::MatrixXcd &m);

/// True when a == scalar * b for one nonzero complex scalar, entrywise
/// within tol after dividing the scalar out.
bool equal_up_to_global_scalar(const Eigen::MatrixXcd &a,
                               const Eigen::MatrixXcd &b, double tol);

/// Random open ZX graph within the dense-contraction budget.
zx::ZxGraph random_zx_graph(std::mt19937_64 &rng, int max_spiders,
                            int max_boundary, int max_edges);

std::string source_dir();

}  // namespace qsc::testing

#endif
