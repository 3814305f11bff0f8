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

#ifndef QSC_ZX_HPP
#define QSC_ZX_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "qsc/circuit.hpp"

namespace qsc::zx {

// Open graphs of phased spiders. Boundary ports are explicit degree-1 nodes
// so that bare wires (an input attached directly to an output) need no
// special casing. Spiders are interpreted the standard way:
//   Z(a) = |0..0><0..0| + e^{ia} |1..1><1..1|
//   X(a) = the same map conjugated by Hadamards on every leg
// with no sqrt(2) normalization factors; semantic equalities are asserted up
// to one global scalar.

enum class NodeKind { z_spider, x_spider, boundary_in, boundary_out };

struct Node {
  NodeKind kind = NodeKind::z_spider;
  double phase = 0.0;  // radians, normalized to [0, 2pi)
  bool alive = true;
};

enum class EdgeKind { plain, hadamard };

struct Edge {
  int a = 0;
  int b = 0;
  EdgeKind kind = EdgeKind::plain;
};

class ZxGraph {
 public:
  int add_spider(NodeKind color, double phase);
  int add_input();
  int add_output();
  void add_edge(int a, int b, EdgeKind kind = EdgeKind::plain);

  const std::vector<Node> &nodes() const { return nodes_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<int> &inputs() const { return inputs_; }
  const std::vector<int> &outputs() const { return outputs_; }

  int degree(int node) const;
  size_t live_spider_count() const;

  /// Sequential composition: feeds this graph's outputs into g's inputs.
  ZxGraph compose(const ZxGraph &g) const;

  nlohmann::json to_json() const;
  static ZxGraph from_json(const nlohmann::json &j);

  // Drops plain self-loops and converts Hadamard self-loops into pi phase
  // flips (both sound up to global scalar). Called by the rewrites.
  void normalize_self_loops();

 private:
  friend ZxGraph fuse_spiders(ZxGraph g);
  friend ZxGraph remove_identity_spiders(ZxGraph g);

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<int> inputs_;
  std::vector<int> outputs_;
};

/// Fuses same-color spiders joined by plain edges until none remain; phases
/// add modulo 2pi. Semantics-preserving up to global scalar.
ZxGraph fuse_spiders(ZxGraph g);

/// Replaces every degree-2 phase-0 spider by a wire.
ZxGraph remove_identity_spiders(ZxGraph g);

/// The CNOT gate as two spiders: Z(0) on the control wire, X(0) on the
/// target wire, one plain edge between them.
ZxGraph cnot_from_spiders();

/// Translation of a circuit gate into its spider form.
ZxGraph gate_to_zx(const Gate &gate);

/// Extracts a gate list from a circuit-like graph (compositions of the five
/// translation-table primitives plus Hadamard wires). Fails with
/// NotCircuitLike outside that fragment.
std::vector<Gate> zx_to_gates(const ZxGraph &g);

/// Dense linear map of the graph: a 2^|outputs| x 2^|inputs| matrix obtained
/// by brute-force contraction. Fails with TooLarge beyond the dense budget.
Eigen::MatrixXcd semantics(const ZxGraph &g);

/// Phase arithmetic modulo 2pi with tolerance 1e-12 against the boundaries.
double normalize_phase(double phase);
bool phase_is_zero(double phase);

}  // namespace qsc::zx

#endif
