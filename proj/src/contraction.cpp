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

#include "qsc/contraction.hpp"

#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "qsc/error.hpp"

namespace qsc {

using cvec = std::vector<std::complex<double>>;

Tensor Tensor::state(cvec amplitudes) {
  int out = 0;
  while ((size_t(1) << out) < amplitudes.size()) ++out;
  if ((size_t(1) << out) != amplitudes.size()) {
    fail(QSC_ERR_INVALID_ARGUMENT, "state length must be a power of two");
  }
  return Tensor{std::move(amplitudes), 0, out};
}

std::complex<double> Tensor::scalar() const {
  if (in_qubits != 0 || out_qubits != 0) {
    fail(QSC_ERR_INVALID_ARGUMENT, "tensor is not a scalar");
  }
  return data.at(0);
}

namespace {

size_t reverse_bits(size_t x, int bits) {
  size_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | ((x >> i) & 1);
  }
  return r;
}

// Applies a (2^out x 2^in) map to `in_bits` adjacent bits starting at
// `offset` within a flat vector over `total_bits` bits.
cvec apply_at(const cvec &v, int total_bits, int offset, int in_bits,
              int out_bits, const cvec &map) {
  int right_bits = total_bits - offset - in_bits;
  int new_total = total_bits - in_bits + out_bits;
  cvec out(size_t(1) << new_total, 0.0);
  const size_t n_left = size_t(1) << offset;
  const size_t n_right = size_t(1) << right_bits;
  const size_t n_in = size_t(1) << in_bits;
  const size_t n_out = size_t(1) << out_bits;
  for (size_t l = 0; l < n_left; ++l) {
    for (size_t xo = 0; xo < n_out; ++xo) {
      for (size_t r = 0; r < n_right; ++r) {
        std::complex<double> acc = 0.0;
        for (size_t xi = 0; xi < n_in; ++xi) {
          acc += map[xo * n_in + xi] * v[((l << in_bits | xi) << right_bits) | r];
        }
        out[((l << out_bits | xo) << right_bits) | r] = acc;
      }
    }
  }
  return out;
}

// Unnormalized Bell pair over two q-qubit wires with nested pairing: bit j
// of the second wire matches bit (q-1-j) of the first.
cvec bell_tensor(int q) {
  cvec t(size_t(1) << (2 * q), 0.0);
  for (size_t a = 0; a < (size_t(1) << q); ++a) {
    t[(a << q) | reverse_bits(a, q)] = 1.0;
  }
  return t;
}

}  // namespace

Tensor contract_diagram(const Diagram &d, const BoxInterp &interp,
                        const AnsatzConfig &cfg, int qubit_budget) {
  struct Wire {
    BasicType type;
    int qubits;
  };
  std::vector<Wire> frontier;
  int in_qubits = 0;
  for (const BasicType &t : d.dom()) {
    int q = cfg.qubits_for(t);
    frontier.push_back({t, q});
    in_qubits += q;
  }
  int active_bits = in_qubits;
  if (active_bits + in_qubits > qubit_budget) {
    fail(QSC_ERR_TOO_LARGE, "diagram exceeds the dense contraction budget");
  }
  // State over (frontier bits, input bits); starts as the identity map.
  cvec state(size_t(1) << (active_bits + in_qubits), 0.0);
  for (size_t i = 0; i < (size_t(1) << in_qubits); ++i) {
    state[(i << in_qubits) | i] = 1.0;
  }

  auto wire_bit_offset = [&](size_t wire_index) {
    int off = 0;
    for (size_t i = 0; i < wire_index; ++i) off += frontier[i].qubits;
    return off;
  };

  for (const Layer &layer : d.layers()) {
    const Box &b = layer.box;
    size_t k = layer.offset;
    int offset_bits = wire_bit_offset(k);
    int dom_bits = 0;
    for (const BasicType &t : b.dom) dom_bits += cfg.qubits_for(t);
    int cod_bits = 0;
    for (const BasicType &t : b.cod) cod_bits += cfg.qubits_for(t);
    if (active_bits - dom_bits + cod_bits + in_qubits > qubit_budget) {
      fail(QSC_ERR_TOO_LARGE, "diagram exceeds the dense contraction budget");
    }

    cvec map;
    switch (b.kind) {
      case BoxKind::word:
      case BoxKind::custom: {
        Tensor t = interp(b);
        if (t.in_qubits != dom_bits || t.out_qubits != cod_bits) {
          fail(QSC_ERR_DIMENSION_MISMATCH,
               "interpretation of box '" + b.label + "' has the wrong shape");
        }
        map = t.data;
        break;
      }
      case BoxKind::cup: {
        int q = cfg.qubits_for(b.dom[0]);
        // Effect: conjugate-free pairing <cup| as a (1 x 2^{2q}) map.
        map = bell_tensor(q);
        break;
      }
      case BoxKind::cap: {
        int q = cfg.qubits_for(b.cod[0]);
        map = bell_tensor(q);
        break;
      }
      case BoxKind::swap_wires: {
        int qa = cfg.qubits_for(b.dom[0]);
        int qb = cfg.qubits_for(b.dom[1]);
        map.assign(size_t(1) << (2 * (qa + qb)), 0.0);
        size_t n = size_t(1) << (qa + qb);
        for (size_t a = 0; a < (size_t(1) << qa); ++a) {
          for (size_t bb = 0; bb < (size_t(1) << qb); ++bb) {
            size_t in = (a << qb) | bb;
            size_t out = (bb << qa) | a;
            map[out * n + in] = 1.0;
          }
        }
        break;
      }
      case BoxKind::wire: {
        map.assign(size_t(1) << (2 * dom_bits), 0.0);
        for (size_t i = 0; i < (size_t(1) << dom_bits); ++i) {
          map[i * (size_t(1) << dom_bits) + i] = 1.0;
        }
        break;
      }
    }
    state = apply_at(state, active_bits + in_qubits, offset_bits, dom_bits,
                     cod_bits, map);
    active_bits = active_bits - dom_bits + cod_bits;

    std::vector<Wire> next(frontier.begin(), frontier.begin() + k);
    for (const BasicType &t : b.cod) next.push_back({t, cfg.qubits_for(t)});
    next.insert(next.end(), frontier.begin() + k + b.dom.size(), frontier.end());
    frontier = std::move(next);
  }

  Tensor result;
  result.in_qubits = in_qubits;
  result.out_qubits = active_bits;
  result.data = std::move(state);
  return result;
}

Eigen::MatrixXcd gate_matrix(GateKind kind, double angle) {
  using std::numbers::sqrt2;
  Eigen::MatrixXcd h(2, 2);
  h << 1 / sqrt2, 1 / sqrt2, 1 / sqrt2, -1 / sqrt2;
  switch (kind) {
    case GateKind::x_phase: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
      m(1, 1) = std::polar(1.0, angle);
      return m;
    }
    case GateKind::z_phase: {
      Eigen::MatrixXcd d = Eigen::MatrixXcd::Identity(2, 2);
      d(1, 1) = std::polar(1.0, angle);
      return h * d * h;
    }
    case GateKind::hadamard:
      return h;
    case GateKind::cnot: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return m;
    }
    case GateKind::x_prep:
    case GateKind::x_measure_postselect0:
      break;
  }
  fail(QSC_ERR_INVALID_ARGUMENT,
       "gate kind " + to_string(kind) + " has no unitary matrix");
}

Eigen::MatrixXcd oracle_unitary(const std::vector<Gate> &gates, int width,
                                const ParameterStore &params) {
  const size_t dim = size_t(1) << width;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate &g : gates) {
    if (g.kind == GateKind::x_prep || g.kind == GateKind::x_measure_postselect0) {
      fail(QSC_ERR_INVALID_ARGUMENT, "oracle_unitary handles unitary gates only");
    }
    double angle = g.param ? params.get(*g.param) : g.angle.value_or(0.0);
    Eigen::MatrixXcd small = gate_matrix(g.kind, angle);
    Eigen::MatrixXcd full;
    if (g.qubits.size() == 1) {
      int q = g.qubits[0];
      full = Eigen::MatrixXcd::Identity(1, 1);
      for (int i = 0; i < width; ++i) {
        Eigen::MatrixXcd factor =
            i == q ? small : Eigen::MatrixXcd::Identity(2, 2);
        full = Eigen::kroneckerProduct(full, factor).eval();
      }
    } else {
      // Build the two-qubit gate on arbitrary wire positions entry by entry.
      int qa = g.qubits[0], qb = g.qubits[1];
      full = Eigen::MatrixXcd::Zero(dim, dim);
      for (size_t col = 0; col < dim; ++col) {
        int ba = (col >> (width - 1 - qa)) & 1;
        int bb = (col >> (width - 1 - qb)) & 1;
        int in2 = (ba << 1) | bb;
        for (int out2 = 0; out2 < 4; ++out2) {
          std::complex<double> amp = small(out2, in2);
          if (amp == std::complex<double>(0.0, 0.0)) continue;
          size_t row = col;
          size_t mask_a = size_t(1) << (width - 1 - qa);
          size_t mask_b = size_t(1) << (width - 1 - qb);
          row = (row & ~mask_a) | (((out2 >> 1) & 1) ? mask_a : 0);
          row = (row & ~mask_b) | ((out2 & 1) ? mask_b : 0);
          full(row, col) += amp;
        }
      }
    }
    u = full * u;
  }
  return u;
}

std::vector<std::complex<double>> oracle_block_state(
    const std::vector<Gate> &gates, int width, const ParameterStore &params) {
  Eigen::MatrixXcd u = oracle_unitary(gates, width, params);
  std::vector<std::complex<double>> out(u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i) out[i] = u(i, 0);
  return out;
}

}  // namespace qsc
