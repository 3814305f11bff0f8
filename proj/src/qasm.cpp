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

#include "qsc/qasm.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "qsc/error.hpp"

namespace qsc {

std::string to_qasm(const ParamCircuit &circuit, const ParameterStore &params,
                    const std::string &header_comment) {
  circuit.check_well_formed();
  std::ostringstream out;
  out << std::setprecision(17);
  if (!header_comment.empty()) out << "// " << header_comment << "\n";
  out << "// post-selected amplitude scale: 2^(" << circuit.scalar_halves
      << "/2)\n";
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.width << "];\n";
  int n_measured = static_cast<int>(circuit.postselect_qubits().size());
  if (n_measured > 0) out << "creg c[" << n_measured << "];\n";
  int next_bit = 0;
  for (const Gate &g : circuit.gates) {
    switch (g.kind) {
      case GateKind::x_prep:
        out << "// prep |0> on q[" << g.qubits[0] << "]\n";
        break;
      case GateKind::x_phase: {
        double a = g.param ? params.get(*g.param) : *g.angle;
        out << "u1(" << a << ") q[" << g.qubits[0] << "];";
        if (g.param) out << " // " << g.param->word << "[" << g.param->index << "]";
        out << "\n";
        break;
      }
      case GateKind::z_phase: {
        double a = g.param ? params.get(*g.param) : *g.angle;
        out << "h q[" << g.qubits[0] << "];\n";
        out << "u1(" << a << ") q[" << g.qubits[0] << "];";
        if (g.param) out << " // " << g.param->word << "[" << g.param->index << "]";
        out << "\n";
        out << "h q[" << g.qubits[0] << "];\n";
        break;
      }
      case GateKind::cnot:
        out << "cx q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
        break;
      case GateKind::hadamard:
        out << "h q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::x_measure_postselect0:
        out << "measure q[" << g.qubits[0] << "] -> c[" << next_bit << "];"
            << " // postselect c[" << next_bit << "] == 0\n";
        ++next_bit;
        break;
    }
  }
  return out.str();
}

std::string qasm_file_stem(const std::vector<std::string> &tokens) {
  std::string stem;
  for (const auto &t : tokens) {
    if (!stem.empty()) stem += '_';
    for (char c : t) {
      stem += std::isalnum(static_cast<unsigned char>(c)) ? c : '-';
    }
  }
  return stem.empty() ? "circuit" : stem;
}

}  // namespace qsc
