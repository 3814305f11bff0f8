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

#ifndef QSC_QASM_HPP
#define QSC_QASM_HPP

#include <string>

#include "qsc/circuit.hpp"

namespace qsc {

/// OpenQASM 2 text for a circuit with all parameter slots bound. Post
/// selections appear as measurements with a classical-condition comment;
/// this export is write-only (there is no importer).
std::string to_qasm(const ParamCircuit &circuit, const ParameterStore &params,
                    const std::string &header_comment);

/// File-name-safe identifier for a sentence, e.g. "Alice_loves_Bob".
std::string qasm_file_stem(const std::vector<std::string> &tokens);

}  // namespace qsc

#endif
