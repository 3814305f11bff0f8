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

#ifndef QSC_COMPILER_HPP
#define QSC_COMPILER_HPP

#include "qsc/circuit.hpp"
#include "qsc/contraction.hpp"
#include "qsc/grammar.hpp"

namespace qsc {

// Lowering a sentence diagram to a circuit:
//   - each word box becomes a state-preparation block (IQP ansatz for
//     nouns/adjectives/verbs, a GHZ copy pattern for the relative pronoun),
//   - each cup becomes CNOT + Hadamard + two outcome-0 post-selections,
//     realizing the Bell effect up to a factor 1/sqrt(2) per qubit pair,
//   - the sentence wire carries no qubits, so a sentence circuit is fully
//     post-selected and evaluates to one amplitude.
// The accumulated powers of sqrt(2) are recorded in scalar_halves so the
// normalized amplitude matches the diagram contraction exactly.

/// Compiles a sentence diagram (dom [], cod [s] or any fully producible
/// diagram with empty dom). Parameter slots are named (word, k), so shared
/// words share parameters across sentences.
ParamCircuit compile_sentence(const Sentence &sentence, const AnsatzConfig &cfg);

/// Compiles a diagram directly; `compile_sentence` is this on the sentence's
/// diagram.
ParamCircuit compile_diagram(const Diagram &diagram, const AnsatzConfig &cfg);

/// Questions built by `build_question` compile through the same lowering and
/// reuse the constituent words' parameter slots.
ParamCircuit compile_question(const Sentence &question, const AnsatzConfig &cfg);

/// Bends noun-style preparations that feed straight into a cup onto the
/// partner wire: the block's transposed gates run on the partner qubits
/// followed by outcome-0 post-selections, removing the block's qubits. The
/// amplitude as a function of the parameters is unchanged; width never
/// grows. No-op when no reducible pattern exists.
ParamCircuit apply_qubit_reduction(const ParamCircuit &circuit);

/// The preparation block a word box compiles to, on local qubits 0..k-1.
/// Exposed so the contraction oracle can interpret words identically.
WordBlock word_block_for(const Box &box, const AnsatzConfig &cfg);

/// Word interpretation for contract_diagram: block states computed by the
/// Kronecker-product oracle, scaled to the unnormalized spider convention.
BoxInterp interp_from_params(const ParameterStore &params,
                             const AnsatzConfig &cfg);

/// Number of parameters each vocabulary word demands under the config.
int param_count_for(const LexiconEntry &entry, const AnsatzConfig &cfg);

}  // namespace qsc

#endif
