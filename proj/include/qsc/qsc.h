/*
 * Copyright 2026 qsc developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of libqsc: compile grammatical sentences to parameterized quantum
 * circuits, train word parameters against truth labels on a statevector
 * simulator, and answer questions with the trained model.
 *
 * All functions return a qsc_status; on failure qsc_last_error() carries a
 * human-readable message for the calling thread. Handles are opaque and must
 * be released with their matching _free function.
 */

#ifndef QSC_QSC_H
#define QSC_QSC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsc_status {
  QSC_OK = 0,
  QSC_ERR_TYPE_MISMATCH = 1,
  QSC_ERR_UNKNOWN_WORD = 2,
  QSC_ERR_NO_REDUCTION = 3,
  QSC_ERR_DIMENSION_MISMATCH = 4,
  QSC_ERR_TOO_LARGE = 5,
  QSC_ERR_UNBOUND_PARAMETER = 6,
  QSC_ERR_WIDTH_EXCEEDED = 7,
  QSC_ERR_NOT_CIRCUIT_LIKE = 8,
  QSC_ERR_NOT_SCALAR = 9,
  QSC_ERR_ZERO_SUCCESS = 10,
  QSC_ERR_UNSUPPORTED_TYPE = 11,
  QSC_ERR_CONFIG = 12,
  QSC_ERR_IO = 13,
  QSC_ERR_INVALID_ARGUMENT = 14,
  QSC_ERR_INTERNAL = 15
} qsc_status;

/* Stable name of a status code, e.g. "QSC_ERR_UNKNOWN_WORD". */
const char *qsc_status_name(qsc_status status);

/* Message of the most recent failure on this thread; empty string if none. */
const char *qsc_last_error(void);

const char *qsc_version(void);

/* Generate the toy corpus and lexicon described by the config file and write
 * them to the given paths (line-oriented JSON corpus, JSON lexicon). */
qsc_status qsc_generate(const char *config_path,
                        const char *corpus_out_path,
                        const char *lexicon_out_path);

/* Run the full experiment (generate/load -> compile -> train -> test) and
 * write report.json, model.json, loss_history.csv, checkpoints and per
 * sentence QASM exports under out_dir. seed_override < 0 keeps the config
 * seed; workers <= 0 picks a default. */
qsc_status qsc_run_experiment(const char *config_path,
                              const char *out_dir,
                              long seed_override,
                              int workers);

/* A trained model (lexicon + ansatz + learned parameters). */
typedef struct qsc_model qsc_model;

qsc_status qsc_model_open(const char *model_path, qsc_model **out_model);
void qsc_model_free(qsc_model *model);

/* Answer a question posed as a token sequence over the model vocabulary.
 * verdict is 1 (true) when the truth estimate exceeds 0.5, else 0.
 * circuit_width receives the width of the evaluated circuit; any output
 * pointer may be NULL. */
qsc_status qsc_model_ask(const qsc_model *model,
                         const char *const *tokens,
                         size_t n_tokens,
                         double *truth_estimate,
                         int *verdict,
                         int *circuit_width);

/* Export one OpenQASM 2 file per corpus sentence into out_dir. When
 * model_path is NULL, circuits are bound to seeded random parameters. */
qsc_status qsc_export_qasm(const char *config_path,
                           const char *model_path,
                           const char *out_dir);

/* Render the density-matrix hyponymy demo (the lion/tiger/cheetah chain)
 * into buf. Writes at most buf_len bytes including the terminator; *needed
 * receives the full length regardless. */
qsc_status qsc_density_demo(char *buf, size_t buf_len, size_t *needed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSC_QSC_H */
