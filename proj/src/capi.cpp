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

#include "qsc/qsc.h"

#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "qsc/corpus.hpp"
#include "qsc/density.hpp"
#include "qsc/error.hpp"
#include "qsc/experiment.hpp"

namespace {

thread_local std::string g_last_error;

qsc_status run_guarded(const std::function<void()> &body) {
  try {
    body();
    g_last_error.clear();
    return QSC_OK;
  } catch (const qsc::Error &e) {
    g_last_error = e.what();
    return e.code();
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return QSC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return QSC_ERR_INTERNAL;
  }
}

qsc_status require(bool condition, const char *message) {
  if (condition) return QSC_OK;
  g_last_error = message;
  return QSC_ERR_INVALID_ARGUMENT;
}

}  // namespace

struct qsc_model {
  qsc::Model model;
};

extern "C" {

const char *qsc_status_name(qsc_status status) {
  switch (status) {
    case QSC_OK: return "QSC_OK";
    case QSC_ERR_TYPE_MISMATCH: return "QSC_ERR_TYPE_MISMATCH";
    case QSC_ERR_UNKNOWN_WORD: return "QSC_ERR_UNKNOWN_WORD";
    case QSC_ERR_NO_REDUCTION: return "QSC_ERR_NO_REDUCTION";
    case QSC_ERR_DIMENSION_MISMATCH: return "QSC_ERR_DIMENSION_MISMATCH";
    case QSC_ERR_TOO_LARGE: return "QSC_ERR_TOO_LARGE";
    case QSC_ERR_UNBOUND_PARAMETER: return "QSC_ERR_UNBOUND_PARAMETER";
    case QSC_ERR_WIDTH_EXCEEDED: return "QSC_ERR_WIDTH_EXCEEDED";
    case QSC_ERR_NOT_CIRCUIT_LIKE: return "QSC_ERR_NOT_CIRCUIT_LIKE";
    case QSC_ERR_NOT_SCALAR: return "QSC_ERR_NOT_SCALAR";
    case QSC_ERR_ZERO_SUCCESS: return "QSC_ERR_ZERO_SUCCESS";
    case QSC_ERR_UNSUPPORTED_TYPE: return "QSC_ERR_UNSUPPORTED_TYPE";
    case QSC_ERR_CONFIG: return "QSC_ERR_CONFIG";
    case QSC_ERR_IO: return "QSC_ERR_IO";
    case QSC_ERR_INVALID_ARGUMENT: return "QSC_ERR_INVALID_ARGUMENT";
    case QSC_ERR_INTERNAL: return "QSC_ERR_INTERNAL";
  }
  return "QSC_ERR_INTERNAL";
}

const char *qsc_last_error(void) { return g_last_error.c_str(); }

const char *qsc_version(void) { return "0.1.0"; }

qsc_status qsc_generate(const char *config_path, const char *corpus_out_path,
                        const char *lexicon_out_path) {
  if (qsc_status s = require(config_path && corpus_out_path && lexicon_out_path,
                             "qsc_generate: null argument");
      s != QSC_OK) {
    return s;
  }
  return run_guarded([&] {
    qsc::ExperimentConfig cfg = qsc::load_config(config_path);
    qsc::PreparedCorpus prepared = qsc::prepare_corpus(cfg);
    qsc::save_corpus(prepared.corpus, corpus_out_path);
    qsc::save_lexicon(prepared.lexicon, lexicon_out_path);
  });
}

qsc_status qsc_run_experiment(const char *config_path, const char *out_dir,
                              long seed_override, int workers) {
  if (qsc_status s = require(config_path != nullptr, "qsc_run_experiment: null config");
      s != QSC_OK) {
    return s;
  }
  return run_guarded([&] {
    qsc::ExperimentConfig cfg = qsc::load_config(config_path);
    qsc::RunOverrides overrides;
    if (seed_override >= 0) overrides.seed = uint64_t(seed_override);
    if (workers > 0) overrides.workers = workers;
    if (out_dir != nullptr && out_dir[0] != '\0') overrides.output_dir = out_dir;
    qsc::run_experiment(cfg, overrides);
  });
}

qsc_status qsc_model_open(const char *model_path, qsc_model **out_model) {
  if (qsc_status s = require(model_path && out_model, "qsc_model_open: null argument");
      s != QSC_OK) {
    return s;
  }
  *out_model = nullptr;
  return run_guarded([&] {
    *out_model = new qsc_model{qsc::Model::load(model_path)};
  });
}

void qsc_model_free(qsc_model *model) { delete model; }

qsc_status qsc_model_ask(const qsc_model *model, const char *const *tokens,
                         size_t n_tokens, double *truth_estimate, int *verdict,
                         int *circuit_width) {
  if (qsc_status s = require(model && tokens && n_tokens > 0,
                             "qsc_model_ask: null argument");
      s != QSC_OK) {
    return s;
  }
  return run_guarded([&] {
    std::vector<std::string> toks(tokens, tokens + n_tokens);
    qsc::Answer answer = qsc::ask_model(model->model, toks);
    if (truth_estimate) *truth_estimate = answer.truth_estimate;
    if (verdict) *verdict = answer.verdict ? 1 : 0;
    if (circuit_width) *circuit_width = answer.circuit_width;
  });
}

qsc_status qsc_export_qasm(const char *config_path, const char *model_path,
                           const char *out_dir) {
  if (qsc_status s = require(config_path && out_dir, "qsc_export_qasm: null argument");
      s != QSC_OK) {
    return s;
  }
  return run_guarded([&] {
    qsc::ExperimentConfig cfg = qsc::load_config(config_path);
    std::optional<qsc::Model> model;
    if (model_path != nullptr && model_path[0] != '\0') {
      model = qsc::Model::load(model_path);
    }
    qsc::export_corpus_qasm(cfg, model, out_dir);
  });
}

qsc_status qsc_density_demo(char *buf, size_t buf_len, size_t *needed) {
  return run_guarded([&] {
    std::string text = qsc::hyponymy_demo();
    if (needed) *needed = text.size() + 1;
    if (buf && buf_len > 0) {
      size_t n = std::min(buf_len - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
  });
}

}  // extern "C"
