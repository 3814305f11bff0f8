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

#ifndef QSC_ERROR_HPP
#define QSC_ERROR_HPP

#include <stdexcept>
#include <string>

#include "qsc/qsc.h"

namespace qsc {

/// Exception type used across the library. Carries the qsc_status code the
/// C API reports for it.
class Error : public std::runtime_error {
 public:
  Error(qsc_status code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  qsc_status code() const { return code_; }

 private:
  qsc_status code_;
};

[[noreturn]] inline void fail(qsc_status code, const std::string &message) {
  throw Error(code, message);
}

}  // namespace qsc

#endif
