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

#include "qsc/types.hpp"

namespace qsc {

TypeList concat(const TypeList &a, const TypeList &b) {
  TypeList out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string to_string(const BasicType &t) {
  std::string s = t.name;
  for (int k = t.adjoint; k > 0; --k) s += ".r";
  for (int k = t.adjoint; k < 0; ++k) s += ".l";
  return s;
}

std::string to_string(const TypeList &ts) {
  std::string s = "[";
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) s += ", ";
    s += to_string(ts[i]);
  }
  return s + "]";
}

}  // namespace qsc
