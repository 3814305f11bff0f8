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

#ifndef QSC_TYPES_HPP
#define QSC_TYPES_HPP

#include <string>
#include <vector>

namespace qsc {

/// A basic pregroup type together with its adjoint degree: 0 is the plain
/// type, -1 the left adjoint (t.l), +1 the right adjoint (t.r). Adjoints
/// compose to higher degrees (t.rr has degree +2).
struct BasicType {
  std::string name;
  int adjoint = 0;

  BasicType left_adjoint() const { return {name, adjoint - 1}; }
  BasicType right_adjoint() const { return {name, adjoint + 1}; }

  bool operator==(const BasicType &) const = default;
};

/// x . x.r -> 1 and x.l . x -> 1 collapse to one rule on adjoint degrees:
/// the pair (a, b) contracts exactly when b is the right adjoint of a.
inline bool contracts(const BasicType &a, const BasicType &b) {
  return a.name == b.name && b.adjoint == a.adjoint + 1;
}

using TypeList = std::vector<BasicType>;

TypeList concat(const TypeList &a, const TypeList &b);

std::string to_string(const BasicType &t);
std::string to_string(const TypeList &ts);

// Shorthand factories for the toy grammar's basic types.
inline BasicType noun_type() { return {"n", 0}; }
inline BasicType sentence_type() { return {"s", 0}; }

}  // namespace qsc

#endif
