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

#ifndef QSC_DIAGRAM_HPP
#define QSC_DIAGRAM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qsc/types.hpp"

namespace qsc {

enum class BoxKind { word, cup, cap, wire, swap_wires, custom };

std::string to_string(BoxKind kind);

struct Box {
  std::string label;
  TypeList dom;
  TypeList cod;
  BoxKind kind = BoxKind::custom;

  bool operator==(const Box &) const = default;
};

/// One slice of a diagram: a single box with `offset` wires passing to its
/// left untouched (the right padding is implied by the ambient frontier).
struct Layer {
  size_t offset = 0;
  Box box;

  bool operator==(const Layer &) const = default;
};

enum class Side { left, right };

/// A typed monoidal string diagram in generic layered form: one box per
/// layer, wires threaded between layers. Diagrams are immutable values;
/// every operation returns a new diagram, and construction type-checks all
/// layers so ill-typed diagrams cannot be built through the public surface.
class Diagram {
 public:
  Diagram() = default;

  static Diagram identity(TypeList types);
  static Diagram from_box(Box box);
  /// A word state: no inputs, the word's pregroup type as outputs.
  static Diagram word(const std::string &label, TypeList cod);
  /// cup(t, right): [t, t.r] -> [];  cup(t, left): [t.l, t] -> [].
  static Diagram cup(const BasicType &t, Side side);
  /// cap(t, right): [] -> [t.r, t];  cap(t, left): [] -> [t, t.l].
  static Diagram cap(const BasicType &t, Side side);
  static Diagram swap(const BasicType &a, const BasicType &b);

  /// Sequential composition, this diagram first: (f.then(g)) applies f and
  /// feeds its outputs to g. Fails with TypeMismatch unless cod() == g.dom().
  Diagram then(const Diagram &g) const;

  /// Parallel composition: this diagram beside g, this one on the left.
  Diagram tensor(const Diagram &g) const;

  /// Canonical representative of the diagram's interchange class: snakes are
  /// yanked, then boxes are pushed as early as left-to-right wire positions
  /// allow (deterministic tie-break). Two diagrams equal up to interchange
  /// and yanking have identical normal forms.
  Diagram normal_form() const;

  const TypeList &dom() const { return dom_; }
  const TypeList &cod() const { return cod_; }
  const std::vector<Layer> &layers() const { return layers_; }

  bool operator==(const Diagram &) const = default;

  nlohmann::json to_json() const;
  static Diagram from_json(const nlohmann::json &j);

  /// Builds a diagram from raw parts, type-checking every layer.
  static Diagram build(TypeList dom, std::vector<Layer> layers);

 private:
  TypeList dom_;
  TypeList cod_;
  std::vector<Layer> layers_;
};

std::string to_string(const Diagram &d);

namespace detail {
/// True when the adjacent pair (first, second) may be interchanged with
/// `second` moving up; used by normal_form and by the test-side slicing
/// enumerator.
bool can_move_second_up(const Layer &first, const Layer &second);
/// The interchanged pair, assuming can_move_second_up.
std::pair<Layer, Layer> move_second_up(const Layer &first,
                                       const Layer &second);
/// The reverse move: second box is weakly right of the first box's outputs.
bool can_move_second_up_right(const Layer &first, const Layer &second);
std::pair<Layer, Layer> move_second_up_right(const Layer &first,
                                             const Layer &second);
}  // namespace detail

}  // namespace qsc

#endif
