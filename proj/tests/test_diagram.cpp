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

#include "qsc/diagram.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "qsc/error.hpp"

using namespace qsc;

namespace {
const BasicType n = noun_type();
const BasicType s = sentence_type();

Diagram box_diagram(const std::string &label, TypeList dom, TypeList cod) {
  return Diagram::from_box(Box{label, std::move(dom), std::move(cod),
                               BoxKind::custom});
}
}  // namespace

TEST_CASE("adjoints round-trip and contract") {
  CHECK(n.right_adjoint().left_adjoint() == n);
  CHECK(n.left_adjoint().right_adjoint() == n);
  CHECK(n.right_adjoint().adjoint == 1);
  CHECK(contracts(n, n.right_adjoint()));
  CHECK(contracts(n.left_adjoint(), n));
  CHECK(!contracts(n, n));
  CHECK(!contracts(n.right_adjoint(), n));
  CHECK(to_string(n.right_adjoint().right_adjoint()) == "n.r.r");
}

TEST_CASE("sequential composition unit laws") {
  Diagram id_n = Diagram::identity({n});
  CHECK(id_n.then(id_n) == id_n);

  Diagram alice = Diagram::word("Alice", {n});
  CHECK(alice.then(id_n) == alice);
  CHECK(Diagram::identity({}).then(alice) == alice);
}

TEST_CASE("sequential composition mismatch reports both type lists") {
  Diagram alice = Diagram::word("Alice", {n});
  Diagram cup = Diagram::cup(n, Side::right);
  try {
    alice.then(cup);
    FAIL("expected TypeMismatch");
  } catch (const Error &e) {
    CHECK(e.code() == QSC_ERR_TYPE_MISMATCH);
    CHECK(std::string(e.what()).find("[n]") != std::string::npos);
    CHECK(std::string(e.what()).find("[n, n.r]") != std::string::npos);
  }
}

TEST_CASE("parallel composition units and codomains") {
  Diagram alice = Diagram::word("Alice", {n});
  Diagram bob = Diagram::word("Bob", {n});
  CHECK(Diagram::identity({}).tensor(alice) == alice);
  CHECK(alice.tensor(Diagram::identity({})) == alice);
  Diagram both = alice.tensor(bob);
  CHECK(both.cod() == TypeList{n, n});
  CHECK(both.layers()[0].box.label == "Alice");
  CHECK(both.layers()[1].box.label == "Bob");
}

TEST_CASE("the transitive sentence composes to cod [s]") {
  TypeList verb_type{n.right_adjoint(), s, n.left_adjoint()};
  Diagram words = Diagram::word("Alice", {n})
                      .tensor(Diagram::word("hates", verb_type))
                      .tensor(Diagram::word("Bob", {n}));
  Diagram cups = Diagram::cup(n, Side::right)
                     .tensor(Diagram::identity({s}))
                     .tensor(Diagram::cup(n, Side::left));
  Diagram sentence = words.then(cups);
  CHECK(sentence.dom().empty());
  CHECK(sentence.cod() == TypeList{s});
}

TEST_CASE("cup and cap domains follow the adjoint convention") {
  CHECK(Diagram::cup(n, Side::right).dom() == TypeList{n, n.right_adjoint()});
  CHECK(Diagram::cup(n, Side::left).dom() == TypeList{n.left_adjoint(), n});
  CHECK(Diagram::cap(n, Side::right).cod() == TypeList{n.right_adjoint(), n});
  CHECK(Diagram::cap(n, Side::left).cod() == TypeList{n, n.left_adjoint()});
}

TEST_CASE("snake equations yank to the identity wire") {
  // Right snake: (cup_r x id) . (id x cap_r) over the middle wire.
  Diagram right_snake =
      Diagram::identity({n})
          .tensor(Diagram::cap(n, Side::right))
          .then(Diagram::cup(n, Side::right).tensor(Diagram::identity({n})));
  CHECK(right_snake.dom() == TypeList{n});
  CHECK(right_snake.cod() == TypeList{n});
  CHECK(right_snake.normal_form() == Diagram::identity({n}));

  Diagram left_snake =
      Diagram::cap(n, Side::left)
          .tensor(Diagram::identity({n}))
          .then(Diagram::identity({n}).tensor(Diagram::cup(n, Side::left)));
  CHECK(left_snake.normal_form() == Diagram::identity({n}));
}

TEST_CASE("cap then cup on the same wires is a scalar diagram") {
  // Closing the loop in a pregroup needs the swap primitive between the
  // cap's [n.r, n] and the cup's [n, n.r].
  Diagram circle = Diagram::cap(n, Side::right)
                       .then(Diagram::swap(n.right_adjoint(), n))
                       .then(Diagram::cup(n, Side::right));
  CHECK(circle.dom().empty());
  CHECK(circle.cod().empty());
  // The loop is a scalar, not the empty diagram; it must not be yanked away.
  CHECK(circle.normal_form().layers().size() == 3);
}

TEST_CASE("normal form of the identity is the identity") {
  CHECK(Diagram::identity({n, s}).normal_form() == Diagram::identity({n, s}));
}

TEST_CASE("interchange law holds up to normal form") {
  Diagram f1 = box_diagram("f1", {n}, {n});
  Diagram f2 = box_diagram("f2", {s}, {s});
  Diagram g1 = box_diagram("g1", {n}, {n});
  Diagram g2 = box_diagram("g2", {s}, {s});
  Diagram lhs = f1.tensor(f2).then(g1.tensor(g2));
  Diagram rhs = f1.then(g1).tensor(f2.then(g2));
  CHECK(lhs.normal_form() == rhs.normal_form());

  // Disjoint-wire slide: (g1 x id) . (id x f2) vs (id x f2) . (g1 x id).
  Diagram a = g1.tensor(Diagram::identity({s}))
                  .then(Diagram::identity({n}).tensor(f2));
  Diagram b = Diagram::identity({n}).tensor(f2).then(
      g1.tensor(Diagram::identity({s})));
  CHECK(a.normal_form() == b.normal_form());
  CHECK(a != b);  // only the normal forms agree
}

TEST_CASE("associativity up to normal form") {
  Diagram f = box_diagram("f", {}, {n});
  Diagram g = box_diagram("g", {}, {s});
  Diagram h = box_diagram("h", {}, {n});
  Diagram left = f.tensor(g).tensor(h);
  Diagram right = f.tensor(g.tensor(h));
  CHECK(left.normal_form() == right.normal_form());
}

TEST_CASE("every interchange slicing reaches the same normal form") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    Diagram d = testing::random_boxes_diagram(rng, 5);
    Diagram nf = d.normal_form();
    auto slicings = testing::all_interchange_slicings(d);
    CHECK(slicings.size() >= 1);
    for (const Diagram &sliced : slicings) {
      CHECK(sliced.normal_form() == nf);
    }
  }
}

TEST_CASE("ill-typed layer construction is rejected") {
  Box cup{"cup(n)", {n, n.right_adjoint()}, {}, BoxKind::cup};
  CHECK_THROWS_AS(Diagram::build({n, n}, {Layer{0, cup}}), Error);
  CHECK_THROWS_AS(Diagram::build({n}, {Layer{3, cup}}), Error);
}

TEST_CASE("swap is a primitive with the expected type") {
  Diagram sw = Diagram::swap(n, s);
  CHECK(sw.dom() == TypeList{n, s});
  CHECK(sw.cod() == TypeList{s, n});
}

TEST_CASE("diagram JSON round-trips") {
  TypeList verb_type{n.right_adjoint(), s, n.left_adjoint()};
  Diagram words = Diagram::word("Alice", {n})
                      .tensor(Diagram::word("hates", verb_type))
                      .tensor(Diagram::word("Bob", {n}));
  Diagram cups = Diagram::cup(n, Side::right)
                     .tensor(Diagram::identity({s}))
                     .tensor(Diagram::cup(n, Side::left));
  Diagram sentence = words.then(cups);
  Diagram back = Diagram::from_json(sentence.to_json());
  CHECK(back == sentence);
}
