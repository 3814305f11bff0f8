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

#include <algorithm>
#include <deque>
#include <set>

#include <nlohmann/json.hpp>

#include "qsc/error.hpp"

namespace qsc {

std::string to_string(BoxKind kind) {
  switch (kind) {
    case BoxKind::word: return "word";
    case BoxKind::cup: return "cup";
    case BoxKind::cap: return "cap";
    case BoxKind::wire: return "wire";
    case BoxKind::swap_wires: return "swap";
    case BoxKind::custom: return "custom";
  }
  return "?";
}

static BoxKind box_kind_from_string(const std::string &s) {
  if (s == "word") return BoxKind::word;
  if (s == "cup") return BoxKind::cup;
  if (s == "cap") return BoxKind::cap;
  if (s == "wire") return BoxKind::wire;
  if (s == "swap") return BoxKind::swap_wires;
  if (s == "custom") return BoxKind::custom;
  fail(QSC_ERR_INVALID_ARGUMENT, "unknown box kind '" + s + "'");
}

static std::string type_to_string(const BasicType &t) { return to_string(t); }

static BasicType type_from_string(const std::string &s) {
  BasicType t;
  size_t dot = s.find('.');
  t.name = s.substr(0, dot);
  if (t.name.empty()) fail(QSC_ERR_INVALID_ARGUMENT, "empty type name in '" + s + "'");
  size_t pos = dot;
  while (pos != std::string::npos && pos < s.size()) {
    size_t next = s.find('.', pos + 1);
    std::string part = s.substr(pos + 1, next == std::string::npos ? next : next - pos - 1);
    if (part == "r") {
      t.adjoint += 1;
    } else if (part == "l") {
      t.adjoint -= 1;
    } else {
      fail(QSC_ERR_INVALID_ARGUMENT, "bad adjoint suffix in type '" + s + "'");
    }
    pos = next;
  }
  return t;
}

Diagram Diagram::build(TypeList dom, std::vector<Layer> layers) {
  Diagram d;
  d.dom_ = std::move(dom);
  TypeList frontier = d.dom_;
  for (const Layer &layer : layers) {
    const Box &b = layer.box;
    size_t off = layer.offset;
    if (off + b.dom.size() > frontier.size()) {
      fail(QSC_ERR_TYPE_MISMATCH,
           "layer for box '" + b.label + "' at offset " + std::to_string(off) +
               " overruns frontier " + to_string(frontier));
    }
    for (size_t i = 0; i < b.dom.size(); ++i) {
      if (!(frontier[off + i] == b.dom[i])) {
        fail(QSC_ERR_TYPE_MISMATCH,
             "box '" + b.label + "' expects " + to_string(b.dom) +
                 " but frontier is " + to_string(frontier) + " at offset " +
                 std::to_string(off));
      }
    }
    TypeList next(frontier.begin(), frontier.begin() + off);
    next.insert(next.end(), b.cod.begin(), b.cod.end());
    next.insert(next.end(), frontier.begin() + off + b.dom.size(), frontier.end());
    frontier = std::move(next);
  }
  d.cod_ = std::move(frontier);
  d.layers_ = std::move(layers);
  return d;
}

Diagram Diagram::identity(TypeList types) {
  return build(std::move(types), {});
}

Diagram Diagram::from_box(Box box) {
  TypeList dom = box.dom;
  return build(std::move(dom), {Layer{0, std::move(box)}});
}

Diagram Diagram::word(const std::string &label, TypeList cod) {
  return from_box(Box{label, {}, std::move(cod), BoxKind::word});
}

Diagram Diagram::cup(const BasicType &t, Side side) {
  TypeList dom = side == Side::right ? TypeList{t, t.right_adjoint()}
                                     : TypeList{t.left_adjoint(), t};
  return from_box(Box{"cup(" + to_string(t) + ")", std::move(dom), {}, BoxKind::cup});
}

Diagram Diagram::cap(const BasicType &t, Side side) {
  TypeList cod = side == Side::right ? TypeList{t.right_adjoint(), t}
                                     : TypeList{t, t.left_adjoint()};
  return from_box(Box{"cap(" + to_string(t) + ")", {}, std::move(cod), BoxKind::cap});
}

Diagram Diagram::swap(const BasicType &a, const BasicType &b) {
  return from_box(Box{"swap", {a, b}, {b, a}, BoxKind::swap_wires});
}

Diagram Diagram::then(const Diagram &g) const {
  if (!(cod_ == g.dom_)) {
    fail(QSC_ERR_TYPE_MISMATCH, "sequential composition mismatch: cod " +
                                    to_string(cod_) + " vs dom " +
                                    to_string(g.dom_));
  }
  std::vector<Layer> ls = layers_;
  ls.insert(ls.end(), g.layers_.begin(), g.layers_.end());
  return build(dom_, std::move(ls));
}

Diagram Diagram::tensor(const Diagram &g) const {
  std::vector<Layer> ls = layers_;
  for (Layer layer : g.layers_) {
    layer.offset += cod_.size();
    ls.push_back(std::move(layer));
  }
  return build(concat(dom_, g.dom_), std::move(ls));
}

namespace detail {

bool can_move_second_up(const Layer &first, const Layer &second) {
  return second.offset + second.box.dom.size() <= first.offset;
}

std::pair<Layer, Layer> move_second_up(const Layer &first,
                                       const Layer &second) {
  Layer moved_down = first;
  moved_down.offset = first.offset - second.box.dom.size() + second.box.cod.size();
  return {second, moved_down};
}

bool can_move_second_up_right(const Layer &first, const Layer &second) {
  return second.offset >= first.offset + first.box.cod.size();
}

std::pair<Layer, Layer> move_second_up_right(const Layer &first,
                                             const Layer &second) {
  Layer moved_up = second;
  moved_up.offset = second.offset - first.box.cod.size() + first.box.dom.size();
  return {moved_up, first};
}

}  // namespace detail

static std::string layer_sort_key(const Box &b) {
  return to_string(b.kind) + "|" + b.label + "|" + to_string(b.dom) + "|" +
         to_string(b.cod);
}

using LayerRank = std::pair<size_t, std::string>;

static LayerRank rank_of(const Layer &layer) {
  return {layer.offset, layer_sort_key(layer.box)};
}

// Bubbles the box at index j to the front of the list through legal
// interchanges, or reports that a dependency blocks it. A box that can fire
// first in some slicing of the class always succeeds here: everything above
// it is then wire-independent, and contiguous intervals over distinct wire
// sets cannot properly overlap, so each adjacent swap is legal.
static bool bubble_front(std::vector<Layer> &ls, size_t j) {
  for (size_t i = j; i > 0; --i) {
    if (detail::can_move_second_up(ls[i - 1], ls[i])) {
      auto [up, down] = detail::move_second_up(ls[i - 1], ls[i]);
      ls[i - 1] = up;
      ls[i] = down;
    } else if (detail::can_move_second_up_right(ls[i - 1], ls[i])) {
      auto [up, down] = detail::move_second_up_right(ls[i - 1], ls[i]);
      ls[i - 1] = up;
      ls[i] = down;
    } else {
      return false;
    }
  }
  return true;
}

// Greedy ordering: at each step, emit the frontable box with the least
// (offset at front, box key) rank. Deterministic and cheap, but a box can be
// positionally trapped in one slicing and free in another, so this is only
// the fallback when the class is too large to enumerate.
static std::vector<Layer> greedy_order(std::vector<Layer> ls) {
  std::vector<Layer> out;
  while (!ls.empty()) {
    size_t best_j = 0;
    std::optional<LayerRank> best_rank;
    for (size_t j = 0; j < ls.size(); ++j) {
      std::vector<Layer> attempt = ls;
      if (!bubble_front(attempt, j)) continue;
      LayerRank rank = rank_of(attempt[0]);
      if (!best_rank || rank < *best_rank) {
        best_rank = rank;
        best_j = j;
      }
    }
    if (!bubble_front(ls, best_j)) {
      fail(QSC_ERR_INTERNAL, "normal_form lost a frontable candidate");
    }
    out.push_back(ls.front());
    ls.erase(ls.begin());
  }
  return out;
}

static std::vector<LayerRank> rank_sequence(const std::vector<Layer> &ls) {
  std::vector<LayerRank> seq;
  seq.reserve(ls.size());
  for (const Layer &l : ls) seq.push_back(rank_of(l));
  return seq;
}

// Exact canonical slicing: the rank-least element of the full interchange
// class, found by breadth-first enumeration over adjacent interchanges in
// both directions. Falls back to the greedy order when the class exceeds
// the search budget; every diagram the toy grammar and the tests produce
// stays well inside it.
static std::vector<Layer> canonical_order(std::vector<Layer> ls) {
  constexpr size_t kMaxLayersForSearch = 12;
  constexpr size_t kMaxClassSize = 50000;
  if (ls.size() > kMaxLayersForSearch) return greedy_order(std::move(ls));

  auto key_of = [](const std::vector<Layer> &layers) {
    std::string k;
    for (const Layer &l : layers) {
      k += std::to_string(l.offset) + "|" + layer_sort_key(l.box) + ";";
    }
    return k;
  };
  std::set<std::string> seen;
  std::deque<std::vector<Layer>> queue;
  seen.insert(key_of(ls));
  queue.push_back(ls);
  std::vector<Layer> best = ls;
  std::vector<LayerRank> best_rank = rank_sequence(ls);
  while (!queue.empty()) {
    if (seen.size() > kMaxClassSize) return greedy_order(std::move(ls));
    std::vector<Layer> cur = queue.front();
    queue.pop_front();
    std::vector<LayerRank> cur_rank = rank_sequence(cur);
    if (cur_rank < best_rank) {
      best = cur;
      best_rank = std::move(cur_rank);
    }
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        std::vector<Layer> next = cur;
        if (dir == 0) {
          if (!detail::can_move_second_up(cur[i], cur[i + 1])) continue;
          auto [up, down] = detail::move_second_up(cur[i], cur[i + 1]);
          next[i] = up;
          next[i + 1] = down;
        } else {
          if (!detail::can_move_second_up_right(cur[i], cur[i + 1])) continue;
          auto [up, down] = detail::move_second_up_right(cur[i], cur[i + 1]);
          next[i] = up;
          next[i + 1] = down;
        }
        if (seen.insert(key_of(next)).second) queue.push_back(std::move(next));
      }
    }
  }
  return best;
}

// Removes one adjacent cap/cup pair forming a snake (the cup consumes exactly
// one of the cap's outputs). Deleting both layers leaves all other offsets
// valid: the consumed outside wire simply passes through.
static bool yank_one_snake(std::vector<Layer> &ls) {
  for (size_t i = 0; i + 1 < ls.size(); ++i) {
    const Layer &a = ls[i];
    const Layer &b = ls[i + 1];
    if (a.box.kind != BoxKind::cap || b.box.kind != BoxKind::cup) continue;
    if (b.offset + 1 == a.offset || b.offset == a.offset + 1) {
      ls.erase(ls.begin() + i, ls.begin() + i + 2);
      return true;
    }
  }
  return false;
}

Diagram Diagram::normal_form() const {
  std::vector<Layer> ls = layers_;
  while (true) {
    ls = canonical_order(std::move(ls));
    if (!yank_one_snake(ls)) break;
  }
  return build(dom_, std::move(ls));
}

nlohmann::json Diagram::to_json() const {
  nlohmann::json j;
  auto types_json = [](const TypeList &ts) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto &t : ts) a.push_back(type_to_string(t));
    return a;
  };
  j["dom"] = types_json(dom_);
  j["cod"] = types_json(cod_);
  nlohmann::json layers = nlohmann::json::array();
  for (const Layer &layer : layers_) {
    layers.push_back({{"offset", layer.offset},
                      {"box",
                       {{"label", layer.box.label},
                        {"kind", to_string(layer.box.kind)},
                        {"dom", types_json(layer.box.dom)},
                        {"cod", types_json(layer.box.cod)}}}});
  }
  j["layers"] = std::move(layers);
  return j;
}

Diagram Diagram::from_json(const nlohmann::json &j) {
  auto types_from = [](const nlohmann::json &a) {
    TypeList ts;
    for (const auto &t : a) ts.push_back(type_from_string(t.get<std::string>()));
    return ts;
  };
  TypeList dom = types_from(j.at("dom"));
  std::vector<Layer> layers;
  for (const auto &lj : j.at("layers")) {
    const auto &bj = lj.at("box");
    Box b{bj.at("label").get<std::string>(),
          types_from(bj.at("dom")),
          types_from(bj.at("cod")),
          box_kind_from_string(bj.at("kind").get<std::string>())};
    layers.push_back(Layer{lj.at("offset").get<size_t>(), std::move(b)});
  }
  Diagram d = build(std::move(dom), std::move(layers));
  TypeList cod = types_from(j.at("cod"));
  if (!(d.cod() == cod)) {
    fail(QSC_ERR_TYPE_MISMATCH,
         "diagram JSON cod " + to_string(cod) + " does not match layers, got " +
             to_string(d.cod()));
  }
  return d;
}

std::string to_string(const Diagram &d) {
  std::string s = to_string(d.dom()) + " -> " + to_string(d.cod()) + " {";
  for (size_t i = 0; i < d.layers().size(); ++i) {
    if (i) s += "; ";
    s += d.layers()[i].box.label + "@" + std::to_string(d.layers()[i].offset);
  }
  return s + "}";
}

}  // namespace qsc
