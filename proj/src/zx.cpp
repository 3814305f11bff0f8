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

#include "qsc/zx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include <nlohmann/json.hpp>

#include "qsc/error.hpp"

namespace qsc::zx {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPhaseTol = 1e-12;
constexpr int kMaxContractionVars = 22;
constexpr int kMaxBoundaryWires = 12;

bool is_spider(NodeKind k) {
  return k == NodeKind::z_spider || k == NodeKind::x_spider;
}

EdgeKind combine(EdgeKind a, EdgeKind b) {
  return a == b ? EdgeKind::plain : EdgeKind::hadamard;
}
}  // namespace

double normalize_phase(double phase) {
  double p = std::fmod(phase, kTwoPi);
  if (p < 0) p += kTwoPi;
  if (p < kPhaseTol || kTwoPi - p < kPhaseTol) p = 0.0;
  return p;
}

bool phase_is_zero(double phase) { return normalize_phase(phase) == 0.0; }

int ZxGraph::add_spider(NodeKind color, double phase) {
  if (!is_spider(color)) fail(QSC_ERR_INVALID_ARGUMENT, "add_spider needs a spider kind");
  nodes_.push_back(Node{color, normalize_phase(phase), true});
  return static_cast<int>(nodes_.size()) - 1;
}

int ZxGraph::add_input() {
  nodes_.push_back(Node{NodeKind::boundary_in, 0.0, true});
  inputs_.push_back(static_cast<int>(nodes_.size()) - 1);
  return inputs_.back();
}

int ZxGraph::add_output() {
  nodes_.push_back(Node{NodeKind::boundary_out, 0.0, true});
  outputs_.push_back(static_cast<int>(nodes_.size()) - 1);
  return outputs_.back();
}

void ZxGraph::add_edge(int a, int b, EdgeKind kind) {
  if (a < 0 || b < 0 || a >= static_cast<int>(nodes_.size()) ||
      b >= static_cast<int>(nodes_.size()) || !nodes_[a].alive || !nodes_[b].alive) {
    fail(QSC_ERR_INVALID_ARGUMENT, "edge endpoint out of range");
  }
  edges_.push_back(Edge{a, b, kind});
}

int ZxGraph::degree(int node) const {
  int d = 0;
  for (const Edge &e : edges_) {
    if (e.a == node) ++d;
    if (e.b == node) ++d;
  }
  return d;
}

size_t ZxGraph::live_spider_count() const {
  size_t n = 0;
  for (const Node &node : nodes_) {
    if (node.alive && is_spider(node.kind)) ++n;
  }
  return n;
}

void ZxGraph::normalize_self_loops() {
  std::vector<Edge> kept;
  for (const Edge &e : edges_) {
    if (e.a != e.b) {
      kept.push_back(e);
      continue;
    }
    if (e.kind == EdgeKind::hadamard) {
      // Hadamard self-loop adds pi to the spider phase (up to global scalar).
      nodes_[e.a].phase = normalize_phase(nodes_[e.a].phase + std::numbers::pi);
    }
    // Plain self-loops vanish.
  }
  edges_ = std::move(kept);
}

// Rebuilds the graph without dead nodes, preserving port order.
static ZxGraph compacted(const ZxGraph &g) {
  ZxGraph result;
  std::vector<int> remap(g.nodes().size(), -1);
  for (size_t i = 0; i < g.nodes().size(); ++i) {
    const Node &n = g.nodes()[i];
    if (n.alive && is_spider(n.kind)) {
      remap[i] = result.add_spider(n.kind, n.phase);
    }
  }
  for (int old_id : g.inputs()) {
    if (g.nodes()[old_id].alive) remap[old_id] = result.add_input();
  }
  for (int old_id : g.outputs()) {
    if (g.nodes()[old_id].alive) remap[old_id] = result.add_output();
  }
  for (const Edge &e : g.edges()) {
    result.add_edge(remap[e.a], remap[e.b], e.kind);
  }
  return result;
}

ZxGraph fuse_spiders(ZxGraph g) {
  g.normalize_self_loops();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge &e : g.edges_) {
      if (e.kind != EdgeKind::plain) continue;
      Node &na = g.nodes_[e.a];
      Node &nb = g.nodes_[e.b];
      if (!is_spider(na.kind) || !is_spider(nb.kind)) continue;
      if (na.kind != nb.kind || e.a == e.b) continue;
      int keep = e.a, drop = e.b;
      g.nodes_[keep].phase =
          normalize_phase(g.nodes_[keep].phase + g.nodes_[drop].phase);
      for (Edge &f : g.edges_) {
        if (f.a == drop) f.a = keep;
        if (f.b == drop) f.b = keep;
      }
      g.nodes_[drop].alive = false;
      g.normalize_self_loops();
      changed = true;
      break;
    }
  }
  return compacted(g);
}

ZxGraph remove_identity_spiders(ZxGraph g) {
  g.normalize_self_loops();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t s = 0; s < g.nodes_.size(); ++s) {
      Node &node = g.nodes_[s];
      if (!node.alive || !is_spider(node.kind) || !phase_is_zero(node.phase)) {
        continue;
      }
      std::vector<size_t> incident;
      for (size_t i = 0; i < g.edges_.size(); ++i) {
        if (g.edges_[i].a == static_cast<int>(s)) incident.push_back(i);
        if (g.edges_[i].b == static_cast<int>(s)) incident.push_back(i);
      }
      if (incident.size() != 2 || incident[0] == incident[1]) continue;
      const Edge e1 = g.edges_[incident[0]];
      const Edge e2 = g.edges_[incident[1]];
      int x = e1.a == static_cast<int>(s) ? e1.b : e1.a;
      int y = e2.a == static_cast<int>(s) ? e2.b : e2.a;
      EdgeKind kind = combine(e1.kind, e2.kind);
      g.edges_.erase(g.edges_.begin() + std::max(incident[0], incident[1]));
      g.edges_.erase(g.edges_.begin() + std::min(incident[0], incident[1]));
      node.alive = false;
      g.edges_.push_back(Edge{x, y, kind});
      g.normalize_self_loops();
      changed = true;
      break;
    }
  }
  return compacted(g);
}

ZxGraph cnot_from_spiders() {
  ZxGraph g;
  int z = g.add_spider(NodeKind::z_spider, 0.0);
  int x = g.add_spider(NodeKind::x_spider, 0.0);
  int c_in = g.add_input();
  int t_in = g.add_input();
  int c_out = g.add_output();
  int t_out = g.add_output();
  g.add_edge(c_in, z);
  g.add_edge(z, c_out);
  g.add_edge(t_in, x);
  g.add_edge(x, t_out);
  g.add_edge(z, x);
  return g;
}

ZxGraph gate_to_zx(const Gate &gate) {
  if (gate.param.has_value()) {
    fail(QSC_ERR_INVALID_ARGUMENT, "gate_to_zx needs a bound (literal) angle");
  }
  ZxGraph g;
  switch (gate.kind) {
    case GateKind::x_prep: {
      int s = g.add_spider(NodeKind::x_spider, 0.0);
      g.add_edge(s, g.add_output());
      return g;
    }
    case GateKind::x_measure_postselect0: {
      int s = g.add_spider(NodeKind::x_spider, 0.0);
      g.add_edge(g.add_input(), s);
      return g;
    }
    case GateKind::x_phase: {
      int s = g.add_spider(NodeKind::z_spider, gate.angle.value_or(0.0));
      g.add_edge(g.add_input(), s);
      g.add_edge(s, g.add_output());
      return g;
    }
    case GateKind::z_phase: {
      int s = g.add_spider(NodeKind::x_spider, gate.angle.value_or(0.0));
      g.add_edge(g.add_input(), s);
      g.add_edge(s, g.add_output());
      return g;
    }
    case GateKind::hadamard: {
      int in = g.add_input();
      int out = g.add_output();
      g.add_edge(in, out, EdgeKind::hadamard);
      return g;
    }
    case GateKind::cnot:
      return cnot_from_spiders();
  }
  fail(QSC_ERR_INVALID_ARGUMENT, "unknown gate kind");
}

ZxGraph ZxGraph::compose(const ZxGraph &g) const {
  if (outputs_.size() != g.inputs_.size()) {
    fail(QSC_ERR_TYPE_MISMATCH,
         "compose: " + std::to_string(outputs_.size()) + " outputs vs " +
             std::to_string(g.inputs_.size()) + " inputs");
  }
  ZxGraph joined;
  std::vector<int> map_a(nodes_.size(), -1), map_b(g.nodes_.size(), -1);
  std::vector<int> solder;  // temporary identity spiders at the seam
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node &n = nodes_[i];
    if (!n.alive) continue;
    if (n.kind == NodeKind::boundary_out) {
      map_a[i] = joined.add_spider(NodeKind::z_spider, 0.0);
    } else if (is_spider(n.kind)) {
      map_a[i] = joined.add_spider(n.kind, n.phase);
    }
  }
  for (size_t i = 0; i < g.nodes_.size(); ++i) {
    const Node &n = g.nodes_[i];
    if (!n.alive) continue;
    if (n.kind == NodeKind::boundary_in) {
      map_b[i] = -2;  // merged into the matching output's solder node below
    } else if (is_spider(n.kind)) {
      map_b[i] = joined.add_spider(n.kind, n.phase);
    }
  }
  for (int id : inputs_) map_a[id] = joined.add_input();
  for (int id : g.outputs_) map_b[id] = joined.add_output();
  for (size_t k = 0; k < outputs_.size(); ++k) {
    map_b[g.inputs_[k]] = map_a[outputs_[k]];
    solder.push_back(map_a[outputs_[k]]);
  }
  for (const Edge &e : edges_) joined.add_edge(map_a[e.a], map_a[e.b], e.kind);
  for (const Edge &e : g.edges_) joined.add_edge(map_b[e.a], map_b[e.b], e.kind);
  // Splice out the solder identities; chains and loops resolve iteratively.
  for (int s : solder) {
    std::vector<size_t> incident;
    for (size_t i = 0; i < joined.edges_.size(); ++i) {
      if (joined.edges_[i].a == s) incident.push_back(i);
      if (joined.edges_[i].b == s) incident.push_back(i);
    }
    if (incident.size() != 2 || incident[0] == incident[1]) {
      // A closed loop through this seam point; keep the scalar spider.
      continue;
    }
    const Edge e1 = joined.edges_[incident[0]];
    const Edge e2 = joined.edges_[incident[1]];
    int x = e1.a == s ? e1.b : e1.a;
    int y = e2.a == s ? e2.b : e2.a;
    EdgeKind kind = combine(e1.kind, e2.kind);
    joined.edges_.erase(joined.edges_.begin() + std::max(incident[0], incident[1]));
    joined.edges_.erase(joined.edges_.begin() + std::min(incident[0], incident[1]));
    joined.nodes_[s].alive = false;
    joined.edges_.push_back(Edge{x, y, kind});
  }
  joined.normalize_self_loops();
  return compacted(joined);
}

Eigen::MatrixXcd semantics(const ZxGraph &g) {
  const auto &nodes = g.nodes();
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].alive && !is_spider(nodes[i].kind) && g.degree(static_cast<int>(i)) != 1) {
      fail(QSC_ERR_INVALID_ARGUMENT, "boundary node without exactly one edge");
    }
  }
  const size_t n_in = g.inputs().size();
  const size_t n_out = g.outputs().size();
  if (n_in + n_out > static_cast<size_t>(kMaxBoundaryWires)) {
    fail(QSC_ERR_TOO_LARGE, "graph exceeds the dense contraction wire budget");
  }

  // One binary variable per plain-edge, two per Hadamard edge.
  int n_vars = 0;
  std::vector<std::vector<int>> node_vars(nodes.size());
  std::vector<std::pair<int, int>> hadamard_pairs;
  for (const Edge &e : g.edges()) {
    if (e.kind == EdgeKind::plain) {
      int v = n_vars++;
      node_vars[e.a].push_back(v);
      node_vars[e.b].push_back(v);
    } else {
      int va = n_vars++;
      int vb = n_vars++;
      node_vars[e.a].push_back(va);
      node_vars[e.b].push_back(vb);
      hadamard_pairs.emplace_back(va, vb);
    }
  }
  if (n_vars > kMaxContractionVars) {
    fail(QSC_ERR_TOO_LARGE, "graph exceeds the dense contraction budget");
  }

  std::vector<size_t> spider_ids;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].alive && is_spider(nodes[i].kind)) spider_ids.push_back(i);
  }

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(1LL << n_out, 1LL << n_in);
  const uint64_t total = 1ULL << n_vars;
  for (uint64_t mask = 0; mask < total; ++mask) {
    std::complex<double> factor = 1.0;
    for (const auto &[va, vb] : hadamard_pairs) {
      if (((mask >> va) & 1ULL) && ((mask >> vb) & 1ULL)) factor = -factor;
    }
    bool zero = false;
    for (size_t id : spider_ids) {
      const Node &node = nodes[id];
      const auto &vars = node_vars[id];
      if (node.kind == NodeKind::z_spider) {
        bool all0 = true, all1 = true;
        for (int v : vars) {
          if ((mask >> v) & 1ULL) all0 = false; else all1 = false;
        }
        if (all0 && all1) {
          factor *= 1.0 + std::polar(1.0, node.phase);  // legless spider
        } else if (all0) {
          // factor *= 1
        } else if (all1) {
          factor *= std::polar(1.0, node.phase);
        } else {
          zero = true;
          break;
        }
      } else {
        int parity = 0;
        for (int v : vars) parity ^= static_cast<int>((mask >> v) & 1ULL);
        factor *= 1.0 + std::polar(1.0, node.phase) * (parity ? -1.0 : 1.0);
        if (factor == std::complex<double>(0.0, 0.0)) {
          zero = true;
          break;
        }
      }
    }
    if (zero) continue;
    uint64_t row = 0, col = 0;
    for (size_t i = 0; i < n_out; ++i) {
      int v = node_vars[g.outputs()[i]].at(0);
      row = (row << 1) | ((mask >> v) & 1ULL);
    }
    for (size_t i = 0; i < n_in; ++i) {
      int v = node_vars[g.inputs()[i]].at(0);
      col = (col << 1) | ((mask >> v) & 1ULL);
    }
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += factor;
  }
  return m;
}

nlohmann::json ZxGraph::to_json() const {
  nlohmann::json j;
  nlohmann::json ns = nlohmann::json::array();
  for (const Node &n : nodes_) {
    std::string kind = n.kind == NodeKind::z_spider     ? "z"
                       : n.kind == NodeKind::x_spider   ? "x"
                       : n.kind == NodeKind::boundary_in ? "in"
                                                         : "out";
    ns.push_back({{"kind", kind}, {"phase", n.phase}});
  }
  nlohmann::json es = nlohmann::json::array();
  for (const Edge &e : edges_) {
    es.push_back({e.a, e.b, e.kind == EdgeKind::plain ? "plain" : "h"});
  }
  j["nodes"] = std::move(ns);
  j["edges"] = std::move(es);
  j["inputs"] = inputs_;
  j["outputs"] = outputs_;
  return j;
}

ZxGraph ZxGraph::from_json(const nlohmann::json &j) {
  ZxGraph g;
  std::vector<std::string> kinds;
  for (const auto &nj : j.at("nodes")) {
    kinds.push_back(nj.at("kind").get<std::string>());
    std::string k = kinds.back();
    if (k == "z") {
      g.add_spider(NodeKind::z_spider, nj.at("phase").get<double>());
    } else if (k == "x") {
      g.add_spider(NodeKind::x_spider, nj.at("phase").get<double>());
    } else if (k == "in" || k == "out") {
      // Placeholder; port order restored from the explicit lists below.
      g.nodes_.push_back(Node{k == "in" ? NodeKind::boundary_in : NodeKind::boundary_out, 0.0, true});
    } else {
      fail(QSC_ERR_INVALID_ARGUMENT, "unknown zx node kind '" + k + "'");
    }
  }
  for (const auto &ej : j.at("edges")) {
    std::string kind = ej.at(2).get<std::string>();
    g.add_edge(ej.at(0).get<int>(), ej.at(1).get<int>(),
               kind == "plain" ? EdgeKind::plain : EdgeKind::hadamard);
  }
  g.inputs_ = j.at("inputs").get<std::vector<int>>();
  g.outputs_ = j.at("outputs").get<std::vector<int>>();
  for (int id : g.inputs_) {
    if (id < 0 || id >= static_cast<int>(g.nodes_.size()) ||
        g.nodes_[id].kind != NodeKind::boundary_in) {
      fail(QSC_ERR_INVALID_ARGUMENT, "bad input port in zx JSON");
    }
  }
  for (int id : g.outputs_) {
    if (id < 0 || id >= static_cast<int>(g.nodes_.size()) ||
        g.nodes_[id].kind != NodeKind::boundary_out) {
      fail(QSC_ERR_INVALID_ARGUMENT, "bad output port in zx JSON");
    }
  }
  return g;
}

namespace {

struct Walker {
  int rail = 0;
  int at_node = -1;        // node just arrived at
  int via_edge = -1;       // edge used to arrive
  bool parked = false;
  bool done = false;
};

struct Extractor {
  const ZxGraph &g;
  std::vector<Gate> gates;
  std::vector<bool> edge_used;
  std::vector<bool> node_done;
  std::vector<std::optional<int>> waiting_rail;  // per node: parked walker rail

  explicit Extractor(const ZxGraph &graph)
      : g(graph),
        edge_used(graph.edges().size(), false),
        node_done(graph.nodes().size(), false),
        waiting_rail(graph.nodes().size()) {}

  std::vector<std::pair<size_t, int>> incident(int node) const {
    std::vector<std::pair<size_t, int>> out;
    for (size_t i = 0; i < g.edges().size(); ++i) {
      const Edge &e = g.edges()[i];
      if (e.a == node) out.emplace_back(i, e.b);
      if (e.b == node) out.emplace_back(i, e.a);
    }
    return out;
  }
};

}  // namespace

std::vector<Gate> zx_to_gates(const ZxGraph &g) {
  Extractor ex(g);
  std::vector<Walker> walkers;
  auto start_rail = [&](int rail, int from_node) {
    auto inc = ex.incident(from_node);
    if (inc.size() != 1) {
      fail(QSC_ERR_NOT_CIRCUIT_LIKE, "rail start without exactly one edge");
    }
    Walker w;
    w.rail = rail;
    w.via_edge = static_cast<int>(inc[0].first);
    w.at_node = inc[0].second;
    ex.edge_used[inc[0].first] = true;
    if (g.edges()[inc[0].first].kind == EdgeKind::hadamard) {
      ex.gates.push_back(Gate::h(rail));
    }
    walkers.push_back(w);
  };

  int next_rail = 0;
  for (int in : g.inputs()) {
    ex.node_done[in] = true;
    start_rail(next_rail++, in);
  }

  auto run_to_quiescence = [&]() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (Walker &w : walkers) {
        if (w.done || w.parked) continue;
        int node = w.at_node;
        const Node &n = g.nodes()[node];
        if (n.kind == NodeKind::boundary_out) {
          ex.node_done[node] = true;
          w.done = true;
          progress = true;
          continue;
        }
        if (!is_spider(n.kind)) {
          fail(QSC_ERR_NOT_CIRCUIT_LIKE, "walked into an input boundary");
        }
        auto inc = ex.incident(node);
        if (inc.size() == 1) {
          if (n.kind != NodeKind::x_spider || !phase_is_zero(n.phase)) {
            fail(QSC_ERR_NOT_CIRCUIT_LIKE, "unsupported one-legged spider");
          }
          ex.gates.push_back(Gate::measure0(w.rail));
          ex.node_done[node] = true;
          w.done = true;
          progress = true;
          continue;
        }
        if (inc.size() == 2) {
          ex.gates.push_back(n.kind == NodeKind::z_spider
                                 ? Gate::xphase(w.rail, n.phase)
                                 : Gate::zphase(w.rail, n.phase));
          size_t out_edge = inc[0].first == static_cast<size_t>(w.via_edge)
                                ? inc[1].first
                                : inc[0].first;
          int next = inc[0].first == static_cast<size_t>(w.via_edge)
                         ? inc[1].second
                         : inc[0].second;
          ex.edge_used[out_edge] = true;
          ex.node_done[node] = true;
          if (g.edges()[out_edge].kind == EdgeKind::hadamard) {
            ex.gates.push_back(Gate::h(w.rail));
          }
          w.via_edge = static_cast<int>(out_edge);
          w.at_node = next;
          progress = true;
          continue;
        }
        if (inc.size() == 3) {
          if (!phase_is_zero(n.phase)) {
            fail(QSC_ERR_NOT_CIRCUIT_LIKE, "three-legged spider with phase");
          }
          // Locate the cross edge to the opposite-color degree-3 spider.
          int partner = -1;
          size_t cross_edge = 0;
          for (auto [ei, other] : inc) {
            if (ei == static_cast<size_t>(w.via_edge)) continue;
            const Node &o = g.nodes()[other];
            if (is_spider(o.kind) && o.kind != n.kind &&
                ex.incident(other).size() == 3 && phase_is_zero(o.phase) &&
                g.edges()[ei].kind == EdgeKind::plain) {
              partner = other;
              cross_edge = ei;
            }
          }
          if (partner < 0) {
            fail(QSC_ERR_NOT_CIRCUIT_LIKE, "three-legged spider outside a CNOT pair");
          }
          if (!ex.waiting_rail[partner].has_value()) {
            ex.waiting_rail[node] = w.rail;
            w.parked = true;
            continue;
          }
          int other_rail = *ex.waiting_rail[partner];
          int control = n.kind == NodeKind::z_spider ? w.rail : other_rail;
          int target = n.kind == NodeKind::z_spider ? other_rail : w.rail;
          ex.gates.push_back(Gate::cx(control, target));
          ex.edge_used[cross_edge] = true;
          // Advance both walkers past their spiders.
          for (Walker &v : walkers) {
            if (v.parked && v.at_node == partner) {
              auto pinc = ex.incident(partner);
              for (auto [ei, other] : pinc) {
                if (!ex.edge_used[ei]) {
                  ex.edge_used[ei] = true;
                  if (g.edges()[ei].kind == EdgeKind::hadamard) {
                    ex.gates.push_back(Gate::h(v.rail));
                  }
                  v.via_edge = static_cast<int>(ei);
                  v.at_node = other;
                  break;
                }
              }
              v.parked = false;
              ex.node_done[partner] = true;
              ex.waiting_rail[partner].reset();
            }
          }
          for (auto [ei, other] : inc) {
            if (!ex.edge_used[ei]) {
              ex.edge_used[ei] = true;
              if (g.edges()[ei].kind == EdgeKind::hadamard) {
                ex.gates.push_back(Gate::h(w.rail));
              }
              w.via_edge = static_cast<int>(ei);
              w.at_node = other;
              break;
            }
          }
          ex.node_done[node] = true;
          progress = true;
          continue;
        }
        fail(QSC_ERR_NOT_CIRCUIT_LIKE, "spider of unsupported degree");
      }
    }
  };

  run_to_quiescence();
  // Degree-1 X(0) spiders not reached from the inputs are preparations.
  for (size_t i = 0; i < g.nodes().size(); ++i) {
    const Node &n = g.nodes()[i];
    if (!n.alive || ex.node_done[i]) continue;
    if (n.kind == NodeKind::x_spider && phase_is_zero(n.phase) &&
        ex.incident(static_cast<int>(i)).size() == 1 &&
        !ex.edge_used[ex.incident(static_cast<int>(i))[0].first]) {
      int rail = next_rail++;
      ex.gates.push_back(Gate::prep(rail));
      ex.node_done[i] = true;
      start_rail(rail, static_cast<int>(i));
      run_to_quiescence();
    }
  }
  for (const Walker &w : walkers) {
    if (!w.done) fail(QSC_ERR_NOT_CIRCUIT_LIKE, "extraction deadlocked");
  }
  for (size_t i = 0; i < ex.edge_used.size(); ++i) {
    if (!ex.edge_used[i]) {
      fail(QSC_ERR_NOT_CIRCUIT_LIKE, "graph has parts unreachable from the rails");
    }
  }
  return ex.gates;
}

}  // namespace qsc::zx
