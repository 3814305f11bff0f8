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

#include "oracles.hpp"

#include <cstdlib>
#include <deque>

#include <nlohmann/json.hpp>

namespace qsc::testing {

std::vector<Diagram> all_interchange_slicings(const Diagram &d, size_t cap) {
  std::vector<Diagram> out;
  std::set<std::string> seen;
  std::deque<Diagram> queue;
  queue.push_back(d);
  seen.insert(d.to_json().dump());
  while (!queue.empty() && out.size() < cap) {
    Diagram cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    const auto &layers = cur.layers();
    for (size_t i = 0; i + 1 < layers.size(); ++i) {
      std::vector<Layer> variants[2];
      if (detail::can_move_second_up(layers[i], layers[i + 1])) {
        auto [up, down] = detail::move_second_up(layers[i], layers[i + 1]);
        std::vector<Layer> ls = layers;
        ls[i] = up;
        ls[i + 1] = down;
        variants[0] = std::move(ls);
      }
      if (detail::can_move_second_up_right(layers[i], layers[i + 1])) {
        auto [up, down] = detail::move_second_up_right(layers[i], layers[i + 1]);
        std::vector<Layer> ls = layers;
        ls[i] = up;
        ls[i + 1] = down;
        variants[1] = std::move(ls);
      }
      for (auto &ls : variants) {
        if (ls.empty()) continue;
        Diagram next = Diagram::build(cur.dom(), std::move(ls));
        std::string key = next.to_json().dump();
        if (seen.insert(key).second) queue.push_back(next);
      }
    }
  }
  return out;
}

Diagram random_boxes_diagram(std::mt19937_64 &rng, int n_boxes) {
  // Boxes over one basic type: states n_k: [] -> [t..t], maps and effects,
  // applied at random offsets on the running frontier.
  const BasicType t{"w", 0};
  Diagram d = Diagram::identity({});
  for (int i = 0; i < n_boxes; ++i) {
    size_t width = d.cod().size();
    std::uniform_int_distribution<int> arity_dist(0, 2);
    int dom_arity = std::min<int>(arity_dist(rng), int(width));
    int cod_arity = arity_dist(rng);
    if (dom_arity == 0 && cod_arity == 0) cod_arity = 1;
    std::uniform_int_distribution<size_t> offset_dist(0, width - dom_arity);
    size_t offset = offset_dist(rng);
    Box box{"b" + std::to_string(i), TypeList(dom_arity, t),
            TypeList(cod_arity, t), BoxKind::custom};
    TypeList left(d.cod().begin(), d.cod().begin() + offset);
    TypeList right(d.cod().begin() + offset + dom_arity, d.cod().end());
    Diagram step = Diagram::identity(left)
                       .tensor(Diagram::from_box(box))
                       .tensor(Diagram::identity(right));
    d = d.then(step);
  }
  return d;
}

std::complex<double> dominant_entry(const Eigen::MatrixXcd &m) {
  std::complex<double> best = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(m(r, c)) > std::abs(best)) best = m(r, c);
    }
  }
  return best;
}

bool equal_up_to_global_scalar(const Eigen::MatrixXcd &a,
                               const Eigen::MatrixXcd &b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::complex<double> da = dominant_entry(a);
  std::complex<double> db = dominant_entry(b);
  if (std::abs(da) < tol && std::abs(db) < tol) return true;  // both zero maps
  if (std::abs(da) < tol || std::abs(db) < tol) return false;
  Eigen::MatrixXcd an = a / da;
  Eigen::MatrixXcd bn = b / db;
  return (an - bn).cwiseAbs().maxCoeff() <= tol;
}

zx::ZxGraph random_zx_graph(std::mt19937_64 &rng, int max_spiders,
                            int max_boundary, int max_edges) {
  using namespace zx;
  ZxGraph g;
  std::uniform_int_distribution<int> spiders_dist(1, max_spiders);
  int n_spiders = spiders_dist(rng);
  std::uniform_real_distribution<double> phase_dist(0.0, 2 * 3.14159265358979);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution rare(0.2);
  for (int i = 0; i < n_spiders; ++i) {
    double phase = coin(rng) ? 0.0 : phase_dist(rng);
    g.add_spider(coin(rng) ? NodeKind::z_spider : NodeKind::x_spider, phase);
  }
  std::uniform_int_distribution<int> node_dist(0, n_spiders - 1);
  std::uniform_int_distribution<int> edges_dist(0, max_edges);
  int n_edges = edges_dist(rng);
  for (int i = 0; i < n_edges; ++i) {
    int a = node_dist(rng);
    int b = node_dist(rng);
    g.add_edge(a, b, rare(rng) ? EdgeKind::hadamard : EdgeKind::plain);
  }
  std::uniform_int_distribution<int> boundary_dist(0, max_boundary);
  int n_boundary = boundary_dist(rng);
  for (int i = 0; i < n_boundary; ++i) {
    int spider = node_dist(rng);
    if (coin(rng)) {
      g.add_edge(g.add_input(), spider,
                 rare(rng) ? EdgeKind::hadamard : EdgeKind::plain);
    } else {
      g.add_edge(spider, g.add_output(),
                 rare(rng) ? EdgeKind::hadamard : EdgeKind::plain);
    }
  }
  return g;
}

std::string source_dir() {
  const char *dir = std::getenv("QSC_SOURCE_DIR");
  return dir != nullptr ? dir : ".";
}

}  // namespace qsc::testing
