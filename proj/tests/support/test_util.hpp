// Copyright 2026 The Interdict Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only helpers: small random instance builders and independent oracles
// that do not share code paths with the library.

#ifndef INTERDICT_TESTS_SUPPORT_TEST_UTIL_HPP_
#define INTERDICT_TESTS_SUPPORT_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "interdict/graph.hpp"
#include "interdict/knapsack.hpp"

namespace interdict::testing {

inline int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool Coin(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Random recursive tree: node i attaches to a uniform earlier node. Labels are
// shuffled so node 0 is not always the attachment hub.
inline Graph RandomTree(std::mt19937_64& rng, int n) {
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.push_back({label[UniformInt(rng, 0, i - 1)], label[i]});
  }
  return Graph(n, edges);
}

// k x n grid; vertex (p, j) has id p * n + j.
inline Graph GridGraph(int k, int n) {
  std::vector<Edge> edges;
  for (int p = 0; p < k; ++p) {
    for (int j = 0; j < n; ++j) {
      if (j + 1 < n) edges.push_back({p * n + j, p * n + j + 1});
      if (p + 1 < k) edges.push_back({p * n + j, (p + 1) * n + j});
    }
  }
  return Graph(k * n, edges);
}

inline Graph CycleGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

// Two poles 0 and 1 joined by internally disjoint paths with the given
// numbers of interior vertices (at most one may be 0).
inline Graph ThetaGraph(const std::vector<int>& interior) {
  std::vector<Edge> edges;
  int next = 2;
  for (int len : interior) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return Graph(next, edges);
}

// Random tree plus `extra` distinct non-tree edges (fewer if the graph
// saturates).
inline Graph RandomConnectedGraph(std::mt19937_64& rng, int n, int extra) {
  const Graph tree = RandomTree(rng, n);
  std::vector<Edge> edges = tree.edges();
  std::set<std::pair<int, int>> present;
  for (const Edge& e : edges) present.insert({e.u, e.v});
  for (int tries = 0; extra > 0 && tries < 100 * (extra + 1); ++tries) {
    int u = UniformInt(rng, 0, n - 1);
    int v = UniformInt(rng, 0, n - 1);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!present.insert({u, v}).second) continue;
    edges.push_back({u, v});
    --extra;
  }
  return Graph(n, edges);
}

// Assigns roles with facility probability p and weights: unit when
// max_weight == 1, otherwise uniform integers in [1, max_weight].
inline Instance MakeInstance(std::mt19937_64& rng, Graph graph, double p,
                             int max_weight, int budget, ProblemKind kind) {
  Instance inst;
  const int n = graph.node_count();
  inst.graph = std::move(graph);
  inst.roles.assign(n, Role::kCustomer);
  inst.weights.assign(n, 0.0);
  for (int v = 0; v < n; ++v) {
    if (Coin(rng, p)) {
      inst.roles[v] = Role::kFacility;
    } else {
      inst.weights[v] = max_weight == 1 ? 1.0 : UniformInt(rng, 1, max_weight);
    }
  }
  inst.budget = budget;
  inst.kind = kind;
  return inst;
}

// Independent coverage check: breadth-first search from every surviving
// facility over the interdicted graph.
inline std::vector<int> FloodFillDisconnected(const Instance& inst,
                                              const std::vector<int>& removed) {
  const int n = inst.node_count();
  std::set<std::pair<int, int>> cut;
  std::vector<char> gone(n, 0);
  for (int x : removed) {
    if (inst.kind == ProblemKind::kEdgeInterdiction) {
      const Edge& e = inst.graph.edges()[x];
      cut.insert({e.u, e.v});
    } else {
      gone[x] = 1;
    }
  }
  std::vector<char> reached(n, 0);
  for (int s = 0; s < n; ++s) {
    if (!inst.is_facility(s) || gone[s]) continue;
    std::deque<int> queue{s};
    std::vector<char> seen(n, 0);
    seen[s] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      reached[v] = 1;
      for (const Edge& e : inst.graph.edges()) {
        int other = -1;
        if (e.u == v) other = e.v;
        if (e.v == v) other = e.u;
        if (other < 0 || seen[other] || gone[other]) continue;
        if (cut.count({std::min(v, other), std::max(v, other)})) continue;
        seen[other] = 1;
        queue.push_back(other);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (inst.is_customer(v) && !reached[v]) out.push_back(v);
  }
  return out;
}

// Best value over all one-item-per-bucket selections with cost <= capacity,
// optionally requiring a property item. Returns nullopt-like -1 flag through
// `feasible`.
inline double EnumerateKnapsack(const CmckpInstance& inst, int capacity,
                                bool constrained, bool* feasible) {
  const int k = static_cast<int>(inst.buckets.size());
  std::vector<int> pick(k, 0);
  double best = 0;
  *feasible = false;
  while (true) {
    int cost = 0;
    double value = 0;
    bool finite = true;
    bool has_property = false;
    for (int i = 0; i < k; ++i) {
      const KnapsackItem& item = inst.buckets[i][pick[i]];
      cost += item.cost;
      if (!item.value.is_finite()) finite = false;
      else value += item.value.value();
      has_property = has_property || item.property;
    }
    if (finite && cost <= capacity && (!constrained || has_property)) {
      if (!*feasible || value > best) best = value;
      *feasible = true;
    }
    int i = 0;
    while (i < k && ++pick[i] == static_cast<int>(inst.buckets[i].size())) {
      pick[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return best;
}

}  // namespace interdict::testing

#endif  // INTERDICT_TESTS_SUPPORT_TEST_UTIL_HPP_
