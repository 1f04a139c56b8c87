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

#include "interdict/treewidth.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "disjoint_sets.hpp"
#include "interdict/error.hpp"
#include "text_lines.hpp"

namespace interdict {

namespace {

bool Contains(const std::vector<NodeId>& sorted_bag, NodeId v) {
  return std::binary_search(sorted_bag.begin(), sorted_bag.end(), v);
}

std::string EdgeText(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// True when links form a single tree over `bag_count` bags.
bool LinksFormTree(int bag_count, const std::vector<std::pair<int, int>>& links) {
  if (bag_count == 0) return links.empty();
  if (static_cast<int>(links.size()) != bag_count - 1) return false;
  internal::DisjointSets sets(bag_count);
  for (const auto& [a, b] : links) {
    if (a < 0 || b < 0 || a >= bag_count || b >= bag_count) return false;
    if (!sets.Union(a, b)) return false;
  }
  return true;
}

// Builds nice nodes bottom-up, introducing edges lazily before forgets.
class NiceBuilder {
 public:
  explicit NiceBuilder(const Graph& graph)
      : graph_(graph), edge_done_(graph.edge_count(), 0) {}

  int Leaf() {
    NiceNode node;
    node.kind = NiceKind::kLeaf;
    return Add(std::move(node));
  }

  int IntroduceVertex(int child, NodeId v) {
    NiceNode node;
    node.kind = NiceKind::kIntroduceVertex;
    node.bag = nice_.nodes[child].bag;
    node.bag.insert(std::lower_bound(node.bag.begin(), node.bag.end(), v), v);
    node.vertex = v;
    node.left = child;
    return Add(std::move(node));
  }

  int Forget(int child, NodeId v) {
    std::vector<Incidence> pending;
    for (const Incidence& inc : graph_.neighbors(v)) {
      if (!edge_done_[inc.edge] && Contains(nice_.nodes[child].bag, inc.neighbor)) {
        pending.push_back(inc);
      }
    }
    std::sort(pending.begin(), pending.end(),
              [](const Incidence& a, const Incidence& b) { return a.edge < b.edge; });
    for (const Incidence& inc : pending) {
      edge_done_[inc.edge] = 1;
      NiceNode node;
      node.kind = NiceKind::kIntroduceEdge;
      node.bag = nice_.nodes[child].bag;
      node.edge = inc.edge;
      node.left = child;
      child = Add(std::move(node));
    }
    NiceNode node;
    node.kind = NiceKind::kForget;
    node.bag = nice_.nodes[child].bag;
    node.bag.erase(std::lower_bound(node.bag.begin(), node.bag.end(), v));
    node.vertex = v;
    node.left = child;
    return Add(std::move(node));
  }

  int Join(int left, int right) {
    NiceNode node;
    node.kind = NiceKind::kJoin;
    node.bag = nice_.nodes[left].bag;
    node.left = left;
    node.right = right;
    return Add(std::move(node));
  }

  // Walks from bag `from` (held by node `at`) to bag `to`.
  int Transition(int at, const std::vector<NodeId>& from,
                 const std::vector<NodeId>& to) {
    std::vector<NodeId> drop, add;
    std::set_difference(from.begin(), from.end(), to.begin(), to.end(),
                        std::back_inserter(drop));
    std::set_difference(to.begin(), to.end(), from.begin(), from.end(),
                        std::back_inserter(add));
    for (NodeId v : drop) at = Forget(at, v);
    for (NodeId v : add) at = IntroduceVertex(at, v);
    return at;
  }

  const std::vector<NodeId>& bag(int node) const { return nice_.nodes[node].bag; }
  NiceDecomposition Take() { return std::move(nice_); }

 private:
  int Add(NiceNode node) {
    nice_.nodes.push_back(std::move(node));
    return static_cast<int>(nice_.nodes.size()) - 1;
  }

  const Graph& graph_;
  std::vector<char> edge_done_;
  NiceDecomposition nice_;
};

}  // namespace

int TreeDecomposition::width() const {
  int width = -1;
  for (const auto& bag : bags) width = std::max(width, static_cast<int>(bag.size()) - 1);
  return width;
}

int NiceDecomposition::width() const {
  int width = -1;
  for (const auto& node : nodes) {
    width = std::max(width, static_cast<int>(node.bag.size()) - 1);
  }
  return width;
}

std::string_view DecompositionViolationName(DecompositionViolationKind kind) {
  switch (kind) {
    case DecompositionViolationKind::kNotATree: return "not_a_tree";
    case DecompositionViolationKind::kBadVertex: return "bad_vertex";
    case DecompositionViolationKind::kVertexNotCovered: return "vertex_not_covered";
    case DecompositionViolationKind::kEdgeNotCovered: return "edge_not_covered";
    case DecompositionViolationKind::kOccurrenceDisconnected:
      return "occurrence_disconnected";
  }
  return "unknown";
}

std::string_view NiceKindName(NiceKind kind) {
  switch (kind) {
    case NiceKind::kLeaf: return "leaf";
    case NiceKind::kIntroduceVertex: return "introduce_vertex";
    case NiceKind::kIntroduceEdge: return "introduce_edge";
    case NiceKind::kForget: return "forget";
    case NiceKind::kJoin: return "join";
  }
  return "unknown";
}

std::vector<DecompositionViolation> ValidateDecomposition(
    const Graph& graph, const TreeDecomposition& decomposition) {
  std::vector<DecompositionViolation> out;
  const int t = static_cast<int>(decomposition.bags.size());
  const int n = graph.node_count();

  const bool tree = LinksFormTree(t, decomposition.links) &&
                    decomposition.root >= -1 && decomposition.root < std::max(t, 1);
  if (!tree) {
    out.push_back({DecompositionViolationKind::kNotATree, -1, {-1, -1},
                   "links do not form a tree over " + std::to_string(t) + " bags"});
  }

  std::vector<std::vector<int>> occurrences(n);
  bool bags_ok = true;
  for (int i = 0; i < t; ++i) {
    const auto& bag = decomposition.bags[i];
    for (size_t k = 0; k < bag.size(); ++k) {
      const NodeId v = bag[k];
      if (v < 0 || v >= n || (k > 0 && bag[k - 1] >= v)) {
        out.push_back({DecompositionViolationKind::kBadVertex, v, {-1, -1},
                       "bag " + std::to_string(i) +
                           " is not a sorted set of graph vertices"});
        bags_ok = false;
        break;
      }
      occurrences[v].push_back(i);
    }
  }
  if (!bags_ok) return out;

  for (NodeId v = 0; v < n; ++v) {
    if (occurrences[v].empty()) {
      out.push_back({DecompositionViolationKind::kVertexNotCovered, v, {-1, -1},
                     "vertex " + std::to_string(v) + " is in no bag"});
    }
  }
  for (const Edge& e : graph.edges()) {
    const auto& a = occurrences[e.u];
    const auto& b = occurrences[e.v];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    if (common.empty()) {
      out.push_back({DecompositionViolationKind::kEdgeNotCovered, -1, e,
                     "no bag holds edge " + EdgeText(e)});
    }
  }
  if (!tree) return out;

  // In a tree, the bags holding v induce a connected subgraph iff they span
  // exactly (count - 1) links.
  std::vector<int> internal_links(n, 0);
  for (const auto& [a, b] : decomposition.links) {
    const auto& x = decomposition.bags[a];
    const auto& y = decomposition.bags[b];
    std::vector<NodeId> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                          std::back_inserter(common));
    for (NodeId v : common) ++internal_links[v];
  }
  for (NodeId v = 0; v < n; ++v) {
    const int count = static_cast<int>(occurrences[v].size());
    if (count > 0 && internal_links[v] != count - 1) {
      out.push_back({DecompositionViolationKind::kOccurrenceDisconnected, v, {-1, -1},
                     "bags holding vertex " + std::to_string(v) +
                         " are not connected"});
    }
  }
  return out;
}

TreeDecomposition TreeDecompositionOfForest(const Graph& graph) {
  if (!graph.is_acyclic()) {
    throw Error(ErrorCode::kNotAForest, "graph has a cycle");
  }
  const int n = graph.node_count();
  TreeDecomposition td;
  std::vector<int> edge_bag(graph.edge_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    edge_bag[e] = static_cast<int>(td.bags.size());
    td.bags.push_back({graph.edge(e).u, graph.edge(e).v});
  }
  int component_count = 0;
  const std::vector<int> component = graph.components(&component_count);
  std::vector<int> representative(component_count, -1);
  for (NodeId v = 0; v < n; ++v) {
    const auto incident = graph.neighbors(v);
    int first = -1;
    if (incident.empty()) {
      first = static_cast<int>(td.bags.size());
      td.bags.push_back({v});
    } else {
      first = edge_bag[incident[0].edge];
      for (size_t i = 1; i < incident.size(); ++i) {
        td.links.emplace_back(first, edge_bag[incident[i].edge]);
      }
    }
    int& rep = representative[component[v]];
    if (rep < 0) rep = first;
  }
  for (int c = 1; c < component_count; ++c) {
    td.links.emplace_back(representative[c - 1], representative[c]);
  }
  return td;
}

TreeDecomposition GridDecomposition(int planes, int per_plane) {
  if (planes < 0 || per_plane < 0) {
    throw Error(ErrorCode::kInvalidArgument, "grid dimensions must be >= 0");
  }
  const int total = planes * per_plane;
  TreeDecomposition td;
  if (total == 0) return td;

  // Vertices listed along the longer dimension so that grid neighbours are at
  // most `span` apart in the order.
  const bool column_major = planes <= per_plane;
  const int span = std::min(planes, per_plane);
  std::vector<NodeId> order;
  order.reserve(total);
  if (column_major) {
    for (int j = 0; j < per_plane; ++j) {
      for (int p = 0; p < planes; ++p) order.push_back(p * per_plane + j);
    }
  } else {
    for (NodeId v = 0; v < total; ++v) order.push_back(v);
  }
  if (total <= span + 1) {
    td.bags.push_back(order);
    std::sort(td.bags.back().begin(), td.bags.back().end());
    return td;
  }
  for (int start = 0; start + span < total; ++start) {
    std::vector<NodeId> bag(order.begin() + start, order.begin() + start + span + 1);
    std::sort(bag.begin(), bag.end());
    if (!td.bags.empty()) {
      const int id = static_cast<int>(td.bags.size());
      td.links.emplace_back(id - 1, id);
    }
    td.bags.push_back(std::move(bag));
  }
  return td;
}

TreeDecomposition HeuristicDecomposition(const Graph& graph) {
  const int n = graph.node_count();
  std::vector<std::set<NodeId>> adjacent(n);
  for (const Edge& e : graph.edges()) {
    adjacent[e.u].insert(e.v);
    adjacent[e.v].insert(e.u);
  }
  std::set<std::pair<int, NodeId>> queue;
  for (NodeId v = 0; v < n; ++v) {
    queue.emplace(static_cast<int>(adjacent[v].size()), v);
  }

  TreeDecomposition td;
  std::vector<int> position(n, -1);
  std::vector<std::vector<NodeId>> later(n);
  for (int step = 0; step < n; ++step) {
    const NodeId v = queue.begin()->second;
    queue.erase(queue.begin());
    position[v] = step;
    later[v].assign(adjacent[v].begin(), adjacent[v].end());

    std::vector<NodeId> bag = later[v];
    bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
    td.bags.push_back(std::move(bag));

    for (NodeId x : later[v]) {
      queue.erase({static_cast<int>(adjacent[x].size()), x});
      adjacent[x].erase(v);
    }
    for (size_t i = 0; i < later[v].size(); ++i) {
      for (size_t k = i + 1; k < later[v].size(); ++k) {
        adjacent[later[v][i]].insert(later[v][k]);
        adjacent[later[v][k]].insert(later[v][i]);
      }
    }
    for (NodeId x : later[v]) {
      queue.emplace(static_cast<int>(adjacent[x].size()), x);
    }
    adjacent[v].clear();
  }

  // Bag i belongs to the i-th eliminated vertex; its parent is the bag of the
  // earliest-eliminated later neighbour.
  std::vector<NodeId> eliminated(n);
  for (NodeId v = 0; v < n; ++v) eliminated[position[v]] = v;
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    const NodeId v = eliminated[i];
    int parent = -1;
    for (NodeId x : later[v]) {
      if (parent < 0 || position[x] < parent) parent = position[x];
    }
    if (parent >= 0) {
      td.links.emplace_back(i, parent);
    } else {
      if (previous_root >= 0) td.links.emplace_back(previous_root, i);
      previous_root = i;
    }
  }
  return td;
}

TreeDecomposition AutoDecomposition(const Graph& graph) {
  return graph.is_acyclic() ? TreeDecompositionOfForest(graph)
                            : HeuristicDecomposition(graph);
}

NiceDecomposition ToExtendedNice(const Graph& graph,
                                 const TreeDecomposition& decomposition) {
  const auto violations = ValidateDecomposition(graph, decomposition);
  if (!violations.empty()) {
    throw Error(ErrorCode::kInvalidDecomposition, violations.front().message);
  }
  NiceBuilder builder(graph);
  const int t = static_cast<int>(decomposition.bags.size());
  if (t == 0) {
    builder.Leaf();
    return builder.Take();
  }

  std::vector<std::vector<int>> adjacent(t);
  for (const auto& [a, b] : decomposition.links) {
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }
  const int root = decomposition.root >= 0 ? decomposition.root : 0;
  std::vector<int> parent(t, -1), preorder;
  preorder.reserve(t);
  std::vector<int> stack = {root};
  parent[root] = root;
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    preorder.push_back(a);
    for (auto it = adjacent[a].rbegin(); it != adjacent[a].rend(); ++it) {
      if (parent[*it] < 0) {
        parent[*it] = a;
        stack.push_back(*it);
      }
    }
  }

  std::vector<std::vector<int>> branches(t);
  std::vector<int> top(t, -1);
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const int a = *it;
    const auto& bag = decomposition.bags[a];
    int at = -1;
    if (branches[a].empty()) {
      at = builder.Transition(builder.Leaf(), {}, bag);
    } else {
      at = branches[a].front();
      for (size_t i = 1; i < branches[a].size(); ++i) {
        at = builder.Join(at, branches[a][i]);
      }
    }
    top[a] = at;
    if (a != root) {
      branches[parent[a]].push_back(
          builder.Transition(at, bag, decomposition.bags[parent[a]]));
    }
  }
  builder.Transition(top[root], decomposition.bags[root], {});
  return builder.Take();
}

std::vector<std::string> ValidateNice(const Graph& graph,
                                      const NiceDecomposition& nice) {
  std::vector<std::string> out;
  const int count = static_cast<int>(nice.nodes.size());
  if (count == 0) {
    out.push_back("decomposition has no nodes");
    return out;
  }
  auto fail = [&](int i, const std::string& what) {
    out.push_back("node " + std::to_string(i) + " (" +
                  std::string(NiceKindName(nice.nodes[i].kind)) + "): " + what);
  };

  std::vector<int> parents(count, 0);
  std::vector<int> introduced(graph.edge_count(), 0);
  bool structure_ok = true;
  for (int i = 0; i < count; ++i) {
    const NiceNode& node = nice.nodes[i];
    if (!std::is_sorted(node.bag.begin(), node.bag.end()) ||
        std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end()) {
      fail(i, "bag is not a sorted set");
      structure_ok = false;
      continue;
    }
    const int want_children = node.kind == NiceKind::kLeaf   ? 0
                              : node.kind == NiceKind::kJoin ? 2
                                                             : 1;
    const int have_children = (node.left >= 0) + (node.right >= 0);
    if (have_children != want_children || (node.left < 0 && node.right >= 0)) {
      fail(i, "expected " + std::to_string(want_children) + " children");
      structure_ok = false;
      continue;
    }
    bool children_ok = true;
    for (int c : {node.left, node.right}) {
      if (c < 0) continue;
      if (c >= i) {
        fail(i, "child " + std::to_string(c) + " does not precede its parent");
        children_ok = false;
      } else {
        ++parents[c];
      }
    }
    if (!children_ok) {
      structure_ok = false;
      continue;
    }
    const std::vector<NodeId>* child = node.left >= 0 ? &nice.nodes[node.left].bag : nullptr;
    switch (node.kind) {
      case NiceKind::kLeaf:
        if (!node.bag.empty()) fail(i, "leaf bag is not empty");
        break;
      case NiceKind::kIntroduceVertex: {
        std::vector<NodeId> expect = *child;
        if (node.vertex < 0 || node.vertex >= graph.node_count() ||
            Contains(expect, node.vertex)) {
          fail(i, "vertex " + std::to_string(node.vertex) + " cannot be introduced");
          break;
        }
        expect.insert(std::lower_bound(expect.begin(), expect.end(), node.vertex),
                      node.vertex);
        if (expect != node.bag) fail(i, "bag is not child bag plus the vertex");
        break;
      }
      case NiceKind::kForget: {
        std::vector<NodeId> expect = *child;
        if (!Contains(expect, node.vertex)) {
          fail(i, "vertex " + std::to_string(node.vertex) + " is not in child bag");
          break;
        }
        expect.erase(std::lower_bound(expect.begin(), expect.end(), node.vertex));
        if (expect != node.bag) fail(i, "bag is not child bag minus the vertex");
        break;
      }
      case NiceKind::kIntroduceEdge: {
        if (node.edge < 0 || node.edge >= graph.edge_count()) {
          fail(i, "edge id " + std::to_string(node.edge) + " out of range");
          break;
        }
        ++introduced[node.edge];
        const Edge& e = graph.edge(node.edge);
        if (!Contains(node.bag, e.u) || !Contains(node.bag, e.v)) {
          fail(i, "edge " + EdgeText(e) + " endpoints not in bag");
        }
        if (*child != node.bag) fail(i, "bag differs from child bag");
        break;
      }
      case NiceKind::kJoin:
        if (*child != node.bag || nice.nodes[node.right].bag != node.bag) {
          fail(i, "children bags differ from join bag");
        }
        break;
    }
  }
  if (!structure_ok) return out;

  for (int i = 0; i + 1 < count; ++i) {
    if (parents[i] != 1) fail(i, "has " + std::to_string(parents[i]) + " parents");
  }
  if (parents[count - 1] != 0) fail(count - 1, "root has a parent");
  if (!nice.nodes.back().bag.empty()) fail(count - 1, "root bag is not empty");
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (introduced[e] != 1) {
      out.push_back("edge " + EdgeText(graph.edge(e)) + " introduced " +
                    std::to_string(introduced[e]) + " times");
    }
  }
  if (!out.empty()) return out;

  TreeDecomposition as_tree;
  for (int i = 0; i < count; ++i) {
    as_tree.bags.push_back(nice.nodes[i].bag);
    for (int c : {nice.nodes[i].left, nice.nodes[i].right}) {
      if (c >= 0) as_tree.links.emplace_back(c, i);
    }
  }
  for (const auto& v : ValidateDecomposition(graph, as_tree)) {
    out.push_back(v.message);
  }
  return out;
}

TreeDecomposition ReadTreeDecomposition(std::string_view text) {
  internal::TokenLines in(text);
  in.Require("header");
  if (in.size() != 2 || in[0] != "TREEDEC" || in[1] != "v1") {
    in.Fail("expected header 'TREEDEC v1'");
  }
  in.Require("bags line");
  if (in.size() != 4 || in[0] != "bags" || in[2] != "width") {
    in.Fail("expected 'bags <count> width <w>'");
  }
  const long long t = in.NonNegativeInt(1);
  const long long declared_width = in.Int(3);
  if (t < 1) in.Fail("a decomposition needs at least one bag");
  if (t > 100'000'000) in.Fail("bag count too large");

  TreeDecomposition td;
  td.bags.resize(t);
  std::vector<char> seen(t, 0);
  for (long long i = 0; i < t; ++i) {
    in.Require("bag line");
    in.ExpectKeyword("bag", internal::TokenLines::kAnyArity);
    if (in.size() < 2) in.Fail("bag line needs an id");
    const long long id = in.NonNegativeInt(1);
    if (id >= t) in.Fail("bag id " + std::to_string(id) + " out of range");
    if (seen[id]) in.Fail("bag " + std::to_string(id) + " listed twice");
    seen[id] = 1;
    auto& bag = td.bags[id];
    for (size_t k = 2; k < in.size(); ++k) {
      const long long v = in.NonNegativeInt(k);
      if (v > 100'000'000) in.Fail("vertex id too large");
      bag.push_back(static_cast<NodeId>(v));
    }
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      in.Fail("bag " + std::to_string(id) + " repeats a vertex");
    }
  }
  if (td.width() != declared_width) {
    throw ParseError(in.line(), "declared width " + std::to_string(declared_width) +
                                    " but largest bag gives " +
                                    std::to_string(td.width()));
  }
  for (long long i = 0; i + 1 < t; ++i) {
    in.Require("link line");
    in.ExpectKeyword("link", 2);
    const long long a = in.NonNegativeInt(1);
    const long long b = in.NonNegativeInt(2);
    if (a >= t || b >= t) in.Fail("link names a missing bag");
    td.links.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!LinksFormTree(static_cast<int>(t), td.links)) {
    throw ParseError(in.line(), "links do not form a tree");
  }
  if (in.Next()) {
    in.ExpectKeyword("root", 1);
    const long long r = in.NonNegativeInt(1);
    if (r >= t) in.Fail("root names a missing bag");
    td.root = static_cast<int>(r);
    if (in.Next()) in.Fail("unexpected content after root line");
  }
  return td;
}

std::string WriteTreeDecomposition(const TreeDecomposition& decomposition) {
  std::ostringstream out;
  out << "TREEDEC v1\n";
  out << "bags " << decomposition.bags.size() << " width " << decomposition.width()
      << "\n";
  for (size_t i = 0; i < decomposition.bags.size(); ++i) {
    out << "bag " << i;
    for (NodeId v : decomposition.bags[i]) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [a, b] : decomposition.links) out << "link " << a << ' ' << b << '\n';
  if (decomposition.root >= 0) out << "root " << decomposition.root << '\n';
  return out.str();
}

}  // namespace interdict
