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

#ifndef INTERDICT_TREEWIDTH_HPP_
#define INTERDICT_TREEWIDTH_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "interdict/graph.hpp"

namespace interdict {

// Bags (each sorted ascending) joined by undirected links into a tree.
struct TreeDecomposition {
  std::vector<std::vector<NodeId>> bags;
  std::vector<std::pair<int, int>> links;
  int root = -1;  // -1: unspecified, bag 0 is used

  // Largest bag size minus one; -1 when there are no bags.
  int width() const;
};

enum class DecompositionViolationKind {
  kNotATree,               // links do not form a tree over the bags
  kBadVertex,              // bag lists an id outside the graph or twice
  kVertexNotCovered,       // a vertex is in no bag
  kEdgeNotCovered,         // no bag holds both endpoints of an edge
  kOccurrenceDisconnected  // the bags holding a vertex are not connected
};

std::string_view DecompositionViolationName(DecompositionViolationKind kind);

struct DecompositionViolation {
  DecompositionViolationKind kind;
  NodeId vertex = -1;     // witness vertex, when applicable
  Edge edge{-1, -1};      // witness edge, when applicable
  std::string message;
};

// Empty iff `decomposition` is a tree decomposition of `graph`.
std::vector<DecompositionViolation> ValidateDecomposition(
    const Graph& graph, const TreeDecomposition& decomposition);

// Width-1 decomposition of a forest: one bag per edge plus a singleton bag
// per isolated vertex. Edge bags are linked through shared vertices and
// components are chained together. Throws kNotAForest.
TreeDecomposition TreeDecompositionOfForest(const Graph& graph);

// Path decomposition of the planes x per_plane grid whose vertex
// (plane, j) has id plane * per_plane + j. Width min(planes, per_plane)
// whenever the grid has more vertices than that.
TreeDecomposition GridDecomposition(int planes, int per_plane);

// Min-degree elimination ordering (ties to the lowest id). Valid for any
// graph; the width is an upper bound on the treewidth only.
TreeDecomposition HeuristicDecomposition(const Graph& graph);

// Picks the width-1 construction for forests and the heuristic otherwise.
TreeDecomposition AutoDecomposition(const Graph& graph);

enum class NiceKind : std::uint8_t {
  kLeaf,
  kIntroduceVertex,
  kIntroduceEdge,
  kForget,
  kJoin
};

std::string_view NiceKindName(NiceKind kind);

struct NiceNode {
  NiceKind kind = NiceKind::kLeaf;
  std::vector<NodeId> bag;  // sorted
  NodeId vertex = -1;       // introduce-vertex and forget nodes
  EdgeId edge = -1;         // introduce-edge nodes
  int left = -1;            // only child, or first child of a join
  int right = -1;           // second child of a join
};

// Rooted extended nice decomposition. Children always precede their parent
// in `nodes`, so a forward scan is a valid bottom-up order; the root is the
// last node.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  int width() const;
};

// Rewrites a valid tree decomposition so that every step adds or removes one
// vertex, introduces one edge, or joins two identical bags. An edge is
// introduced right below the forget node of whichever endpoint is forgotten
// first. Throws kInvalidDecomposition when `decomposition` does not validate.
NiceDecomposition ToExtendedNice(const Graph& graph,
                                 const TreeDecomposition& decomposition);

// Empty iff `nice` satisfies every node-type rule, has empty leaf and root
// bags, is a tree decomposition of `graph`, and introduces each edge exactly
// once. Messages name the offending node.
std::vector<std::string> ValidateNice(const Graph& graph,
                                      const NiceDecomposition& nice);

// TREEDEC v1:
//   TREEDEC v1
//   bags <t> width <w>
//   bag <id> <v...>        (t lines)
//   link <a> <b>           (t-1 lines)
//   root <id>              (optional)
// The reader checks ids, the declared width and that links form a tree;
// vertex coverage is checked against a graph by ValidateDecomposition.
TreeDecomposition ReadTreeDecomposition(std::string_view text);
std::string WriteTreeDecomposition(const TreeDecomposition& decomposition);

}  // namespace interdict

#endif  // INTERDICT_TREEWIDTH_HPP_
