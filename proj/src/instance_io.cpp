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

#include "interdict/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "interdict/error.hpp"
#include "text_lines.hpp"

namespace interdict {

namespace {

constexpr long long kMaxCount = 100'000'000;

}  // namespace

Instance ReadInstance(std::string_view text) {
  internal::TokenLines in(text);

  in.Require("header");
  if (in.size() != 2 || in[0] != "INTERDICT" || in[1] != "v1") {
    in.Fail("expected header 'INTERDICT v1'");
  }

  Instance instance;
  in.Require("problem line");
  in.ExpectKeyword("problem", 1);
  if (in[1] == "edge") {
    instance.kind = ProblemKind::kEdgeInterdiction;
  } else if (in[1] == "facility") {
    instance.kind = ProblemKind::kFacilityInterdiction;
  } else {
    in.Fail("problem must be 'edge' or 'facility'");
  }

  in.Require("nodes line");
  in.ExpectKeyword("nodes", 1);
  const long long n = in.NonNegativeInt(1);
  if (n > kMaxCount) in.Fail("node count too large");
  instance.roles.assign(n, Role::kCustomer);
  instance.weights.assign(n, 0.0);
  std::vector<char> seen(n, 0);
  for (long long i = 0; i < n; ++i) {
    in.Require("node line");
    in.ExpectKeyword("node", internal::TokenLines::kAnyArity);
    if (in.size() < 3) in.Fail("node line needs an id and a role");
    const long long id = in.NonNegativeInt(1);
    if (id >= n) in.Fail("node id " + std::to_string(id) + " out of range");
    if (seen[id]) in.Fail("node " + std::to_string(id) + " listed twice");
    seen[id] = 1;
    if (in[2] == "F") {
      if (in.size() != 3) in.Fail("facility lines carry no weight");
      instance.roles[id] = Role::kFacility;
    } else if (in[2] == "C") {
      if (in.size() != 4) in.Fail("customer lines need exactly one weight");
      instance.roles[id] = Role::kCustomer;
      instance.weights[id] = in.Real(3);
    } else {
      in.Fail("role must be 'F' or 'C'");
    }
  }

  in.Require("edges line");
  in.ExpectKeyword("edges", 1);
  const long long m = in.NonNegativeInt(1);
  if (m > kMaxCount) in.Fail("edge count too large");
  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<unsigned long long> seen_edges;
  for (long long i = 0; i < m; ++i) {
    in.Require("edge line");
    in.ExpectKeyword("edge", 2);
    long long u = in.NonNegativeInt(1);
    long long v = in.NonNegativeInt(2);
    if (u >= n || v >= n) in.Fail("edge endpoint out of range");
    if (u == v) in.Fail("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen_edges.insert(static_cast<unsigned long long>(u) * n + v).second) {
      in.Fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }

  in.Require("budget line");
  in.ExpectKeyword("budget", 1);
  const long long r = in.NonNegativeInt(1);
  if (r > kMaxCount) in.Fail("budget too large");
  instance.budget = static_cast<int>(r);

  if (in.Next()) in.Fail("unexpected content after budget");

  instance.graph = Graph(static_cast<int>(n), edges);
  return instance;
}

std::string WriteInstance(const Instance& instance,
                          std::span<const NodeId> bipartite_left) {
  std::ostringstream out;
  out << "INTERDICT v1\n";
  out << "problem " << ProblemKindName(instance.kind) << "\n";
  out << "nodes " << instance.node_count() << "\n";
  for (NodeId v = 0; v < instance.node_count(); ++v) {
    if (instance.is_facility(v)) {
      out << "node " << v << " F\n";
    } else {
      out << "node " << v << " C "
          << internal::FormatShortest(instance.weights[v]) << "\n";
    }
  }
  out << "edges " << instance.graph.edge_count() << "\n";
  for (const Edge& e : instance.graph.edges()) {
    out << "edge " << e.u << " " << e.v << "\n";
  }
  out << "budget " << instance.budget << "\n";
  if (!bipartite_left.empty()) {
    out << "# bipartite U=";
    for (size_t i = 0; i < bipartite_left.size(); ++i) {
      out << (i ? "," : "") << bipartite_left[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

Instance ReadInstanceFile(const std::string& path) {
  return ReadInstance(ReadTextFile(path));
}

}  // namespace interdict
