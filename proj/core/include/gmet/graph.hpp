#pragma once

#include "gmet/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace gmet {

// Unordered vertex pair, 1-based labels, normalized so u < v.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(int a, int b);

// Simple connected undirected graph with exact nonnegative rational edge
// weights. Vertices are labeled 1..n. Immutable after construction; all
// operations below return fresh values.
struct WeightedGraph {
  int n = 0;
  std::vector<Edge> edges;   // sorted lexicographically
  std::vector<Rat> weights;  // parallel to edges

  // Validates simplicity, connectivity and weight nonnegativity.
  static WeightedGraph create(int n, std::vector<Edge> edges, std::vector<Rat> weights);

  int edge_index(int a, int b) const;  // -1 if absent
  bool has_edge(int a, int b) const { return edge_index(a, b) >= 0; }
  const Rat& weight_of(int a, int b) const;
  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const WeightedGraph&) const = default;
};

// Graph file format: comment lines start with '#'; first payload line is
// "graph <n>"; every following line is "<u> <v> <w>" with w a nonnegative
// decimal literal. Duplicate edges are rejected.
WeightedGraph parse_graph(const std::string& text);
std::string format_graph(const WeightedGraph& g);

// Same topology, new weighting.
WeightedGraph with_weights(const WeightedGraph& g, std::vector<Rat> weights);

// Contracts e = {u,v}: the merged vertex takes label min(u,v), labels above
// max(u,v) shift down by one, parallel edges keep the minimum weight.
WeightedGraph contract_edge(const WeightedGraph& g, Edge e);

// Removes e; throws if e is absent or removal disconnects the graph.
WeightedGraph delete_edge(const WeightedGraph& g, Edge e);

WeightedGraph add_edge_weighted(const WeightedGraph& g, Edge e, const Rat& w);

// (n-1) * max edge weight: any edge at least this heavy never carries a
// shortest path, so adding one leaves the distance matrix unchanged.
Rat heavy_weight(const WeightedGraph& g);

// A recipe turning a host graph into one of its minors: contract some edges,
// delete others, scale the kept weights by r.
struct EdgeOpPlan {
  std::vector<Edge> contract;
  std::vector<Edge> erase;
  Rat keep_scale = 1;
};

struct PlanApplication {
  WeightedGraph result;
  std::vector<int> vertex_map;  // host vertex (index 1..n) -> result vertex
};

// Applies contractions (ascending edge order), then deletions. Throws if the
// plan is inconsistent or the result is disconnected.
PlanApplication apply_plan(const WeightedGraph& h, const EdgeOpPlan& plan);

// Weighting psi on the host h realizing a scaled copy of the minor's metric:
// 0 on contracted edges, r * minor weight on kept edges, and a weight above
// the heavy bound on deleted edges. The spectrum of the host distance matrix
// under psi is the minor's spectrum scaled by r, padded with zeros.
// `minor` must match apply_plan(h, plan).result topologically.
std::vector<Rat> minor_weighting(const WeightedGraph& h, const EdgeOpPlan& plan,
                                 const WeightedGraph& minor);

}  // namespace gmet
