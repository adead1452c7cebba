#pragma once

#include "gmet/graph.hpp"
#include "gmet/metric.hpp"

#include <cstdint>
#include <vector>

namespace gmet {

// Subsets of [n] are bitmasks: bit v-1 stands for vertex v.
uint32_t subset_mask(const std::vector<int>& S, int n);
std::vector<int> mask_members(uint32_t mask, int n);

// A bipartition with strictly positive isolation index. The canonical
// representative is the side not containing vertex n.
struct Split {
  uint32_t mask = 0;
  std::vector<int> members;
  Rat alpha;
};

inline constexpr int kDefaultSplitCap = 16;

// 0/1 semimetric valuing 1 exactly on pairs separated by (S, complement).
RatMatrix cut_metric(int n, uint32_t s_mask);
RatMatrix cut_metric(int n, const std::vector<int>& S);

// Half the min-max expression over a,a' in A and b,b' in B; always >= 0.
// A and B must be nonempty and disjoint.
Rat isolation_index(const RatMatrix& m, const std::vector<int>& A, const std::vector<int>& B);
Rat isolation_index(const RatMatrix& m, uint32_t a_mask, uint32_t b_mask);

// All canonical subsets with positive isolation index, masks ascending.
// Scans 2^(n-1) subsets; throws if n exceeds cap.
std::vector<Split> enumerate_splits(const RatMatrix& m, int cap = kDefaultSplitCap);

// m = residue + sum alpha_S * delta(S), with a split-prime residue.
struct SplitDecomposition {
  std::vector<Split> splits;
  RatMatrix residue;
};

// Subtracts every split of the original metric in one pass. Aborts loudly if
// the residue comes out negative or keeps a split; either would falsify the
// decomposition identity this relies on.
SplitDecomposition decompose(const RatMatrix& m, int cap = kDefaultSplitCap);

bool is_totally_decomposable(const RatMatrix& m, int cap = kDefaultSplitCap);

// One coordinate per split: point i reads alpha_S where i is in S, else 0.
// The l1 distances of the result reproduce m exactly. Throws if m is not
// totally decomposable.
PointSet l1_embed(const RatMatrix& m, int cap = kDefaultSplitCap);

// 0/1 weighting per edge, 1 exactly on bridges of (S, complement).
struct CutWeighting {
  uint32_t mask = 0;
  std::vector<int> values;  // parallel to g.edges
};
CutWeighting cut_weighting(const WeightedGraph& g, uint32_t s_mask);
CutWeighting cut_weighting(const WeightedGraph& g, const std::vector<int>& S);

// Reweights g by phi + x * Delta(S). Requires S to be a split of the graph's
// distance matrix and x >= -alpha; the new distance matrix is the old one
// plus x * delta(S).
WeightedGraph apply_cut_shift(const WeightedGraph& g, const std::vector<int>& S, const Rat& x,
                              int cap = kDefaultSplitCap);

// psi = phi - sum alpha_S * Delta(S) over the splits of the graph's metric,
// subtracted in one pass in canonical order. Throws with a diagnostic if an
// edge weight would go negative. D under psi is the split-prime residue.
std::vector<Rat> split_prime_residue_weighting(const WeightedGraph& g, int cap = kDefaultSplitCap);

}  // namespace gmet
