#include "gmet/splits.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmet {

uint32_t subset_mask(const std::vector<int>& S, int n) {
  if (n > 31) throw std::invalid_argument("subset operations support at most 31 vertices");
  uint32_t mask = 0;
  for (int v : S) {
    if (v < 1 || v > n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    uint32_t bit = uint32_t(1) << (v - 1);
    if (mask & bit) throw std::invalid_argument("repeated vertex " + std::to_string(v));
    mask |= bit;
  }
  return mask;
}

std::vector<int> mask_members(uint32_t mask, int n) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (mask & (uint32_t(1) << (v - 1))) out.push_back(v);
  }
  return out;
}

RatMatrix cut_metric(int n, uint32_t s_mask) {
  RatMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const bool in_i = s_mask & (uint32_t(1) << (i - 1));
    for (int j = i + 1; j <= n; ++j) {
      const bool in_j = s_mask & (uint32_t(1) << (j - 1));
      if (in_i != in_j) {
        m.at(i, j) = 1;
        m.at(j, i) = 1;
      }
    }
  }
  return m;
}

RatMatrix cut_metric(int n, const std::vector<int>& S) { return cut_metric(n, subset_mask(S, n)); }

namespace {

// Min over unordered pairs {a,a'} x {b,b'} of max(t1, t2, 0), halved. The
// expression is invariant under swapping a,a' or b,b', so ordered pairs are
// redundant; the running minimum exits at 0, the floor set by the third term.
Rat isolation_core(const RatMatrix& m, const std::vector<int>& A, const std::vector<int>& B) {
  bool have = false;
  Rat best;
  Rat t1, t2;
  for (size_t ai = 0; ai < A.size(); ++ai) {
    for (size_t aj = ai; aj < A.size(); ++aj) {
      const int a = A[ai], a2 = A[aj];
      const Rat& daa = m.at(a, a2);
      for (size_t bi = 0; bi < B.size(); ++bi) {
        for (size_t bj = bi; bj < B.size(); ++bj) {
          const int b = B[bi], b2 = B[bj];
          t1 = m.at(a, b) + m.at(a2, b2) - daa - m.at(b, b2);
          t2 = m.at(a, b2) + m.at(a2, b) - daa - m.at(b, b2);
          if (t2 > t1) t1 = t2;
          if (t1 < 0) t1 = 0;
          if (!have || t1 < best) {
            best = t1;
            have = true;
            if (best == 0) return best;
          }
        }
      }
    }
  }
  best /= 2;
  return best;
}

}  // namespace

Rat isolation_index(const RatMatrix& m, const std::vector<int>& A, const std::vector<int>& B) {
  if (A.empty() || B.empty()) throw std::invalid_argument("isolation index of an empty set");
  uint32_t am = subset_mask(A, m.n), bm = subset_mask(B, m.n);
  if (am & bm) throw std::invalid_argument("isolation index of overlapping sets");
  return isolation_core(m, A, B);
}

Rat isolation_index(const RatMatrix& m, uint32_t a_mask, uint32_t b_mask) {
  if (a_mask == 0 || b_mask == 0) throw std::invalid_argument("isolation index of an empty set");
  if (a_mask & b_mask) throw std::invalid_argument("isolation index of overlapping sets");
  return isolation_core(m, mask_members(a_mask, m.n), mask_members(b_mask, m.n));
}

std::vector<Split> enumerate_splits(const RatMatrix& m, int cap) {
  const int n = m.n;
  if (n > cap) {
    throw std::invalid_argument("split enumeration needs n <= " + std::to_string(cap) +
                                " (got n = " + std::to_string(n) + "); raise the cap to override");
  }
  std::vector<Split> out;
  if (n < 2) return out;
  std::vector<int> A, B;
  A.reserve(n);
  B.reserve(n);
  for (uint32_t mask = 1; mask < (uint32_t(1) << (n - 1)); ++mask) {
    A.clear();
    B.clear();
    for (int v = 1; v <= n; ++v) {
      if (mask & (uint32_t(1) << (v - 1))) {
        A.push_back(v);
      } else {
        B.push_back(v);
      }
    }
    Rat alpha = isolation_core(m, A, B);
    if (alpha > 0) out.push_back(Split{mask, A, std::move(alpha)});
  }
  return out;
}

SplitDecomposition decompose(const RatMatrix& m, int cap) {
  SplitDecomposition dec;
  dec.splits = enumerate_splits(m, cap);
  dec.residue = m;
  const int n = m.n;
  for (const Split& s : dec.splits) {
    for (int i = 1; i <= n; ++i) {
      const bool in_i = s.mask & (uint32_t(1) << (i - 1));
      for (int j = i + 1; j <= n; ++j) {
        const bool in_j = s.mask & (uint32_t(1) << (j - 1));
        if (in_i != in_j) {
          dec.residue.at(i, j) -= s.alpha;
          dec.residue.at(j, i) -= s.alpha;
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (dec.residue.at(i, j) < 0) {
        throw std::runtime_error(
            "decomposition residue has negative entry at (" + std::to_string(i) + "," +
            std::to_string(j) + ") = " + fraction_string(dec.residue.at(i, j)) +
            "; this contradicts the split decomposition identity");
      }
    }
  }
  if (!enumerate_splits(dec.residue, cap).empty()) {
    throw std::runtime_error(
        "decomposition residue is not split-prime; this contradicts the split decomposition "
        "identity");
  }
  return dec;
}

bool is_totally_decomposable(const RatMatrix& m, int cap) {
  return decompose(m, cap).residue.is_zero();
}

PointSet l1_embed(const RatMatrix& m, int cap) {
  SplitDecomposition dec = decompose(m, cap);
  if (!dec.residue.is_zero()) {
    throw std::invalid_argument("metric is not totally decomposable, no exact l1 embedding");
  }
  PointSet ps;
  ps.p = 1.0;
  ps.dim = static_cast<int>(dec.splits.size());
  ps.points.assign(m.n, std::vector<Rat>(dec.splits.size(), Rat(0)));
  for (size_t k = 0; k < dec.splits.size(); ++k) {
    for (int v = 1; v <= m.n; ++v) {
      if (dec.splits[k].mask & (uint32_t(1) << (v - 1))) ps.points[v - 1][k] = dec.splits[k].alpha;
    }
  }
  return ps;
}

CutWeighting cut_weighting(const WeightedGraph& g, uint32_t s_mask) {
  if (g.n < 32 && (s_mask >> g.n) != 0) throw std::invalid_argument("subset mask out of range");
  CutWeighting cw;
  cw.mask = s_mask;
  cw.values.resize(g.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const bool in_u = s_mask & (uint32_t(1) << (g.edges[i].u - 1));
    const bool in_v = s_mask & (uint32_t(1) << (g.edges[i].v - 1));
    cw.values[i] = in_u != in_v ? 1 : 0;
  }
  return cw;
}

CutWeighting cut_weighting(const WeightedGraph& g, const std::vector<int>& S) {
  return cut_weighting(g, subset_mask(S, g.n));
}

WeightedGraph apply_cut_shift(const WeightedGraph& g, const std::vector<int>& S, const Rat& x,
                              int cap) {
  const uint32_t mask = subset_mask(S, g.n);
  const uint32_t full = (uint32_t(1) << g.n) - 1;
  if (mask == 0 || mask == full) {
    throw std::invalid_argument("S must be a proper nonempty vertex subset");
  }
  (void)cap;
  RatMatrix d = distance_matrix(g);
  Rat alpha = isolation_index(d, mask, full & ~mask);
  if (alpha == 0) throw std::invalid_argument("S is not a split of the graph's distance matrix");
  if (x < -alpha) {
    throw std::invalid_argument("shift x = " + fraction_string(x) + " below -alpha = -" +
                                fraction_string(alpha));
  }
  CutWeighting delta = cut_weighting(g, mask);
  std::vector<Rat> w = g.weights;
  for (size_t i = 0; i < w.size(); ++i) {
    if (delta.values[i]) w[i] += x;
    if (w[i] < 0) {
      throw std::invalid_argument("cut shift drives edge {" + std::to_string(g.edges[i].u) + "," +
                                  std::to_string(g.edges[i].v) + "} negative");
    }
  }
  return with_weights(g, std::move(w));
}

std::vector<Rat> split_prime_residue_weighting(const WeightedGraph& g, int cap) {
  RatMatrix d = distance_matrix(g);
  std::vector<Split> splits = enumerate_splits(d, cap);
  std::vector<Rat> psi = g.weights;
  for (const Split& s : splits) {
    CutWeighting delta = cut_weighting(g, s.mask);
    for (size_t i = 0; i < psi.size(); ++i) {
      if (delta.values[i]) psi[i] -= s.alpha;
    }
  }
  for (size_t i = 0; i < psi.size(); ++i) {
    if (psi[i] < 0) {
      throw std::runtime_error(
          "split-prime residue weighting drives edge {" + std::to_string(g.edges[i].u) + "," +
          std::to_string(g.edges[i].v) + "} to " + fraction_string(psi[i]) +
          "; the construction does not stay nonnegative on this input");
    }
  }
  return psi;
}

}  // namespace gmet
