#include "gmet/minors.hpp"

#include "gmet/lp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace gmet {

namespace {

// ---------------------------------------------------------------------------
// K_{2,3} subdivision search
// ---------------------------------------------------------------------------

struct SubdivisionSearch {
  const std::vector<std::vector<int>>* adj = nullptr;
  std::array<int, 5> branch{};  // [0..2] spokes, [3..4] hubs (host labels)
  std::vector<char> used;
  std::vector<char> is_branch;
  std::vector<std::vector<int>> paths;
  int len_cap = 0;

  bool solve(int edge_idx) {
    if (edge_idx == 6) return true;
    const int s = branch[edge_idx / 2];
    const int h = branch[3 + edge_idx % 2];
    std::vector<int> path{s};
    return dfs(edge_idx, s, h, path, 0);
  }

  bool dfs(int edge_idx, int cur, int target, std::vector<int>& path, int depth) {
    for (int nb : (*adj)[cur]) {
      if (nb == target) {
        if (depth + 1 > len_cap) continue;
        path.push_back(target);
        paths.push_back(path);
        if (solve(edge_idx + 1)) return true;
        paths.pop_back();
        path.pop_back();
        continue;
      }
      if (depth + 2 > len_cap || used[nb] || is_branch[nb]) continue;
      used[nb] = 1;
      path.push_back(nb);
      if (dfs(edge_idx, nb, target, path, depth + 1)) return true;
      path.pop_back();
      used[nb] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<MinorCertificate> has_k23_subdivision(const WeightedGraph& g) {
  if (g.n < 5) return std::nullopt;
  auto adj = g.adjacency();
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::vector<int> by_degree;
  for (int v = 1; v <= g.n; ++v) by_degree.push_back(v);
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
    return a < b;
  });
  std::vector<int> hubs, spokes;
  for (int v : by_degree) {
    if (adj[v].size() >= 3) hubs.push_back(v);
    if (adj[v].size() >= 2) spokes.push_back(v);
  }
  if (hubs.size() < 2 || spokes.size() < 5) return std::nullopt;

  for (size_t h1 = 0; h1 < hubs.size(); ++h1) {
    for (size_t h2 = h1 + 1; h2 < hubs.size(); ++h2) {
      std::vector<int> rest;
      for (int v : spokes) {
        if (v != hubs[h1] && v != hubs[h2]) rest.push_back(v);
      }
      if (rest.size() < 3) continue;
      for (size_t s1 = 0; s1 < rest.size(); ++s1) {
        for (size_t s2 = s1 + 1; s2 < rest.size(); ++s2) {
          for (size_t s3 = s2 + 1; s3 < rest.size(); ++s3) {
            SubdivisionSearch search;
            search.adj = &adj;
            search.branch = {rest[s1], rest[s2], rest[s3], hubs[h1], hubs[h2]};
            search.used.assign(g.n + 1, 0);
            search.is_branch.assign(g.n + 1, 0);
            for (int b : search.branch) search.is_branch[b] = 1;
            for (int cap = 1; cap <= g.n - 1; ++cap) {
              search.len_cap = cap;
              search.paths.clear();
              std::fill(search.used.begin(), search.used.end(), 0);
              if (search.solve(0)) {
                MinorCertificate cert;
                cert.branch = search.branch;
                cert.paths = search.paths;
                return cert;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool certificate_valid(const WeightedGraph& g, const MinorCertificate& cert) {
  if (cert.paths.size() != 6) return false;
  std::vector<char> branch_mark(g.n + 1, 0);
  for (int b : cert.branch) {
    if (b < 1 || b > g.n || branch_mark[b]) return false;
    branch_mark[b] = 1;
  }
  std::vector<char> internal_mark(g.n + 1, 0);
  for (int k = 0; k < 6; ++k) {
    const auto& p = cert.paths[k];
    if (p.size() < 2) return false;
    if (p.front() != cert.branch[k / 2] || p.back() != cert.branch[3 + k % 2]) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      if (!g.has_edge(p[i], p[i + 1])) return false;
    }
    for (size_t i = 1; i + 1 < p.size(); ++i) {
      if (branch_mark[p[i]] || internal_mark[p[i]]) return false;
      internal_mark[p[i]] = 1;
    }
  }
  return true;
}

namespace {

// ---------------------------------------------------------------------------
// Brute-force minor testing on bitset graphs (0-based labels)
// ---------------------------------------------------------------------------

struct BitGraph {
  int n = 0;
  std::vector<uint32_t> adj;
};

BitGraph to_bitgraph(const WeightedGraph& g) {
  BitGraph b;
  b.n = g.n;
  b.adj.assign(g.n, 0);
  for (const Edge& e : g.edges) {
    b.adj[e.u - 1] |= uint32_t(1) << (e.v - 1);
    b.adj[e.v - 1] |= uint32_t(1) << (e.u - 1);
  }
  return b;
}

int edge_count(const BitGraph& g) {
  int total = 0;
  for (uint32_t row : g.adj) total += std::popcount(row);
  return total / 2;
}

BitGraph remove_vertex(const BitGraph& g, int v) {
  BitGraph h;
  h.n = g.n - 1;
  h.adj.reserve(h.n);
  const uint32_t low_mask = (uint32_t(1) << v) - 1;
  for (int i = 0; i < g.n; ++i) {
    if (i == v) continue;
    uint32_t row = g.adj[i];
    h.adj.push_back((row & low_mask) | ((row >> (v + 1)) << v));
  }
  return h;
}

BitGraph contract_pair(const BitGraph& g, int u, int v) {
  BitGraph t = g;
  t.adj[u] |= t.adj[v];
  for (int i = 0; i < t.n; ++i) {
    if (t.adj[v] & (uint32_t(1) << i)) t.adj[i] |= uint32_t(1) << u;
  }
  t.adj[u] &= ~(uint32_t(1) << u);
  return remove_vertex(t, v);
}

std::vector<uint32_t> component_masks(const BitGraph& g) {
  std::vector<uint32_t> comps;
  uint32_t seen = 0;
  const uint32_t all = g.n == 32 ? ~uint32_t(0) : (uint32_t(1) << g.n) - 1;
  while (seen != all) {
    int start = std::countr_one(seen);
    uint32_t comp = uint32_t(1) << start;
    while (true) {
      uint32_t grown = comp;
      for (int i = 0; i < g.n; ++i) {
        if (comp & (uint32_t(1) << i)) grown |= g.adj[i];
      }
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

BitGraph induced(const BitGraph& g, uint32_t mask) {
  std::vector<int> keep;
  for (int i = 0; i < g.n; ++i) {
    if (mask & (uint32_t(1) << i)) keep.push_back(i);
  }
  BitGraph h;
  h.n = static_cast<int>(keep.size());
  h.adj.assign(h.n, 0);
  for (int a = 0; a < h.n; ++a) {
    for (int b = a + 1; b < h.n; ++b) {
      if (g.adj[keep[a]] & (uint32_t(1) << keep[b])) {
        h.adj[a] |= uint32_t(1) << b;
        h.adj[b] |= uint32_t(1) << a;
      }
    }
  }
  return h;
}

// Injective embedding mapping every pattern edge onto a host edge.
bool subgraph_embed(const BitGraph& pattern, const BitGraph& host) {
  if (pattern.n > host.n) return false;
  std::vector<int> order(pattern.n);
  for (int i = 0; i < pattern.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(pattern.adj[a]) > std::popcount(pattern.adj[b]);
  });
  std::vector<int> img(pattern.n, -1);
  uint32_t used = 0;

  auto rec = [&](auto&& self, size_t k) -> bool {
    if (k == order.size()) return true;
    const int p = order[k];
    for (int h = 0; h < host.n; ++h) {
      const uint32_t hbit = uint32_t(1) << h;
      if (used & hbit) continue;
      if (std::popcount(host.adj[h]) < std::popcount(pattern.adj[p])) continue;
      bool ok = true;
      for (size_t j = 0; j < k && ok; ++j) {
        const int q = order[j];
        if (pattern.adj[p] & (uint32_t(1) << q)) {
          if (!(host.adj[h] & (uint32_t(1) << img[q]))) ok = false;
        }
      }
      if (!ok) continue;
      img[p] = h;
      used |= hbit;
      if (self(self, k + 1)) return true;
      used &= ~hbit;
      img[p] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

struct VecHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    size_t h = 1469598103934665603ULL;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

struct MinorSearch {
  BitGraph pattern;
  int pattern_edges = 0;
  std::unordered_map<std::vector<uint32_t>, bool, VecHash> memo;

  bool rec(const BitGraph& g) {
    if (g.n < pattern.n || edge_count(g) < pattern_edges) return false;
    auto comps = component_masks(g);
    if (comps.size() > 1) {
      for (uint32_t mask : comps) {
        if (std::popcount(mask) >= pattern.n && rec(induced(g, mask))) return true;
      }
      return false;
    }
    if (subgraph_embed(pattern, g)) return true;
    if (g.n == pattern.n) return false;

    auto it = memo.find(g.adj);
    if (it != memo.end()) return it->second;

    bool found = false;
    for (int v = 0; v < g.n && !found; ++v) {
      found = rec(remove_vertex(g, v));
    }
    for (int u = 0; u < g.n && !found; ++u) {
      for (int v = u + 1; v < g.n && !found; ++v) {
        if (g.adj[u] & (uint32_t(1) << v)) found = rec(contract_pair(g, u, v));
      }
    }
    memo.emplace(g.adj, found);
    return found;
  }
};

}  // namespace

bool has_minor(const WeightedGraph& g, const WeightedGraph& pattern, int cap) {
  if (g.n > cap) {
    throw std::invalid_argument("minor test needs n <= " + std::to_string(cap) + " (got n = " +
                                std::to_string(g.n) + "); raise the cap to override");
  }
  MinorSearch search;
  search.pattern = to_bitgraph(pattern);
  search.pattern_edges = static_cast<int>(pattern.edges.size());
  return search.rec(to_bitgraph(g));
}

const RatMatrix& k23_distance_pattern() {
  static const RatMatrix m = rat_matrix_from(5, {{0, 2, 2, 1, 1},
                                                 {2, 0, 2, 1, 1},
                                                 {2, 2, 0, 1, 1},
                                                 {1, 1, 1, 0, 2},
                                                 {1, 1, 1, 2, 0}});
  return m;
}

std::optional<DistanceMinorWitness> k23_distance_minor_test(const RatMatrix& m, int split_cap) {
  const int n = m.n;
  if (n < 5) return std::nullopt;
  SplitDecomposition dec = decompose(m, split_cap);
  const size_t nvars = 1 + dec.splits.size();

  std::vector<int> comb(5);
  for (int i = 0; i < 5; ++i) comb[i] = i + 1;
  auto advance = [&]() {
    int i = 4;
    while (i >= 0 && comb[i] == n - (4 - i)) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < 5; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };

  do {
    for (int p = 0; p < 5; ++p) {
      for (int q = p + 1; q < 5; ++q) {
        // positions p,q play the 2-side of K_{2,3}
        std::vector<std::vector<Rat>> A;
        std::vector<Rat> b;
        A.reserve(10);
        b.reserve(10);
        for (int a = 0; a < 5; ++a) {
          for (int c = a + 1; c < 5; ++c) {
            const int va = comb[a], vc = comb[c];
            std::vector<Rat> row(nvars, Rat(0));
            row[0] = dec.residue.at(va, vc);
            for (size_t s = 0; s < dec.splits.size(); ++s) {
              const uint32_t mask = dec.splits[s].mask;
              const bool ia = mask & (uint32_t(1) << (va - 1));
              const bool ic = mask & (uint32_t(1) << (vc - 1));
              row[1 + s] = (ia != ic) ? 1 : 0;
            }
            const bool a_two = a == p || a == q;
            const bool c_two = c == p || c == q;
            A.push_back(std::move(row));
            b.push_back(a_two != c_two ? Rat(1) : Rat(2));
          }
        }
        auto sol = lp_feasible_point(std::move(A), std::move(b));
        if (!sol) continue;
        DistanceMinorWitness w;
        w.indices = comb;
        w.two_side = {comb[p], comb[q]};
        Rat lambda0 = (*sol)[0];
        if (lambda0 > 0) {
          Rat t = 1 / lambda0;
          w.c = t;
          w.lambda0 = 1;
          w.lambda.reserve(dec.splits.size());
          for (size_t s = 0; s < dec.splits.size(); ++s) w.lambda.push_back(t * (*sol)[1 + s]);
        } else {
          w.c = 1;
          w.lambda0 = 0;
          w.lambda.assign(sol->begin() + 1, sol->end());
        }
        return w;
      }
    }
  } while (advance());
  return std::nullopt;
}

std::optional<AdversarialWeighting> adversarial_weighting_k23(const WeightedGraph& g) {
  auto cert = has_k23_subdivision(g);
  if (!cert) return std::nullopt;

  std::vector<Rat> w(g.edges.size(), Rat(0));
  std::vector<char> on_path(g.edges.size(), 0);
  Rat max_path_edge(0);
  for (const auto& path : cert->paths) {
    const Rat step(1, static_cast<unsigned long>(path.size() - 1));
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      int idx = g.edge_index(path[i], path[i + 1]);
      w[idx] = step;
      on_path[idx] = 1;
    }
    if (step > max_path_edge) max_path_edge = step;
  }
  Rat heavy = Rat(g.n - 1) * max_path_edge;
  if (heavy < 2) heavy = 2;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!on_path[i]) w[i] = heavy;
  }
  return AdversarialWeighting{std::move(w), std::move(*cert)};
}

}  // namespace gmet
