#include "gmet/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gmet {

Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("loop edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  return a < b ? Edge{a, b} : Edge{b, a};
}

namespace {

void check_vertex(int v, int n) {
  if (v < 1 || v > n) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  }
}

bool connected(int n, const std::vector<Edge>& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n + 1);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace

WeightedGraph WeightedGraph::create(int n, std::vector<Edge> edges, std::vector<Rat> weights) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (edges.size() != weights.size()) throw std::invalid_argument("edge/weight count mismatch");

  std::vector<size_t> order(edges.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (Edge& e : edges) e = make_edge(e.u, e.v);
  for (const Edge& e : edges) {
    check_vertex(e.u, n);
    check_vertex(e.v, n);
  }
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return edges[a] < edges[b]; });

  WeightedGraph g;
  g.n = n;
  g.edges.reserve(edges.size());
  g.weights.reserve(edges.size());
  for (size_t i : order) {
    if (!g.edges.empty() && g.edges.back() == edges[i]) {
      throw std::invalid_argument("parallel edge {" + std::to_string(edges[i].u) + "," +
                                  std::to_string(edges[i].v) + "}");
    }
    if (weights[i] < 0) {
      throw std::invalid_argument("negative weight on edge {" + std::to_string(edges[i].u) + "," +
                                  std::to_string(edges[i].v) + "}");
    }
    g.edges.push_back(edges[i]);
    g.weights.push_back(weights[i]);
  }
  if (!connected(n, g.edges)) throw std::invalid_argument("disconnected graph");
  return g;
}

int WeightedGraph::edge_index(int a, int b) const {
  if (a == b) return -1;
  Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || !(*it == e)) return -1;
  return static_cast<int>(it - edges.begin());
}

const Rat& WeightedGraph::weight_of(int a, int b) const {
  int idx = edge_index(a, b);
  if (idx < 0) {
    throw std::invalid_argument("edge {" + std::to_string(a) + "," + std::to_string(b) + "} absent");
  }
  return weights[idx];
}

std::vector<std::vector<int>> WeightedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n + 1);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

WeightedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  std::vector<Rat> weights;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string kw;
      ls >> kw >> n;
      if (ls.fail() || kw != "graph" || n < 1) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": malformed header, expected 'graph <n>'");
      }
      std::string rest;
      if (ls >> rest) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed header");
      }
      continue;
    }
    int u, v;
    std::string w;
    ls >> u >> v >> w;
    if (ls.fail()) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed edge line");
    }
    std::string rest;
    if (ls >> rest) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed edge line");
    }
    if (u == v) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": loop edge " + std::to_string(u));
    }
    check_vertex(u, n);
    check_vertex(v, n);
    Rat weight;
    try {
      weight = rat_from_decimal(w);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed weight '" + w + "'");
    }
    if (weight < 0) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": negative weight");
    }
    Edge e = make_edge(u, v);
    for (const Edge& prev : edges) {
      if (prev == e) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate edge {" +
                                    std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      }
    }
    edges.push_back(e);
    weights.push_back(weight);
  }
  if (n < 0) throw std::invalid_argument("missing 'graph <n>' header");
  return WeightedGraph::create(n, std::move(edges), std::move(weights));
}

std::string format_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "graph " << g.n << "\n";
  for (size_t i = 0; i < g.edges.size(); ++i) {
    out << g.edges[i].u << " " << g.edges[i].v << " " << decimal_string(g.weights[i]) << "\n";
  }
  return out.str();
}

WeightedGraph with_weights(const WeightedGraph& g, std::vector<Rat> weights) {
  if (weights.size() != g.edges.size()) throw std::invalid_argument("edge/weight count mismatch");
  return WeightedGraph::create(g.n, g.edges, std::move(weights));
}

WeightedGraph contract_edge(const WeightedGraph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} absent");
  }
  // Merged vertex takes label e.u; labels above e.v shift down.
  auto relabel = [&](int w) {
    if (w == e.v) return e.u;
    return w > e.v ? w - 1 : w;
  };
  std::map<Edge, Rat> merged;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (g.edges[i] == e) continue;
    int a = relabel(g.edges[i].u);
    int b = relabel(g.edges[i].v);
    Edge img = make_edge(a, b);
    auto it = merged.find(img);
    if (it == merged.end()) {
      merged.emplace(img, g.weights[i]);
    } else if (g.weights[i] < it->second) {
      it->second = g.weights[i];
    }
  }
  std::vector<Edge> edges;
  std::vector<Rat> weights;
  for (auto& [edge, w] : merged) {
    edges.push_back(edge);
    weights.push_back(w);
  }
  return WeightedGraph::create(g.n - 1, std::move(edges), std::move(weights));
}

WeightedGraph delete_edge(const WeightedGraph& g, Edge e) {
  e = make_edge(e.u, e.v);
  int idx = g.edge_index(e.u, e.v);
  if (idx < 0) {
    throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} absent");
  }
  std::vector<Edge> edges = g.edges;
  std::vector<Rat> weights = g.weights;
  edges.erase(edges.begin() + idx);
  weights.erase(weights.begin() + idx);
  if (!connected(g.n, edges)) {
    throw std::invalid_argument("deleting {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} disconnects the graph");
  }
  return WeightedGraph::create(g.n, std::move(edges), std::move(weights));
}

WeightedGraph add_edge_weighted(const WeightedGraph& g, Edge e, const Rat& w) {
  e = make_edge(e.u, e.v);
  if (g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} already present");
  }
  std::vector<Edge> edges = g.edges;
  std::vector<Rat> weights = g.weights;
  edges.push_back(e);
  weights.push_back(w);
  return WeightedGraph::create(g.n, std::move(edges), std::move(weights));
}

Rat heavy_weight(const WeightedGraph& g) {
  Rat max_w(0);
  for (const Rat& w : g.weights) {
    if (w > max_w) max_w = w;
  }
  return Rat(g.n - 1) * max_w;
}

PlanApplication apply_plan(const WeightedGraph& h, const EdgeOpPlan& plan) {
  std::vector<Edge> contract = plan.contract;
  std::vector<Edge> erase = plan.erase;
  for (Edge& e : contract) e = make_edge(e.u, e.v);
  for (Edge& e : erase) e = make_edge(e.u, e.v);
  std::sort(contract.begin(), contract.end());
  std::sort(erase.begin(), erase.end());
  for (const Edge& e : contract) {
    if (std::binary_search(erase.begin(), erase.end(), e)) {
      throw std::invalid_argument("plan contracts and deletes the same edge {" +
                                  std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
  }
  if (plan.keep_scale < 0) throw std::invalid_argument("plan keep-scale must be nonnegative");

  std::vector<int> vmap(h.n + 1);
  for (int v = 1; v <= h.n; ++v) vmap[v] = v;
  WeightedGraph cur = h;
  for (const Edge& orig : contract) {
    if (h.edge_index(orig.u, orig.v) < 0) {
      throw std::invalid_argument("plan contracts absent edge {" + std::to_string(orig.u) + "," +
                                  std::to_string(orig.v) + "}");
    }
    int a = vmap[orig.u], b = vmap[orig.v];
    if (a == b) {
      throw std::invalid_argument("plan contracts an edge already collapsed");
    }
    Edge img = make_edge(a, b);
    cur = contract_edge(cur, img);
    for (int v = 1; v <= h.n; ++v) {
      if (vmap[v] == img.v) vmap[v] = img.u;
      else if (vmap[v] > img.v) --vmap[v];
    }
  }
  for (const Edge& orig : erase) {
    if (h.edge_index(orig.u, orig.v) < 0) {
      throw std::invalid_argument("plan deletes absent edge {" + std::to_string(orig.u) + "," +
                                  std::to_string(orig.v) + "}");
    }
    int a = vmap[orig.u], b = vmap[orig.v];
    if (a == b) throw std::invalid_argument("plan deletes an edge collapsed by contraction");
    Edge img = make_edge(a, b);
    // A kept edge merging onto the same image would make the plan ambiguous.
    for (const Edge& e : h.edges) {
      if (std::binary_search(contract.begin(), contract.end(), e) ||
          std::binary_search(erase.begin(), erase.end(), e)) {
        continue;
      }
      if (make_edge(vmap[e.u], vmap[e.v]) == img) {
        throw std::invalid_argument("plan deletes an edge merged with a kept edge {" +
                                    std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      }
    }
    if (cur.edge_index(img.u, img.v) < 0) {
      throw std::invalid_argument("plan deletes an edge already removed");
    }
    cur = delete_edge(cur, img);
  }
  return PlanApplication{std::move(cur), std::move(vmap)};
}

std::vector<Rat> minor_weighting(const WeightedGraph& h, const EdgeOpPlan& plan,
                                 const WeightedGraph& minor) {
  PlanApplication app = apply_plan(h, plan);
  if (app.result.n != minor.n || app.result.edges != minor.edges) {
    throw std::invalid_argument("plan applied to the host does not match the minor's topology");
  }

  auto in_set = [](const std::vector<Edge>& set, const Edge& e) {
    return std::find(set.begin(), set.end(), e) != set.end();
  };
  std::vector<Edge> contract = plan.contract;
  std::vector<Edge> erase = plan.erase;
  for (Edge& e : contract) e = make_edge(e.u, e.v);
  for (Edge& e : erase) e = make_edge(e.u, e.v);

  const Rat& r = plan.keep_scale;
  std::vector<Rat> psi(h.edges.size(), Rat(0));
  Rat max_kept(0);
  for (size_t i = 0; i < h.edges.size(); ++i) {
    const Edge& e = h.edges[i];
    if (in_set(contract, e)) {
      psi[i] = 0;
    } else if (in_set(erase, e)) {
      continue;  // assigned after the heavy bound is known
    } else {
      int a = app.vertex_map[e.u], b = app.vertex_map[e.v];
      psi[i] = r * minor.weight_of(a, b);
      if (psi[i] > max_kept) max_kept = psi[i];
    }
  }
  Rat heavy = Rat(h.n - 1) * max_kept + 1;
  for (size_t i = 0; i < h.edges.size(); ++i) {
    if (in_set(erase, h.edges[i])) psi[i] = heavy;
  }
  return psi;
}

}  // namespace gmet
