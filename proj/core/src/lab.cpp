#include "gmet/lab.hpp"

#include "gmet/splits.hpp"

#include "json.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gmet {

using ordered_json = nlohmann::ordered_json;

uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

constexpr uint64_t kStreamGraph = 0;
constexpr uint64_t kStreamWeights = 1;
constexpr uint64_t kStreamPoints = 2;

WeightedGraph prufer_tree(int n, CounterRng& rng) {
  if (n == 1) return WeightedGraph::create(1, {}, {});
  if (n == 2) return WeightedGraph::create(2, {Edge{1, 2}}, {Rat(1)});
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = 1 + static_cast<int>(rng.next_below(n));
  std::vector<int> degree(n + 1, 1);
  for (int s : seq) ++degree[s];
  std::vector<Edge> edges;
  std::vector<char> done(n + 1, 0);
  for (int s : seq) {
    for (int leaf = 1; leaf <= n; ++leaf) {
      if (degree[leaf] == 1 && !done[leaf]) {
        edges.push_back(make_edge(leaf, s));
        done[leaf] = 1;
        --degree[s];
        break;
      }
    }
  }
  int a = 0, b = 0;
  for (int v = 1; v <= n; ++v) {
    if (!done[v] && degree[v] == 1) {
      if (!a) {
        a = v;
      } else {
        b = v;
      }
    }
  }
  edges.push_back(make_edge(a, b));
  return WeightedGraph::create(n, std::move(edges), std::vector<Rat>(n - 1, Rat(1)));
}

bool er_connected_attempt(int n, uint64_t threshold, CounterRng& rng, std::vector<Edge>& edges) {
  edges.clear();
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if ((rng.next() >> 11) < threshold) edges.push_back(Edge{u, v});
    }
  }
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

WeightedGraph generate_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Path: {
      if (spec.n < 1) throw std::invalid_argument("path needs n >= 1");
      std::vector<Edge> edges;
      for (int i = 1; i < spec.n; ++i) edges.push_back(Edge{i, i + 1});
      return WeightedGraph::create(spec.n, std::move(edges),
                                   std::vector<Rat>(spec.n - 1, Rat(1)));
    }
    case Family::Cycle: {
      if (spec.n < 3) throw std::invalid_argument("cycle needs n >= 3");
      std::vector<Edge> edges;
      for (int i = 1; i < spec.n; ++i) edges.push_back(Edge{i, i + 1});
      edges.push_back(Edge{1, spec.n});
      return WeightedGraph::create(spec.n, std::move(edges), std::vector<Rat>(spec.n, Rat(1)));
    }
    case Family::Star: {
      if (spec.n < 2) throw std::invalid_argument("star needs n >= 2");
      std::vector<Edge> edges;
      for (int i = 2; i <= spec.n; ++i) edges.push_back(Edge{1, i});
      return WeightedGraph::create(spec.n, std::move(edges),
                                   std::vector<Rat>(spec.n - 1, Rat(1)));
    }
    case Family::RandomTree: {
      if (spec.n < 1) throw std::invalid_argument("tree needs n >= 1");
      CounterRng rng(spec.seed, kStreamGraph);
      return prufer_tree(spec.n, rng);
    }
    case Family::RandomConnected: {
      if (spec.n < 1) throw std::invalid_argument("random graph needs n >= 1");
      if (spec.n == 1) return WeightedGraph::create(1, {}, {});
      double p = spec.edge_prob > 0 ? spec.edge_prob : std::min(1.0, 2.0 * std::log(spec.n) / spec.n);
      if (p > 1.0) throw std::invalid_argument("edge probability above 1");
      const uint64_t threshold = static_cast<uint64_t>(p * 9007199254740992.0);  // p * 2^53
      CounterRng rng(spec.seed, kStreamGraph);
      std::vector<Edge> edges;
      for (int attempt = 0; attempt < 1000; ++attempt) {
        if (er_connected_attempt(spec.n, threshold, rng, edges)) {
          std::vector<Rat> unit(edges.size(), Rat(1));
          return WeightedGraph::create(spec.n, std::move(edges), std::move(unit));
        }
      }
      throw std::runtime_error("failed to sample a connected graph in 1000 attempts");
    }
    case Family::Multipartite: {
      if (spec.parts.size() < 2) throw std::invalid_argument("multipartite needs >= 2 parts");
      int total = 0;
      for (int s : spec.parts) {
        if (s < 1) throw std::invalid_argument("multipartite part sizes must be positive");
        total += s;
      }
      std::vector<int> part_of(total + 1, 0);
      int v = 1;
      for (size_t p = 0; p < spec.parts.size(); ++p) {
        for (int k = 0; k < spec.parts[p]; ++k) part_of[v++] = static_cast<int>(p);
      }
      std::vector<Edge> edges;
      for (int a = 1; a <= total; ++a) {
        for (int b = a + 1; b <= total; ++b) {
          if (part_of[a] != part_of[b]) edges.push_back(Edge{a, b});
        }
      }
      return WeightedGraph::create(total, std::move(edges),
                                   std::vector<Rat>(edges.size(), Rat(1)));
    }
    case Family::K4: {
      std::vector<Edge> edges;
      for (int a = 1; a <= 4; ++a) {
        for (int b = a + 1; b <= 4; ++b) edges.push_back(Edge{a, b});
      }
      return WeightedGraph::create(4, std::move(edges), std::vector<Rat>(6, Rat(1)));
    }
  }
  throw std::invalid_argument("unknown family");
}

std::string family_id(const FamilySpec& spec) {
  std::ostringstream os;
  switch (spec.family) {
    case Family::Path: os << "path:" << spec.n; break;
    case Family::Cycle: os << "cycle:" << spec.n; break;
    case Family::Star: os << "star:" << spec.n; break;
    case Family::RandomTree: os << "tree:" << spec.n << ":s" << spec.seed; break;
    case Family::RandomConnected: os << "er:" << spec.n << ":s" << spec.seed; break;
    case Family::Multipartite: {
      os << "kparts:";
      for (size_t i = 0; i < spec.parts.size(); ++i) os << (i ? "-" : "") << spec.parts[i];
      break;
    }
    case Family::K4: os << "k4"; break;
  }
  return os.str();
}

const char* law_name(WeightLaw law) {
  switch (law) {
    case WeightLaw::UniformUnit: return "uniform(0,1]-dyadic20";
    case WeightLaw::Tenths: return "uniform{0..10}/10";
    case WeightLaw::Exponential: return "exp(1)-dyadic20";
  }
  return "?";
}

std::vector<Rat> random_weighting(const WeightedGraph& g, uint64_t seed, WeightLaw law) {
  CounterRng rng(seed, kStreamWeights);
  const long denom = 1 << 20;
  std::vector<Rat> w(g.edges.size());
  for (Rat& x : w) {
    switch (law) {
      case WeightLaw::UniformUnit: {
        Rat r(static_cast<long>(rng.next_below(denom)) + 1, denom);
        r.canonicalize();
        x = r;
        break;
      }
      case WeightLaw::Tenths: {
        Rat r(static_cast<long>(rng.next_below(11)), 10);
        r.canonicalize();
        x = r;
        break;
      }
      case WeightLaw::Exponential: {
        double u = (static_cast<double>(rng.next_below(denom)) + 1.0) / static_cast<double>(denom);
        long k = std::lround(-std::log(u) * static_cast<double>(denom));
        Rat r(k, denom);
        r.canonicalize();
        x = r;
        break;
      }
    }
  }
  return w;
}

void persist_record(const std::string& path, const std::string& json_line) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open persistence file: " + path);
  out << json_line << "\n";
}

std::string violation_json(const std::string& kind, const WeightedGraph& g, uint64_t seed,
                           int sample_index, const Inertia& inertia, int bound) {
  ordered_json j;
  j["kind"] = kind;
  j["seed"] = std::to_string(seed);
  j["sample"] = sample_index;
  j["n"] = g.n;
  ordered_json edges = ordered_json::array();
  for (size_t i = 0; i < g.edges.size(); ++i) {
    edges.push_back({g.edges[i].u, g.edges[i].v, fraction_string(g.weights[i])});
  }
  j["edges"] = edges;
  j["inertia"] = {{"plus", inertia.plus}, {"zero", inertia.zero}, {"minus", inertia.minus}};
  j["bound"] = bound;
  return j.dump();
}

std::string ExperimentReport::to_json_string(bool pretty) const {
  ordered_json j;
  j["kind"] = kind;
  j["law"] = law;
  j["n"] = n;
  j["samples"] = samples;
  j["bound"] = bound;
  j["max_iplus"] = max_iplus;
  j["violations"] = violation_samples;
  if (kind == "strong") {
    j["threes"] = threes;
    j["minor_present"] = minor_present;
    j["search_gap"] = search_gap;
  }
  if (kind == "lp") {
    j["p"] = p;
    j["dim"] = dim;
    j["count_exceeding"] = count_exceeding;
    j["fraction_exceeding"] = fraction_exceeding;
  }
  j["wall_ms"] = wall_ms;
  ordered_json recs = ordered_json::array();
  for (const SampleRecord& r : records) {
    recs.push_back({{"seed", std::to_string(r.seed)},
                    {"graph", r.graph_id},
                    {"inertia", {{"plus", r.inertia.plus}, {"zero", r.inertia.zero}, {"minus", r.inertia.minus}}}});
  }
  j["records"] = recs;
  return pretty ? j.dump(2) : j.dump();
}

ExperimentReport weak_conjecture_scan(int n, int samples, uint64_t seed, WeightLaw law,
                                      const std::string& persist_path) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.kind = "weak";
  rep.law = law_name(law);
  rep.n = n;
  rep.samples = samples;
  rep.bound = (n + 1) / 3;
  for (int i = 0; i < samples; ++i) {
    const uint64_t sample_seed = mix64(seed ^ static_cast<uint64_t>(i));
    FamilySpec fs{Family::RandomConnected, n, {}, 0.0, sample_seed};
    WeightedGraph g = generate_family(fs);
    WeightedGraph wg = with_weights(g, random_weighting(g, sample_seed, law));
    Inertia in = inertia_of(distance_matrix(wg));
    rep.records.push_back({sample_seed, family_id(fs), in});
    rep.max_iplus = std::max(rep.max_iplus, in.plus);
    if (in.plus > rep.bound) {
      rep.violation_samples.push_back(i);
      persist_record(persist_path, violation_json("weak", wg, sample_seed, i, in, rep.bound));
    }
  }
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

ExperimentReport strong_conjecture_scan(const WeightedGraph& g, int samples, uint64_t seed,
                                        int threes, WeightLaw law, int minor_cap,
                                        const std::string& persist_path) {
  if (threes < 1) throw std::invalid_argument("threes must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.kind = "strong";
  rep.law = law_name(law);
  rep.n = g.n;
  rep.bound = threes;
  rep.threes = threes;
  rep.minor_checked = true;

  FamilySpec pattern_spec;
  pattern_spec.family = Family::Multipartite;
  pattern_spec.parts.push_back(2);
  for (int i = 0; i < threes; ++i) pattern_spec.parts.push_back(3);
  rep.minor_present = has_minor(g, generate_family(pattern_spec), minor_cap);

  auto record = [&](const WeightedGraph& wg, uint64_t s, const std::string& id, int index) {
    Inertia in = inertia_of(distance_matrix(wg));
    rep.records.push_back({s, id, in});
    rep.max_iplus = std::max(rep.max_iplus, in.plus);
    if (!rep.minor_present && in.plus > rep.bound) {
      rep.violation_samples.push_back(index);
      persist_record(persist_path, violation_json("strong", wg, s, index, in, rep.bound));
    }
  };

  record(with_weights(g, std::vector<Rat>(g.edges.size(), Rat(1))), seed, "unit", -1);
  if (threes == 1) {
    if (auto adv = adversarial_weighting_k23(g)) {
      record(with_weights(g, adv->weights), seed, "adversarial", -2);
    }
  }
  for (int i = 0; i < samples; ++i) {
    const uint64_t sample_seed = mix64(seed ^ static_cast<uint64_t>(i));
    record(with_weights(g, random_weighting(g, sample_seed, law)), sample_seed,
           "sample:" + std::to_string(i), i);
  }
  rep.samples = static_cast<int>(rep.records.size());
  rep.search_gap = rep.minor_present && rep.max_iplus <= rep.bound;
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

ExperimentReport lp_embeddable_scan(int n, int dim, double p, int samples, uint64_t seed,
                                    const std::string& persist_path) {
  if (!std::isinf(p) && p < 1.0) throw std::invalid_argument("p must be >= 1 or infinity");
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.kind = "lp";
  rep.law = "uniform[0,1]-dyadic20";
  rep.n = n;
  rep.samples = samples;
  rep.bound = 1;
  rep.p = p;
  rep.dim = dim;
  const long denom = 1 << 20;
  for (int i = 0; i < samples; ++i) {
    const uint64_t sample_seed = mix64(seed ^ static_cast<uint64_t>(i));
    CounterRng rng(sample_seed, kStreamPoints);
    PointSet ps;
    ps.dim = dim;
    ps.p = p;
    ps.points.assign(n, std::vector<Rat>(dim));
    for (auto& pt : ps.points) {
      for (Rat& c : pt) {
        Rat r(static_cast<long>(rng.next_below(denom + 1)), denom);
        r.canonicalize();
        c = r;
      }
    }
    Inertia in = inertia_of(lp_point_metric(ps));
    rep.records.push_back({sample_seed, "points:" + std::to_string(i), in});
    rep.max_iplus = std::max(rep.max_iplus, in.plus);
    if (in.plus > 1) {
      ++rep.count_exceeding;
      if (p <= 2.0 && !persist_path.empty()) {
        ordered_json j;
        j["kind"] = "lp";
        j["p"] = p;
        j["seed"] = std::to_string(sample_seed);
        j["sample"] = i;
        ordered_json pts = ordered_json::array();
        for (const auto& pt : ps.points) {
          ordered_json row = ordered_json::array();
          for (const Rat& c : pt) row.push_back(fraction_string(c));
          pts.push_back(row);
        }
        j["points"] = pts;
        j["inertia"] = {{"plus", in.plus}, {"zero", in.zero}, {"minus", in.minus}};
        persist_record(persist_path, j.dump());
        rep.violation_samples.push_back(i);
      }
    }
  }
  rep.fraction_exceeding = samples > 0 ? static_cast<double>(rep.count_exceeding) / samples : 0.0;
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

}  // namespace gmet
