#include "gmet/cli.hpp"

#include "gmet/lab.hpp"
#include "gmet/metric.hpp"
#include "gmet/minors.hpp"
#include "gmet/spectral.hpp"
#include "gmet/splits.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace gmet::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json matrix_json(const RatMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 1; i <= m.n; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 1; j <= m.n; ++j) row.push_back(fraction_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json inertia_json(const Inertia& in) {
  return {{"plus", in.plus}, {"zero", in.zero}, {"minus", in.minus}};
}

ordered_json spectrum_json(const Spectrum& s) {
  ordered_json vals = ordered_json::array();
  for (double v : s.values) vals.push_back(v);
  return vals;
}

ordered_json splits_json(const std::vector<Split>& splits) {
  ordered_json arr = ordered_json::array();
  for (const Split& s : splits) {
    arr.push_back({{"S", s.members}, {"alpha", fraction_string(s.alpha)}});
  }
  return arr;
}

ordered_json certificate_json(const MinorCertificate& cert) {
  ordered_json j;
  j["branch"] = cert.branch;
  j["paths"] = cert.paths;
  return j;
}

ordered_json checks_json(const std::vector<InvariantCheck>& checks) {
  ordered_json arr = ordered_json::array();
  for (const InvariantCheck& c : checks) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return arr;
}

std::string inertia_str(const Inertia& in) {
  return "(" + std::to_string(in.plus) + ", " + std::to_string(in.zero) + ", " +
         std::to_string(in.minus) + ")";
}

WeightLaw parse_law(const std::string& name) {
  if (name == "uniform") return WeightLaw::UniformUnit;
  if (name == "tenths") return WeightLaw::Tenths;
  if (name == "exp") return WeightLaw::Exponential;
  throw std::runtime_error("unknown weight law '" + name + "' (uniform | tenths | exp)");
}

Family parse_family(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "star") return Family::Star;
  if (name == "tree") return Family::RandomTree;
  if (name == "er") return Family::RandomConnected;
  if (name == "multipartite") return Family::Multipartite;
  if (name == "k4") return Family::K4;
  throw std::runtime_error("unknown family '" + name +
                           "' (path | cycle | star | tree | er | multipartite | k4)");
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return parts;
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  size_t pos = 0;
  double p = std::stod(text, &pos);
  if (pos != text.size()) throw std::runtime_error("malformed p value '" + text + "'");
  return p;
}

// ---------------------------------------------------------------------------
// verify: the lemma property suites on one graph
// ---------------------------------------------------------------------------

struct VerifyOutcome {
  std::vector<InvariantCheck> checks;
  std::vector<std::string> notes;
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const InvariantCheck& c) { return c.pass; });
  }
};

// All simple paths between u and v, reporting (length, bridge count) pairs.
void enumerate_paths(const WeightedGraph& g, const std::vector<std::vector<int>>& adj, int cur,
                     int target, uint32_t visited, Rat length, int bridges, uint32_t s_mask,
                     std::vector<std::pair<Rat, int>>& out) {
  if (cur == target) {
    out.emplace_back(length, bridges);
    return;
  }
  for (int nb : adj[cur]) {
    const uint32_t bit = uint32_t(1) << (nb - 1);
    if (visited & bit) continue;
    const bool cross = ((s_mask >> (cur - 1)) & 1) != ((s_mask >> (nb - 1)) & 1);
    enumerate_paths(g, adj, nb, target, visited | bit, length + g.weight_of(cur, nb),
                    bridges + (cross ? 1 : 0), s_mask, out);
  }
}

VerifyOutcome run_verify(const WeightedGraph& g, double tol, int cap) {
  VerifyOutcome out;
  RatMatrix d = distance_matrix(g);

  {
    CheckReport rep = perron_check(d, tol);
    if (rep.skipped) {
      out.notes.push_back("perron: " + rep.notice);
    } else {
      for (const auto& c : rep.checks) out.checks.push_back({"perron/" + c.name, c.pass, c.detail});
    }
  }

  {
    // Contracting a zero-weight edge duplicates a point: the distance matrix
    // collapses exactly and the inertia gains one zero eigenvalue.
    bool ok = true;
    std::string detail;
    for (size_t ei = 0; ei < g.edges.size() && ok; ++ei) {
      std::vector<Rat> w = g.weights;
      w[ei] = 0;
      WeightedGraph gz = with_weights(g, w);
      RatMatrix dz = distance_matrix(gz);
      const Edge e = gz.edges[ei];
      WeightedGraph gc = contract_edge(gz, e);
      RatMatrix dc = distance_matrix(gc);
      auto relabel = [&](int v) {
        if (v == e.v) return e.u;
        return v > e.v ? v - 1 : v;
      };
      for (int i = 1; i <= g.n && ok; ++i) {
        for (int j = 1; j <= g.n && ok; ++j) {
          if (dz.at(i, j) != dc.at(relabel(i), relabel(j))) {
            ok = false;
            detail = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     "}: contracted metric differs at (" + std::to_string(i) + "," +
                     std::to_string(j) + ")";
          }
        }
      }
      if (!ok) break;
      Inertia full = inertia_of(dz, tol);
      Inertia contracted = inertia_of(dc, tol);
      if (full.plus != contracted.plus || full.zero != contracted.zero + 1 ||
          full.minus != contracted.minus) {
        ok = false;
        detail = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                 "}: inertia did not pad by one zero";
      }
    }
    out.checks.push_back({"contraction_point_duplication", ok, detail});
  }

  {
    // A heavy enough extra edge never changes the metric.
    bool complete = static_cast<int>(g.edges.size()) == g.n * (g.n - 1) / 2;
    if (complete) {
      out.notes.push_back("heavy_edge_invariance: graph complete, nothing to add");
    } else {
      bool ok = true;
      std::string detail;
      Rat heavy = heavy_weight(g);
      for (int u = 1; u <= g.n && ok; ++u) {
        for (int v = u + 1; v <= g.n && ok; ++v) {
          if (g.has_edge(u, v)) continue;
          WeightedGraph gh = add_edge_weighted(g, Edge{u, v}, heavy);
          if (!(distance_matrix(gh) == d)) {
            ok = false;
            detail = "adding {" + std::to_string(u) + "," + std::to_string(v) +
                     "} at the heavy bound changed the metric";
          }
        }
      }
      out.checks.push_back({"heavy_edge_invariance", ok, detail});
    }
  }

  std::vector<Split> splits;
  bool splits_available = g.n <= cap;
  if (splits_available) {
    splits = enumerate_splits(d, cap);
  } else {
    out.notes.push_back("split checks skipped: n exceeds cap " + std::to_string(cap));
  }

  if (splits_available) {
    {
      bool ok = true;
      std::string detail;
      try {
        SplitDecomposition dec = decompose(d, cap);
        RatMatrix recon = dec.residue;
        for (const Split& s : dec.splits) {
          for (int i = 1; i <= g.n; ++i) {
            for (int j = 1; j <= g.n; ++j) {
              const bool ii = s.mask & (uint32_t(1) << (i - 1));
              const bool jj = s.mask & (uint32_t(1) << (j - 1));
              if (ii != jj) recon.at(i, j) += s.alpha;
            }
          }
        }
        if (!(recon == d)) {
          ok = false;
          detail = "residue + sum alpha delta(S) differs from the metric";
        }
      } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
      }
      out.checks.push_back({"decomposition_reconstruction", ok, detail});
    }

    if (g.n <= 8) {
      // Crossing a split's bridges two extra times costs at least 2 alpha.
      bool ok = true;
      std::string detail;
      auto adj = g.adjacency();
      for (auto& list : adj) std::sort(list.begin(), list.end());
      for (const Split& s : splits) {
        for (int u = 1; u <= g.n && ok; ++u) {
          for (int v = u + 1; v <= g.n && ok; ++v) {
            std::vector<std::pair<Rat, int>> paths;
            enumerate_paths(g, adj, u, v, uint32_t(1) << (u - 1), Rat(0), 0, s.mask, paths);
            std::map<int, Rat> best;
            for (const auto& [len, k] : paths) {
              auto it = best.find(k);
              if (it == best.end() || len < it->second) best[k] = len;
            }
            for (const auto& [k, len] : best) {
              auto nxt = best.find(k + 2);
              if (nxt == best.end()) continue;
              if (nxt->second < len + 2 * s.alpha) {
                ok = false;
                detail = "pair (" + std::to_string(u) + "," + std::to_string(v) + "), split {" +
                         std::to_string(s.mask) + "}: k+2 bridge paths undercut 2 alpha";
              }
            }
          }
        }
      }
      out.checks.push_back({"bridge_crossing_cost", ok, detail});
    } else {
      out.notes.push_back("bridge_crossing_cost skipped: path enumeration needs n <= 8");
    }

    {
      bool ok = true;
      std::string detail;
      const std::vector<Rat> xs = {Rat(0), Rat(1), Rat(17, 3)};
      int tested = 0;
      for (size_t si = 0; si < splits.size() && si < 8 && ok; ++si) {
        const Split& s = splits[si];
        std::vector<Rat> shift_values = xs;
        shift_values.push_back(-s.alpha);
        shift_values.push_back(-s.alpha / 2);
        for (const Rat& x : shift_values) {
          WeightedGraph gs = apply_cut_shift(g, s.members, x, cap);
          RatMatrix expect = d;
          RatMatrix delta = cut_metric(g.n, s.mask);
          for (int i = 1; i <= g.n; ++i) {
            for (int j = 1; j <= g.n; ++j) expect.at(i, j) += x * delta.at(i, j);
          }
          if (!(distance_matrix(gs) == expect)) {
            ok = false;
            detail = "cut shift by " + fraction_string(x) + " broke the distance identity";
            break;
          }
          ++tested;
        }
      }
      if (splits.empty()) {
        out.notes.push_back("cut_shift_identity: no splits to shift");
      } else {
        out.checks.push_back(
            {"cut_shift_identity", ok, ok ? std::to_string(tested) + " shifts checked" : detail});
      }
    }

    {
      try {
        std::vector<Rat> psi = split_prime_residue_weighting(g, cap);
        RatMatrix dpsi = distance_matrix(with_weights(g, psi));
        SplitDecomposition dec = decompose(d, cap);
        bool ok = dpsi == dec.residue;
        std::string detail = ok ? "" : "D under psi differs from the decomposition residue";
        if (ok && !enumerate_splits(dpsi, cap).empty()) {
          ok = false;
          detail = "D under psi is not split-prime";
        }
        out.checks.push_back({"residue_weighting", ok, detail});
      } catch (const std::runtime_error& e) {
        out.notes.push_back(std::string("residue_weighting aborted: ") + e.what());
      }
    }
  }

  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"metric spaces of weighted graphs: distances, splits, inertia, minors"};
  app.require_subcommand(1);

  std::string file, matrix_file, pattern, conjecture, law_str = "uniform", family_str,
              parts_str, p_str = "2", output_file, persist_path = "violations.ndjson";
  bool embed = false, json_out = false;
  double tol = -1.0;
  int split_cap = kDefaultSplitCap;
  int minor_cap = kDefaultMinorCap;
  int n = 0, dim = 4, samples = 1000, threes = 1;
  uint64_t seed = 0;
  double prob = 0.0;

  auto* analyze = app.add_subcommand("analyze", "distance matrix, inertia, split decomposition");
  analyze->add_option("file", file, "graph file")->required();
  analyze->add_flag("--embed", embed, "emit the exact l1 embedding");
  analyze->add_flag("--json", json_out, "JSON output");
  analyze->add_option("--tol", tol, "zero-classification tolerance override");
  analyze->add_option("--cap", split_cap, "split enumeration cap");

  auto* inertia_cmd = app.add_subcommand("inertia", "inertia of a graph metric or matrix file");
  inertia_cmd->add_option("file", file, "graph file");
  inertia_cmd->add_option("--matrix", matrix_file, "metric file");
  inertia_cmd->add_flag("--json", json_out, "JSON output");
  inertia_cmd->add_option("--tol", tol, "zero-classification tolerance override");

  auto* minor_cmd = app.add_subcommand("minor", "graph minor test with certificate");
  minor_cmd->add_option("file", file, "graph file")->required();
  minor_cmd->add_option("--pattern", pattern, "k23 | k23s:<k>")->required();
  minor_cmd->add_flag("--json", json_out, "JSON output");
  minor_cmd->add_option("--cap", minor_cap, "minor search cap");

  auto* distminor = app.add_subcommand("distminor", "K_{2,3} distance-minor LP test");
  distminor->add_option("file", file, "graph file");
  distminor->add_option("--matrix", matrix_file, "metric file");
  distminor->add_flag("--json", json_out, "JSON output");
  distminor->add_option("--cap", split_cap, "split enumeration cap");

  auto* adversary = app.add_subcommand("adversary", "weighting forcing i_plus >= 2 when possible");
  adversary->add_option("file", file, "graph file")->required();
  adversary->add_flag("--json", json_out, "JSON output");

  auto* verify = app.add_subcommand("verify", "run the lemma property suites on a graph");
  verify->add_option("file", file, "graph file")->required();
  verify->add_flag("--json", json_out, "JSON output");
  verify->add_option("--tol", tol, "zero-classification tolerance override");
  verify->add_option("--cap", split_cap, "split enumeration cap");

  auto* search = app.add_subcommand("search", "conjecture scans");
  search->add_option("--conjecture", conjecture, "weak | strong | lp")->required();
  search->add_option("file", file, "graph file (strong)");
  search->add_option("--family", family_str, "family tag (strong, instead of a file)");
  search->add_option("--parts", parts_str, "multipartite part sizes, e.g. 2,3,3");
  search->add_option("--n", n, "size parameter");
  search->add_option("--dim", dim, "point dimension (lp)");
  search->add_option("--p", p_str, "norm parameter (lp), number or 'inf'");
  search->add_option("--samples", samples, "sample count");
  search->add_option("--seed", seed, "random seed");
  search->add_option("--law", law_str, "weight law: uniform | tenths | exp");
  search->add_option("--threes", threes, "number of threes in K_{2,3,...,3} (strong)");
  search->add_option("--cap", minor_cap, "minor search cap (strong)");
  search->add_option("--persist", persist_path, "violation persistence file (NDJSON)");
  search->add_flag("--json", json_out, "JSON output");

  auto* gen = app.add_subcommand("gen", "emit a family graph file");
  gen->add_option("--family", family_str, "path | cycle | star | tree | er | multipartite | k4")
      ->required();
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--parts", parts_str, "multipartite part sizes, e.g. 2,3,3");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--prob", prob, "edge probability (er)");
  gen->add_option("-o,--output", output_file, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      WeightedGraph g = parse_graph(read_file(file));
      RatMatrix d = distance_matrix(g);
      Spectrum s = eigenvalues_symmetric(to_real(d), tol);
      Inertia in = classify_inertia(s);
      ordered_json j;
      j["n"] = g.n;
      j["distance_matrix"] = matrix_json(d);
      j["spectrum"] = spectrum_json(s);
      j["tolerance"] = s.zero_tol;
      j["inertia"] = inertia_json(in);
      std::vector<std::string> notes;
      if (g.n <= split_cap) {
        SplitDecomposition dec = decompose(d, split_cap);
        j["splits"] = splits_json(dec.splits);
        j["residue"] = matrix_json(dec.residue);
        j["totally_decomposable"] = dec.residue.is_zero();
        if (embed) {
          PointSet ps = l1_embed(d, split_cap);
          ordered_json pts = ordered_json::array();
          for (const auto& pt : ps.points) {
            ordered_json row = ordered_json::array();
            for (const Rat& c : pt) row.push_back(fraction_string(c));
            pts.push_back(row);
          }
          j["embedding"] = {{"dim", ps.dim}, {"points", pts}};
        }
      } else {
        j["splits"] = nullptr;
        j["residue"] = nullptr;
        j["totally_decomposable"] = nullptr;
        notes.push_back("split decomposition skipped: n exceeds cap " + std::to_string(split_cap));
        if (embed) throw std::runtime_error("--embed needs n within the split cap");
      }
      j["notes"] = notes;
      if (json_out) {
        out << j.dump(2) << "\n";
      } else {
        out << "n = " << g.n << "\n";
        out << "inertia = " << inertia_str(in) << "\n";
        out << "spectrum =";
        for (double v : s.values) out << " " << v;
        out << "\n";
        if (j["totally_decomposable"].is_boolean()) {
          out << "splits = " << j["splits"].size() << ", totally decomposable = "
              << (j["totally_decomposable"].get<bool>() ? "yes" : "no") << "\n";
        }
        for (const auto& note : notes) out << "note: " << note << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(inertia_cmd)) {
      if (file.empty() == matrix_file.empty()) {
        throw std::runtime_error("need exactly one of a graph file or --matrix");
      }
      RatMatrix d = file.empty() ? read_metric(read_file(matrix_file))
                                 : distance_matrix(parse_graph(read_file(file)));
      Spectrum s = eigenvalues_symmetric(to_real(d), tol);
      Inertia in = classify_inertia(s);
      if (json_out) {
        ordered_json j;
        j["source"] = file.empty() ? "matrix" : "graph";
        j["n"] = d.n;
        j["spectrum"] = spectrum_json(s);
        j["tolerance"] = s.zero_tol;
        j["inertia"] = inertia_json(in);
        out << j.dump(2) << "\n";
      } else {
        out << "inertia = " << inertia_str(in) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(minor_cmd)) {
      WeightedGraph g = parse_graph(read_file(file));
      ordered_json j;
      j["pattern"] = pattern;
      if (pattern == "k23") {
        auto cert = has_k23_subdivision(g);
        bool present = has_minor(g, generate_family({Family::Multipartite, 0, {2, 3}, 0.0, 0}),
                                 minor_cap);
        if (present != cert.has_value()) {
          throw std::runtime_error("internal: subdivision search and minor search disagree");
        }
        j["present"] = present;
        j["certificate"] = cert ? certificate_json(*cert) : ordered_json(nullptr);
      } else if (pattern.rfind("k23s:", 0) == 0) {
        int k = std::stoi(pattern.substr(5));
        if (k < 1) throw std::runtime_error("k23s:<k> needs k >= 1");
        std::vector<int> parts{2};
        for (int i = 0; i < k; ++i) parts.push_back(3);
        bool present = has_minor(g, generate_family({Family::Multipartite, 0, parts, 0.0, 0}),
                                 minor_cap);
        j["present"] = present;
        j["certificate"] = nullptr;
      } else {
        throw std::runtime_error("unknown pattern '" + pattern + "' (k23 | k23s:<k>)");
      }
      if (json_out) {
        out << j.dump(2) << "\n";
      } else {
        out << "pattern " << pattern << (j["present"].get<bool>() ? " present" : " absent")
            << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(distminor)) {
      if (file.empty() == matrix_file.empty()) {
        throw std::runtime_error("need exactly one of a graph file or --matrix");
      }
      RatMatrix d = file.empty() ? read_metric(read_file(matrix_file))
                                 : distance_matrix(parse_graph(read_file(file)));
      auto witness = k23_distance_minor_test(d, split_cap);
      ordered_json j;
      j["present"] = witness.has_value();
      if (witness) {
        j["indices"] = witness->indices;
        j["two_side"] = witness->two_side;
        j["c"] = fraction_string(witness->c);
        j["lambda0"] = fraction_string(witness->lambda0);
        ordered_json lam = ordered_json::array();
        SplitDecomposition dec = decompose(d, split_cap);
        for (size_t i = 0; i < witness->lambda.size(); ++i) {
          if (witness->lambda[i] != 0) {
            lam.push_back(
                {{"S", dec.splits[i].members}, {"value", fraction_string(witness->lambda[i])}});
          }
        }
        j["lambda"] = lam;
      }
      if (json_out) {
        out << j.dump(2) << "\n";
      } else {
        out << "distance minor " << (witness ? "present" : "absent") << "\n";
        if (witness) out << "c = " << fraction_string(witness->c) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(adversary)) {
      WeightedGraph g = parse_graph(read_file(file));
      auto adv = adversarial_weighting_k23(g);
      ordered_json j;
      j["found"] = adv.has_value();
      if (adv) {
        ordered_json ws = ordered_json::array();
        for (size_t i = 0; i < g.edges.size(); ++i) {
          ws.push_back({{"u", g.edges[i].u}, {"v", g.edges[i].v},
                        {"w", fraction_string(adv->weights[i])}});
        }
        j["weights"] = ws;
        j["certificate"] = certificate_json(adv->cert);
        Inertia in = inertia_of(distance_matrix(with_weights(g, adv->weights)), tol);
        j["inertia"] = inertia_json(in);
        j["iplus_ge_2"] = in.plus >= 2;
      }
      if (json_out) {
        out << j.dump(2) << "\n";
      } else if (adv) {
        out << "adversarial weighting found, inertia = "
            << inertia_str(inertia_of(distance_matrix(with_weights(g, adv->weights)), tol)) << "\n";
      } else {
        out << "no K_{2,3} subdivision, no adversarial weighting\n";
      }
      return 0;
    }

    if (app.got_subcommand(verify)) {
      WeightedGraph g = parse_graph(read_file(file));
      VerifyOutcome vo = run_verify(g, tol, split_cap);
      if (json_out) {
        ordered_json j;
        j["checks"] = checks_json(vo.checks);
        j["notes"] = vo.notes;
        j["pass"] = vo.pass();
        out << j.dump(2) << "\n";
      } else {
        for (const auto& c : vo.checks) {
          out << (c.pass ? "[pass] " : "[FAIL] ") << c.name
              << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        }
        for (const auto& note : vo.notes) out << "[note] " << note << "\n";
      }
      return vo.pass() ? 0 : 1;
    }

    if (app.got_subcommand(search)) {
      ExperimentReport rep;
      if (conjecture == "weak") {
        if (n < 2) throw std::runtime_error("weak scan needs --n >= 2");
        rep = weak_conjecture_scan(n, samples, seed, parse_law(law_str), persist_path);
      } else if (conjecture == "strong") {
        WeightedGraph g = [&] {
          if (!file.empty()) return parse_graph(read_file(file));
          if (family_str.empty()) {
            throw std::runtime_error("strong scan needs a graph file or --family");
          }
          FamilySpec fs{parse_family(family_str), n, parse_parts(parts_str), prob, seed};
          return generate_family(fs);
        }();
        rep = strong_conjecture_scan(g, samples, seed, threes, parse_law(law_str), minor_cap,
                                     persist_path);
      } else if (conjecture == "lp") {
        if (n < 2) throw std::runtime_error("lp scan needs --n >= 2");
        rep = lp_embeddable_scan(n, dim, parse_p(p_str), samples, seed, persist_path);
      } else {
        throw std::runtime_error("unknown conjecture '" + conjecture + "' (weak | strong | lp)");
      }
      if (json_out) {
        out << rep.to_json_string(true) << "\n";
      } else {
        out << rep.kind << " scan: " << rep.samples << " samples, max i_plus = " << rep.max_iplus
            << ", bound = " << rep.bound << ", violations = " << rep.violation_samples.size()
            << "\n";
        if (rep.kind == "strong") {
          out << "minor present = " << (rep.minor_present ? "yes" : "no")
              << ", search gap = " << (rep.search_gap ? "yes" : "no") << "\n";
        }
        if (rep.kind == "lp") {
          out << "fraction with i_plus > 1 = " << rep.fraction_exceeding << "\n";
        }
        if (!rep.violation_samples.empty()) {
          out << "violations persisted to " << persist_path << "\n";
        }
      }
      return 0;
    }

    if (app.got_subcommand(gen)) {
      FamilySpec fs{parse_family(family_str), n, parse_parts(parts_str), prob, seed};
      std::string text = format_graph(generate_family(fs));
      if (output_file.empty()) {
        out << text;
      } else {
        std::ofstream of(output_file);
        if (!of) throw std::runtime_error("cannot open output file: " + output_file);
        of << text;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace gmet::cli
