#include "gmet/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gmet {

bool RatMatrix::is_zero() const {
  for (const Rat& x : v) {
    if (x != 0) return false;
  }
  return true;
}

RatMatrix rat_matrix_from(int n, const std::vector<std::vector<long>>& rows) {
  RatMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) m.at(i, j) = rows[i - 1][j - 1];
  }
  return m;
}

bool SemimetricReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.pass; });
}

std::string SemimetricReport::first_failure() const {
  for (const InvariantCheck& c : checks) {
    if (!c.pass) return c.name + ": " + c.detail;
  }
  return "";
}

namespace {

// Floyd-Warshall over int64 numerators when all weights share a small
// denominator; exact and much faster than mpq in the sampling loops.
bool fw_fast(const WeightedGraph& g, RatMatrix& out) {
  mpz_class lcm_z(1);
  for (const Rat& w : g.weights) {
    mpz_class den = w.get_den();
    mpz_class gcd_z;
    mpz_gcd(gcd_z.get_mpz_t(), lcm_z.get_mpz_t(), den.get_mpz_t());
    lcm_z = lcm_z / gcd_z * den;
    if (!lcm_z.fits_slong_p()) return false;
  }
  const long lcm = lcm_z.get_si();
  int64_t max_num = 0;
  std::vector<int64_t> nums(g.weights.size());
  for (size_t i = 0; i < g.weights.size(); ++i) {
    mpz_class scaled = g.weights[i].get_num() * (lcm / g.weights[i].get_den());
    if (!scaled.fits_slong_p()) return false;
    nums[i] = scaled.get_si();
    max_num = std::max(max_num, nums[i]);
  }
  if (max_num > 0 && max_num > (int64_t(1) << 62) / (g.n > 1 ? g.n - 1 : 1)) return false;

  const int n = g.n;
  const int64_t inf = std::numeric_limits<int64_t>::max() / 4;
  std::vector<int64_t> d(static_cast<size_t>(n) * n, inf);
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i) * n + i] = 0;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int a = g.edges[e].u - 1, b = g.edges[e].v - 1;
    d[static_cast<size_t>(a) * n + b] = std::min(d[static_cast<size_t>(a) * n + b], nums[e]);
    d[static_cast<size_t>(b) * n + a] = d[static_cast<size_t>(a) * n + b];
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const int64_t dik = d[static_cast<size_t>(i) * n + k];
      if (dik >= inf) continue;
      for (int j = 0; j < n; ++j) {
        int64_t cand = dik + d[static_cast<size_t>(k) * n + j];
        if (cand < d[static_cast<size_t>(i) * n + j]) d[static_cast<size_t>(i) * n + j] = cand;
      }
    }
  }
  out = RatMatrix(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Rat r(d[static_cast<size_t>(i - 1) * n + (j - 1)], lcm);
      r.canonicalize();
      out.at(i, j) = r;
    }
  }
  return true;
}

}  // namespace

RatMatrix distance_matrix(const WeightedGraph& g) {
  RatMatrix fast;
  if (fw_fast(g, fast)) return fast;

  const int n = g.n;
  RatMatrix d(n);
  std::vector<char> known(static_cast<size_t>(n) * n, 0);
  auto kn = [&](int i, int j) -> char& { return known[static_cast<size_t>(i - 1) * n + (j - 1)]; };
  for (int i = 1; i <= n; ++i) kn(i, i) = 1;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int a = g.edges[e].u, b = g.edges[e].v;
    if (!kn(a, b) || g.weights[e] < d.at(a, b)) {
      d.at(a, b) = g.weights[e];
      d.at(b, a) = g.weights[e];
      kn(a, b) = kn(b, a) = 1;
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      if (!kn(i, k)) continue;
      for (int j = 1; j <= n; ++j) {
        if (!kn(k, j)) continue;
        Rat cand = d.at(i, k) + d.at(k, j);
        if (!kn(i, j) || cand < d.at(i, j)) {
          d.at(i, j) = cand;
          kn(i, j) = 1;
        }
      }
    }
  }
  return d;
}

SemimetricReport validate_semimetric(const RatMatrix& m) {
  SemimetricReport rep;
  const int n = m.n;

  InvariantCheck hollow{"hollow", true, ""};
  for (int i = 1; i <= n && hollow.pass; ++i) {
    if (m.at(i, i) != 0) {
      hollow.pass = false;
      hollow.detail = "entry (" + std::to_string(i) + "," + std::to_string(i) + ") is " +
                      fraction_string(m.at(i, i));
    }
  }
  rep.checks.push_back(hollow);

  InvariantCheck sym{"symmetric", true, ""};
  for (int i = 1; i <= n && sym.pass; ++i) {
    for (int j = i + 1; j <= n && sym.pass; ++j) {
      if (m.at(i, j) != m.at(j, i)) {
        sym.pass = false;
        sym.detail = "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                     std::to_string(j) + "," + std::to_string(i) + ") differ";
      }
    }
  }
  rep.checks.push_back(sym);

  InvariantCheck nonneg{"nonnegative", true, ""};
  for (int i = 1; i <= n && nonneg.pass; ++i) {
    for (int j = 1; j <= n && nonneg.pass; ++j) {
      if (m.at(i, j) < 0) {
        nonneg.pass = false;
        nonneg.detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                        fraction_string(m.at(i, j));
      }
    }
  }
  rep.checks.push_back(nonneg);

  InvariantCheck tri{"triangle", true, ""};
  for (int i = 1; i <= n && tri.pass; ++i) {
    for (int j = 1; j <= n && tri.pass; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= n && tri.pass; ++k) {
        if (k == i || k == j) continue;
        if (m.at(i, j) > m.at(i, k) + m.at(k, j)) {
          tri.pass = false;
          tri.detail = "d(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                       fraction_string(m.at(i, j)) + " exceeds the path through " +
                       std::to_string(k);
        }
      }
    }
  }
  rep.checks.push_back(tri);
  return rep;
}

RatMatrix principal_submatrix(const RatMatrix& m, const std::vector<int>& idx) {
  std::vector<char> seen(m.n + 1, 0);
  for (int i : idx) {
    if (i < 1 || i > m.n) throw std::invalid_argument("index " + std::to_string(i) + " out of range");
    if (seen[i]) throw std::invalid_argument("repeated index " + std::to_string(i));
    seen[i] = 1;
  }
  RatMatrix out(static_cast<int>(idx.size()));
  for (size_t a = 0; a < idx.size(); ++a) {
    for (size_t b = 0; b < idx.size(); ++b) {
      out.at(static_cast<int>(a) + 1, static_cast<int>(b) + 1) = m.at(idx[a], idx[b]);
    }
  }
  return out;
}

RatMatrix lp_point_metric(const PointSet& ps) {
  const bool inf_norm = std::isinf(ps.p);
  if (!inf_norm && ps.p < 1.0) throw std::invalid_argument("p must be >= 1 or infinity");
  for (const auto& pt : ps.points) {
    if (static_cast<int>(pt.size()) != ps.dim) {
      throw std::invalid_argument("point dimension mismatch");
    }
  }
  const int n = static_cast<int>(ps.points.size());
  RatMatrix d(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto& a = ps.points[i - 1];
      const auto& b = ps.points[j - 1];
      Rat dist;
      if (ps.p == 1.0) {
        Rat s(0);
        for (int k = 0; k < ps.dim; ++k) s += abs(a[k] - b[k]);
        dist = s;
      } else if (inf_norm) {
        Rat s(0);
        for (int k = 0; k < ps.dim; ++k) s = std::max(s, Rat(abs(a[k] - b[k])));
        dist = s;
      } else if (ps.dim == 1) {
        dist = abs(a[0] - b[0]);
      } else if (ps.p == 2.0) {
        Rat s(0);
        for (int k = 0; k < ps.dim; ++k) {
          Rat diff = a[k] - b[k];
          s += diff * diff;
        }
        dist = Rat(std::sqrt(to_double(s)));
      } else {
        double s = 0.0;
        for (int k = 0; k < ps.dim; ++k) {
          s += std::pow(std::abs(to_double(a[k] - b[k])), ps.p);
        }
        dist = Rat(std::pow(s, 1.0 / ps.p));
      }
      d.at(i, j) = dist;
      d.at(j, i) = dist;
    }
  }
  return d;
}

RatMatrix read_metric(const std::string& text) {
  std::istringstream in(text);
  std::string kw;
  int n = 0;
  in >> kw >> n;
  if (in.fail() || kw != "metric" || n < 1) {
    throw std::invalid_argument("malformed header, expected 'metric <n>'");
  }
  RatMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("metric file truncated");
      m.at(i, j) = rat_from_decimal(tok);
    }
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing content in metric file");
  SemimetricReport rep = validate_semimetric(m);
  if (!rep.pass()) {
    throw std::invalid_argument("not a semimetric, failed invariant " + rep.first_failure());
  }
  return m;
}

std::string format_metric(const RatMatrix& m) {
  std::ostringstream out;
  out << "metric " << m.n << "\n";
  for (int i = 1; i <= m.n; ++i) {
    for (int j = 1; j <= m.n; ++j) {
      if (j > 1) out << " ";
      out << decimal_string(m.at(i, j));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace gmet
