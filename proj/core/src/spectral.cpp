#include "gmet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gmet {

RealMatrix to_real(const RatMatrix& m) {
  RealMatrix r(m.n);
  for (size_t i = 0; i < m.v.size(); ++i) r.v[i] = to_double(m.v[i]);
  return r;
}

double default_zero_tol(const RealMatrix& m) {
  double max_abs = 0.0;
  for (double x : m.v) max_abs = std::max(max_abs, std::abs(x));
  return 1e-9 * std::max(1.0, max_abs) * std::max(1, m.n);
}

bool CheckReport::pass() const {
  if (skipped) return true;
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.pass; });
}

Spectrum eigenvalues_symmetric(const RealMatrix& m, double zero_tol) {
  const int n = m.n;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("matrix not symmetric");
    }
  }
  Spectrum s;
  s.zero_tol = zero_tol >= 0 ? zero_tol : default_zero_tol(m);
  if (n == 0) return s;

  std::vector<double> a = m.v;
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

  double frob2 = 0.0;
  for (double x : a) frob2 += x * x;
  const double target2 = 1e-24 * frob2;  // (1e-12 * ||m||)^2

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off2 = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) off2 += at(i, j) * at(i, j);
      }
    }
    if (off2 <= target2) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - sn * akq;
          at(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - sn * aqk;
          at(q, k) = sn * apk + c * aqk;
        }
      }
    }
  }
  s.values.resize(n);
  for (int i = 0; i < n; ++i) s.values[i] = at(i, i);
  std::sort(s.values.begin(), s.values.end(), std::greater<double>());
  return s;
}

Inertia classify_inertia(const Spectrum& s) {
  Inertia in;
  for (double v : s.values) {
    if (v > s.zero_tol) {
      ++in.plus;
    } else if (v < -s.zero_tol) {
      ++in.minus;
    } else {
      ++in.zero;
    }
  }
  return in;
}

Inertia inertia_of(const RealMatrix& m, double zero_tol) {
  return classify_inertia(eigenvalues_symmetric(m, zero_tol));
}

Inertia inertia_of(const RatMatrix& m, double zero_tol) {
  return inertia_of(to_real(m), zero_tol);
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

CheckReport perron_check(const RatMatrix& m, double zero_tol) {
  CheckReport rep;
  if (m.is_zero()) {
    rep.skipped = true;
    rep.notice = "zero matrix: Perron-Frobenius hypotheses require a nonzero weighting";
    return rep;
  }
  RealMatrix rm = to_real(m);
  Spectrum s = eigenvalues_symmetric(rm, zero_tol);
  const double tol = s.zero_tol;
  const double top = s.values.front();
  const double bottom = s.values.back();

  rep.checks.push_back({"spectral_radius_is_top_eigenvalue", top >= std::abs(bottom) - tol,
                        "lambda_max = " + fmt(top) + ", lambda_min = " + fmt(bottom)});
  const bool simple = s.values.size() < 2 || s.values[1] < top - tol;
  rep.checks.push_back({"spectral_radius_simple", simple,
                        s.values.size() < 2 ? "1x1 matrix"
                                            : "gap = " + fmt(top - s.values[1])});
  Rat min_row, max_row;
  for (int i = 1; i <= m.n; ++i) {
    Rat row(0);
    for (int j = 1; j <= m.n; ++j) row += m.at(i, j);
    if (i == 1 || row < min_row) min_row = row;
    if (i == 1 || row > max_row) max_row = row;
  }
  const bool in_bounds = top >= to_double(min_row) - tol && top <= to_double(max_row) + tol;
  rep.checks.push_back({"row_sum_bounds", in_bounds,
                        "rho = " + fmt(top) + " in [" + fraction_string(min_row) + ", " +
                            fraction_string(max_row) + "]"});
  double sum = 0.0;
  for (double v : s.values) sum += v;
  rep.checks.push_back({"eigenvalue_sum_zero", std::abs(sum) <= m.n * tol, "sum = " + fmt(sum)});
  return rep;
}

CheckReport interlacing_check(const RatMatrix& m, const std::vector<int>& idx, double zero_tol) {
  RatMatrix sub = principal_submatrix(m, idx);
  RealMatrix full_r = to_real(m);
  Spectrum full = eigenvalues_symmetric(full_r, zero_tol);
  Spectrum part = eigenvalues_symmetric(to_real(sub), full.zero_tol);
  const double tol = full.zero_tol;
  const int n = m.n;
  const int k = sub.n;

  CheckReport rep;
  bool ok = true;
  std::string detail;
  for (int i = 0; i < k; ++i) {
    const double upper = full.values[i];
    const double lower = full.values[i + (n - k)];
    if (!(part.values[i] <= upper + tol && part.values[i] >= lower - tol)) {
      ok = false;
      detail = "mu_" + std::to_string(i + 1) + " = " + fmt(part.values[i]) + " outside [" +
               fmt(lower) + ", " + fmt(upper) + "]";
      break;
    }
  }
  rep.checks.push_back({"cauchy_interlacing", ok, detail});

  Inertia fi = classify_inertia(full);
  Inertia pi = classify_inertia(part);
  rep.checks.push_back({"iplus_monotone", pi.plus <= fi.plus,
                        "i_plus(sub) = " + std::to_string(pi.plus) +
                            ", i_plus(full) = " + std::to_string(fi.plus)});
  return rep;
}

}  // namespace gmet
