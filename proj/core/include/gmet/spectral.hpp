#pragma once

#include "gmet/metric.hpp"

#include <string>
#include <vector>

namespace gmet {

struct RealMatrix {
  int n = 0;
  std::vector<double> v;

  RealMatrix() = default;
  explicit RealMatrix(int size) : n(size), v(static_cast<size_t>(size) * size, 0.0) {}

  double& at(int i, int j) { return v[static_cast<size_t>(i - 1) * n + (j - 1)]; }
  double at(int i, int j) const { return v[static_cast<size_t>(i - 1) * n + (j - 1)]; }
};

RealMatrix to_real(const RatMatrix& m);

// Eigenvalues sorted descending plus the absolute tolerance used to classify
// a value as zero.
struct Spectrum {
  std::vector<double> values;
  double zero_tol = 0.0;
};

struct Inertia {
  int plus = 0;
  int zero = 0;
  int minus = 0;
  bool operator==(const Inertia&) const = default;
};

// 1e-9 * max(1, max |entry|) * n. Wide enough that exact-zero eigenvalues
// perturbed at float scale are never misclassified.
double default_zero_tol(const RealMatrix& m);

// Cyclic Jacobi on a dense symmetric copy; sweeps until the off-diagonal
// Frobenius norm drops below 1e-12 * ||m||. Pass zero_tol < 0 for the default.
Spectrum eigenvalues_symmetric(const RealMatrix& m, double zero_tol = -1.0);

Inertia classify_inertia(const Spectrum& s);
Inertia inertia_of(const RealMatrix& m, double zero_tol = -1.0);
Inertia inertia_of(const RatMatrix& m, double zero_tol = -1.0);

struct CheckReport {
  bool skipped = false;
  std::string notice;
  std::vector<InvariantCheck> checks;
  bool pass() const;
};

// Perron-Frobenius facts for a nonzero distance matrix: the spectral radius
// is the top eigenvalue, simple, within the extreme row sums, and the
// eigenvalue sum vanishes. The zero matrix is skipped with a notice.
CheckReport perron_check(const RatMatrix& m, double zero_tol = -1.0);

// Cauchy interlacing of the principal submatrix on idx, including
// i_plus(sub) <= i_plus(full).
CheckReport interlacing_check(const RatMatrix& m, const std::vector<int>& idx,
                              double zero_tol = -1.0);

}  // namespace gmet
