#pragma once

#include "gmet/graph.hpp"
#include "gmet/rational.hpp"

#include <string>
#include <vector>

namespace gmet {

// Dense symmetric matrix of exact rationals, 1-based indexing.
struct RatMatrix {
  int n = 0;
  std::vector<Rat> v;

  RatMatrix() = default;
  explicit RatMatrix(int size) : n(size), v(static_cast<size_t>(size) * size, Rat(0)) {}

  Rat& at(int i, int j) { return v[static_cast<size_t>(i - 1) * n + (j - 1)]; }
  const Rat& at(int i, int j) const { return v[static_cast<size_t>(i - 1) * n + (j - 1)]; }

  bool is_zero() const;
  bool operator==(const RatMatrix&) const = default;
};

RatMatrix rat_matrix_from(int n, const std::vector<std::vector<long>>& rows);

struct InvariantCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SemimetricReport {
  std::vector<InvariantCheck> checks;  // hollow, symmetric, nonnegative, triangle
  bool pass() const;
  std::string first_failure() const;
};

// All-pairs shortest-path distances under the graph's weighting, exact.
RatMatrix distance_matrix(const WeightedGraph& g);

SemimetricReport validate_semimetric(const RatMatrix& m);

// Rows/columns restricted to idx (1-based, distinct) in the given order.
RatMatrix principal_submatrix(const RatMatrix& m, const std::vector<int>& idx);

// Finite point set in Q^dim carrying an l_p norm; p = infinity is allowed.
struct PointSet {
  int dim = 0;
  std::vector<std::vector<Rat>> points;
  double p = 1.0;
};

// Pairwise l_p distances. Exact for p = 1, p = infinity and dim = 1; other p
// round through double precision.
RatMatrix lp_point_metric(const PointSet& ps);

// Metric file format: "metric <n>" then n whitespace-separated rows of
// decimal literals. The reader validates and throws naming the first failed
// semimetric invariant.
RatMatrix read_metric(const std::string& text);
std::string format_metric(const RatMatrix& m);

}  // namespace gmet
