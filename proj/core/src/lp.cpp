#include "gmet/lp.hpp"

#include <stdexcept>

namespace gmet {

std::optional<std::vector<Rat>> lp_feasible_point(std::vector<std::vector<Rat>> A,
                                                  std::vector<Rat> b) {
  const size_t m = A.size();
  if (b.size() != m) throw std::invalid_argument("constraint count mismatch");
  const size_t nv = m == 0 ? 0 : A[0].size();
  for (const auto& row : A) {
    if (row.size() != nv) throw std::invalid_argument("ragged constraint matrix");
  }
  if (m == 0) return std::vector<Rat>(nv, Rat(0));

  for (size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (Rat& x : A[i]) x = -x;
    }
  }

  // Tableau with one artificial per row; phase-1 minimizes their sum.
  const size_t N = nv + m;
  std::vector<std::vector<Rat>> T(m, std::vector<Rat>(N + 1, Rat(0)));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < nv; ++j) T[i][j] = A[i][j];
    T[i][nv + i] = 1;
    T[i][N] = b[i];
    basis[i] = nv + i;
  }
  std::vector<Rat> obj(N + 1, Rat(0));
  for (size_t j = 0; j < nv; ++j) {
    for (size_t i = 0; i < m; ++i) obj[j] -= T[i][j];
  }
  for (size_t i = 0; i < m; ++i) obj[N] -= T[i][N];

  while (true) {
    size_t enter = N;
    for (size_t j = 0; j < N; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;  // Bland: lowest eligible index
      }
    }
    if (enter == N) break;

    size_t leave = m;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      Rat lhs = T[i][N] * T[leave][enter];
      Rat rhs = T[leave][N] * T[i][enter];
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) {
      throw std::runtime_error("phase-1 simplex unbounded; objective should be bounded below");
    }

    Rat piv = T[leave][enter];
    for (Rat& x : T[leave]) x /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (size_t j = 0; j <= N; ++j) T[i][j] -= f * T[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (size_t j = 0; j <= N; ++j) obj[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  if (obj[N] != 0) return std::nullopt;  // optimum = -obj[N] > 0: infeasible
  std::vector<Rat> x(nv, Rat(0));
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] < nv) x[basis[i]] = T[i][N];
  }
  return x;
}

}  // namespace gmet
