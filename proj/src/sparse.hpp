// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace pleig {

struct CsrMatrix {
  int n = 0;
  std::vector<int> row_ptr;
  std::vector<int> col_idx;
  std::vector<double> val;

  void matvec(const std::vector<double>& x, std::vector<double>& y) const {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k)
        s += val[k] * x[col_idx[k]];
      y[i] = s;
    }
  }
};

struct CgResult {
  int iterations = 0;
  double rel_residual = 0.0;
  bool converged = false;
};

// Jacobi-preconditioned conjugate gradient; x is the starting guess and is
// overwritten. Convergence on ||b - Ax||_2 <= tol * ||b||_2 (absolute when
// b = 0).
inline CgResult pcg_jacobi(const CsrMatrix& A, const std::vector<double>& b,
                           std::vector<double>& x, double tol, int max_iter) {
  const int n = A.n;
  std::vector<double> diag(n, 1.0);
  for (int i = 0; i < n; ++i)
    for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k)
      if (A.col_idx[k] == i && A.val[k] != 0.0) diag[i] = A.val[k];

  std::vector<double> r(n), z(n), p(n), Ap(n);
  A.matvec(x, Ap);
  double bnorm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    r[i] = b[i] - Ap[i];
    bnorm2 += b[i] * b[i];
  }
  const double bnorm = std::sqrt(bnorm2);
  const double target = (bnorm > 0.0) ? tol * bnorm : tol;

  double rz = 0.0;
  for (int i = 0; i < n; ++i) {
    z[i] = r[i] / diag[i];
    p[i] = z[i];
    rz += r[i] * z[i];
  }

  CgResult out;
  double rnorm = 0.0;
  for (int i = 0; i < n; ++i) rnorm += r[i] * r[i];
  rnorm = std::sqrt(rnorm);
  for (int it = 0; it < max_iter; ++it) {
    if (rnorm <= target) {
      out.iterations = it;
      out.rel_residual = (bnorm > 0.0) ? rnorm / bnorm : rnorm;
      out.converged = true;
      return out;
    }
    A.matvec(p, Ap);
    double pAp = 0.0;
    for (int i = 0; i < n; ++i) pAp += p[i] * Ap[i];
    if (!(pAp > 0.0)) break; // matrix not SPD on this subspace
    const double alpha = rz / pAp;
    for (int i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * Ap[i];
    }
    double rz_new = 0.0;
    rnorm = 0.0;
    for (int i = 0; i < n; ++i) {
      z[i] = r[i] / diag[i];
      rz_new += r[i] * z[i];
      rnorm += r[i] * r[i];
    }
    rnorm = std::sqrt(rnorm);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    out.iterations = it + 1;
  }
  out.rel_residual = (bnorm > 0.0) ? rnorm / bnorm : rnorm;
  out.converged = rnorm <= target;
  return out;
}

} // namespace pleig
