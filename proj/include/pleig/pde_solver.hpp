// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "pleig/mesh.hpp"

namespace pleig {

enum class BC { dirichlet, neumann };

struct SolverConfig {
  double p = 2.0;
  // regularization inside the linearized weight (eps + |grad u|)^(p-2);
  // negative means auto: 1e-8 / domain diameter
  double eps_reg = -1.0;
  // clamp keeps the weighted system SPD and conditioned. p < 2 has a
  // negative exponent at flat spots, large p underflows on low-gradient
  // elements; raise w_min (~1e-2) for p >= 10
  double w_min = 1e-10;
  double w_max = 1e10;
  double outer_tol = 1e-9; // relative residual target, lumped dual norm
  int max_outer = 200;
  double cg_tol = 1e-10;
  int cg_max_iter = 20000;
  double alpha_max = 2.0; // golden-section searches (0, alpha_max]
};

struct SolveReport {
  int iterations = 0; // accepted descent steps
  std::vector<double> residual_history;
  std::vector<double> energy_history; // non-increasing
  bool converged = false;
};

struct StepResult {
  ScalarField u_next;
  double alpha = 0.0;
  double energy_next = 0.0;
  bool decreased = false; // false = line search stagnated, u_next == u
  int cg_iterations = 0;
};

struct FirstEigenpair {
  double lambda1 = 0.0;
  ScalarField w1; // normalized, sign-fixed nonnegative
  int iterations = 0;
  bool converged = false;
};

// E(u) = grad_energy(u,p)/p - sum_i m_i f_i u_i
double energy(const ScalarField& u, const ScalarField& f, double p);

// weak residual tested against each nodal basis function; Dirichlet zeroes
// the boundary entries
ScalarField residual(const ScalarField& u, const ScalarField& f, double p,
                     BC bc = BC::dirichlet);

// (sum_i m_i |r_i/m_i|^q)^(1/q), q = p/(p-1); the norm the stopping test uses
double dual_residual_norm(const ScalarField& r, double p);

StepResult descent_step(const ScalarField& u, const ScalarField& f, double p,
                        const SolverConfig& cfg, BC bc = BC::dirichlet);

// start, when given, seeds the descent (used by the eigensolver warm starts);
// otherwise a unit-weight linear presolve is used
std::pair<ScalarField, SolveReport>
solve_p_poisson_dirichlet(const ScalarField& f, const SolverConfig& cfg,
                          const ScalarField* start = nullptr);

// requires sum_i m_i f_i = 0 to 1e-10 * ||m f||; node 0 is pinned and the
// result is shifted to zero p-mean
std::pair<ScalarField, SolveReport>
solve_p_poisson_neumann(const ScalarField& f, const SolverConfig& cfg,
                        const ScalarField* start = nullptr);

// inverse power iteration for the first (one-signed) eigenpair; Dirichlet only
FirstEigenpair first_eigenpair(const Mesh& mesh, double p, BC bc,
                               const SolverConfig& cfg,
                               double eigen_tol = 1e-6,
                               int max_eigen_iter = 200);

} // namespace pleig
