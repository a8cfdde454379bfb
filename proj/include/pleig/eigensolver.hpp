// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "pleig/mesh.hpp"
#include "pleig/pde_solver.hpp"

namespace pleig {

// One iterate of the bipartition inverse-power iteration. u is the raw
// solver output (kept un-normalized: the lower-bound diagnostic needs its
// norm); u_plus/u_minus are the parts renormalized to unit p-norm.
struct BipartitionState {
  ScalarField u;
  ScalarField u_plus;
  ScalarField u_minus;
  double lambda_plus = 0.0;  // grad_energy(u_plus, p)
  double lambda_minus = 0.0; // grad_energy(u_minus, p)
  double rayleigh = 0.0;     // grad_energy(u, p) / norm_p(u, p)^p
};

struct InvariantDiagnostics {
  // max(prev lambda+-) * (1 + 1e-8) - next.rayleigh; >= 0 passes
  double rayleigh_margin = 0.0;
  // norm_p(next.u) - 2^(-(p-1)/p) * (1 - 1e-8); >= 0 passes
  double lower_bound_margin = 0.0;
  bool ok() const { return rayleigh_margin >= 0.0 && lower_bound_margin >= 0.0; }
};

struct EigenReport {
  double p = 2.0;
  BC bc = BC::dirichlet;
  double lambda2 = 0.0;  // max(lambda+, lambda-) at the final iterate
  double rayleigh = 0.0; // Rayleigh quotient of the final iterate
  std::vector<double> lambda_plus_history;
  std::vector<double> lambda_minus_history;
  std::vector<double> rayleigh_history;
  int iterations = 0;
  bool converged = false;
  ScalarField u2; // u_plus - u_minus, each part unit p-norm

  std::vector<std::string> invariant_violations;
  // per-iteration diagnostics, same length as the histories
  std::vector<double> rayleigh_margins;
  std::vector<double> lower_bound_margins;
  std::vector<double> pre_norms;         // norm of the raw solve output
  std::vector<double> pmean_after_shift; // Neumann runs only
  double part_identity_dev = 0.0;   // |  ||u~||^p - ||u~+||^p - ||u~-||^p  |
  double scaled_identity_dev = 0.0; // rel dev of ||l+ u+ - l- u-||_p^p
};

// (1/|Omega|) sum_i m_i |u_i|^(p-2) u_i
double p_mean(const ScalarField& u, double p);

// u - c with mean_p(u - c) = 0; c by bisection on [min u, max u]
ScalarField p_mean_shift(const ScalarField& u, double p);

// f_i = lambda+ (u_plus_i)^(p-1) - lambda- (u_minus_i)^(p-1)
ScalarField build_rhs(const BipartitionState& state, double p);

// second Laplace eigenfunction shapes: Dirichlet sin(2 pi .) along the longer
// axis (times the single-frequency sine across in 2D), Neumann cos along the
// longer axis; parts split and normalized
BipartitionState init_guess(const Mesh& mesh, double p, BC bc);

InvariantDiagnostics check_iteration_invariants(const BipartitionState& prev,
                                                const BipartitionState& next,
                                                double p);

EigenReport iterate(BipartitionState state, double p, BC bc,
                    const SolverConfig& solver_cfg, double outer_tol = 1e-6,
                    int max_outer = 200);

} // namespace pleig
