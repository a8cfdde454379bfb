// SPDX-License-Identifier: Apache-2.0
#include "pleig/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pleig/errors.hpp"

namespace pleig {
namespace {

const double PI = 3.14159265358979323846;

void validate_p(double p) {
  if (!(p >= 1.05) || !(p <= 200.0))
    throw InputError("p must lie in [1.05, 200]");
}

double signed_power(double t, double q) {
  // |t|^q * sign(t); q > 0 so this is continuous through zero
  return std::pow(std::abs(t), q) * (t >= 0.0 ? 1.0 : -1.0);
}

} // namespace

double p_mean(const ScalarField& u, double p) {
  if (!(p > 1.0)) throw InputError("exponent p must exceed 1");
  const Mesh& m = *u.mesh;
  double s = 0.0;
  for (int i = 0; i < m.n_nodes(); ++i)
    s += m.lumped_mass[i] * signed_power(u.values[i], p - 1.0);
  return s / m.measure;
}

ScalarField p_mean_shift(const ScalarField& u, double p) {
  if (!(p > 1.0)) throw InputError("exponent p must exceed 1");
  const Mesh& m = *u.mesh;
  const auto [lo_it, hi_it] =
      std::minmax_element(u.values.begin(), u.values.end());
  double lo = *lo_it, hi = *hi_it;
  ScalarField out(m, u.values);
  if (hi == lo) {
    std::fill(out.values.begin(), out.values.end(), 0.0);
    return out;
  }
  const double tol = 1e-12 * std::max(1.0, norm_p(u, p));
  const auto shifted_mean = [&](double c) {
    double s = 0.0;
    for (int i = 0; i < m.n_nodes(); ++i)
      s += m.lumped_mass[i] * signed_power(u.values[i] - c, p - 1.0);
    return s / m.measure;
  };
  // c -> mean_p(u - c) is strictly decreasing with a root in [lo, hi]
  double c = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    c = 0.5 * (lo + hi);
    const double g = shifted_mean(c);
    if (std::abs(g) <= tol || c == lo || c == hi) break;
    if (g > 0.0)
      lo = c;
    else
      hi = c;
  }
  for (auto& v : out.values) v -= c;
  return out;
}

ScalarField build_rhs(const BipartitionState& state, double p) {
  const Mesh& m = *state.u_plus.mesh;
  ScalarField f(m);
  for (int i = 0; i < m.n_nodes(); ++i)
    f.values[i] =
        state.lambda_plus * std::pow(state.u_plus.values[i], p - 1.0) -
        state.lambda_minus * std::pow(state.u_minus.values[i], p - 1.0);
  return f;
}

BipartitionState init_guess(const Mesh& mesh, double p, BC bc) {
  validate_p(p);
  const double lx = mesh.x1 - mesh.x0;
  const double ly = (mesh.dim == 2) ? (mesh.y1 - mesh.y0) : 0.0;
  const bool x_longer = lx >= ly;

  ScalarField u(mesh);
  for (int i = 0; i < mesh.n_nodes(); ++i) {
    const double xi = (mesh.node_x[i] - mesh.x0) / lx;
    if (bc == BC::dirichlet) {
      if (mesh.boundary_mask[i]) continue;
      if (mesh.dim == 1) {
        u.values[i] = std::sin(2.0 * PI * xi);
      } else {
        const double eta = (mesh.node_y[i] - mesh.y0) / ly;
        u.values[i] = x_longer
                          ? std::sin(2.0 * PI * xi) * std::sin(PI * eta)
                          : std::sin(PI * xi) * std::sin(2.0 * PI * eta);
      }
    } else {
      const double along =
          (mesh.dim == 1 || x_longer)
              ? xi
              : (mesh.node_y[i] - mesh.y0) / ly;
      u.values[i] = std::cos(PI * along);
    }
  }
  // nodes on the nodal line evaluate to ~1e-16 leftovers; snap them so the
  // parts start with exactly disjoint supports
  for (auto& v : u.values)
    if (std::abs(v) < 1e-13) v = 0.0;
  if (bc == BC::neumann) u = p_mean_shift(u, p);

  auto [up, um] = split_parts(u);
  const double sp = norm_p(up, p);
  const double sm = norm_p(um, p);
  if (!(sp > 0.0) || !(sm > 0.0))
    throw InputError("mesh too coarse to resolve the sign change of the "
                     "initial guess");

  BipartitionState st;
  st.u = std::move(u);
  st.u_plus = normalize_p(up, p);
  st.u_minus = normalize_p(um, p);
  st.lambda_plus = grad_energy(st.u_plus, p);
  st.lambda_minus = grad_energy(st.u_minus, p);
  const double nrm = norm_p(st.u, p);
  st.rayleigh = grad_energy(st.u, p) / std::pow(nrm, p);
  return st;
}

InvariantDiagnostics check_iteration_invariants(const BipartitionState& prev,
                                                const BipartitionState& next,
                                                double p) {
  InvariantDiagnostics d;
  const double bound = std::max(prev.lambda_plus, prev.lambda_minus);
  d.rayleigh_margin = bound * (1.0 + 1e-8) - next.rayleigh;
  const double floor_val = std::pow(2.0, -(p - 1.0) / p) * (1.0 - 1e-8);
  d.lower_bound_margin = norm_p(next.u, p) - floor_val;
  return d;
}

EigenReport iterate(BipartitionState state, double p, BC bc,
                    const SolverConfig& solver_cfg, double outer_tol,
                    int max_outer) {
  validate_p(p);
  if (!(outer_tol > 0.0) || max_outer < 1)
    throw InputError("iterate needs positive outer_tol and max_outer >= 1");
  SolverConfig cfg = solver_cfg;
  cfg.p = p;
  const Mesh& mesh = *state.u_plus.mesh;

  EigenReport rep;
  rep.p = p;
  rep.bc = bc;

  ScalarField warm(mesh, state.u.values);
  for (int k = 0; k < max_outer; ++k) {
    ScalarField f = build_rhs(state, p);
    ScalarField u;
    SolveReport srep;
    if (bc == BC::neumann) {
      // the discrete right side carries a small nonzero mean; project it out
      // so the pinned system is consistent
      double net = 0.0;
      for (int i = 0; i < mesh.n_nodes(); ++i)
        net += mesh.lumped_mass[i] * f.values[i];
      const double shift = net / mesh.measure;
      for (auto& v : f.values) v -= shift;
      auto res = solve_p_poisson_neumann(f, cfg, &warm);
      u = std::move(res.first);
      srep = std::move(res.second);
      rep.pmean_after_shift.push_back(std::abs(p_mean(u, p)));
    } else {
      auto res = solve_p_poisson_dirichlet(f, cfg, &warm);
      u = std::move(res.first);
      srep = std::move(res.second);
    }
    if (!srep.converged && srep.iterations == 0) {
      // the inner solver could not move at all; continuing would re-derive
      // the same state and fake outer convergence
      rep.invariant_violations.push_back(
          "iteration " + std::to_string(k) +
          ": inner solver made no progress");
      break;
    }
    warm = ScalarField(mesh, u.values);

    const double pre = norm_p(u, p);
    const double ray = grad_energy(u, p) / std::pow(pre, p);

    auto [up, um] = split_parts(u);
    const double sp = norm_p(up, p);
    const double sm = norm_p(um, p);
    if (!(sp > 0.0) || !(sm > 0.0))
      throw PartitionCollapseError(
          "iteration " + std::to_string(k) +
          ": one side of the partition vanished");

    BipartitionState next;
    next.u = std::move(u);
    next.u_plus = normalize_p(up, p);
    next.u_minus = normalize_p(um, p);
    next.lambda_plus = grad_energy(next.u_plus, p);
    next.lambda_minus = grad_energy(next.u_minus, p);
    next.rayleigh = ray;

    const InvariantDiagnostics diag =
        check_iteration_invariants(state, next, p);
    rep.rayleigh_margins.push_back(diag.rayleigh_margin);
    rep.lower_bound_margins.push_back(diag.lower_bound_margin);
    rep.pre_norms.push_back(pre);
    if (!diag.ok())
      rep.invariant_violations.push_back(
          "iteration " + std::to_string(k) + ": rayleigh margin " +
          std::to_string(diag.rayleigh_margin) + ", lower bound margin " +
          std::to_string(diag.lower_bound_margin));

    rep.lambda_plus_history.push_back(next.lambda_plus);
    rep.lambda_minus_history.push_back(next.lambda_minus);
    rep.rayleigh_history.push_back(ray);

    const bool done =
        std::abs(next.lambda_plus - state.lambda_plus) <
            outer_tol * std::max(1.0, state.lambda_plus) &&
        std::abs(next.lambda_minus - state.lambda_minus) <
            outer_tol * std::max(1.0, state.lambda_minus);
    state = std::move(next);
    rep.iterations = k + 1;
    if (done) {
      rep.converged = true;
      break;
    }
  }

  rep.lambda2 = std::max(state.lambda_plus, state.lambda_minus);
  rep.rayleigh = state.rayleigh;
  rep.u2 = ScalarField(mesh);
  for (int i = 0; i < mesh.n_nodes(); ++i)
    rep.u2.values[i] = state.u_plus.values[i] - state.u_minus.values[i];

  // norm identities of the normalized parts; exact by disjoint nodal
  // supports up to rounding
  const double whole = std::pow(norm_p(rep.u2, p), p);
  rep.part_identity_dev = std::abs(whole - 2.0) / 2.0;
  ScalarField scaled(mesh);
  for (int i = 0; i < mesh.n_nodes(); ++i)
    scaled.values[i] = state.lambda_plus * state.u_plus.values[i] -
                       state.lambda_minus * state.u_minus.values[i];
  const double lhs = std::pow(norm_p(scaled, p), p);
  const double rhs = std::pow(state.lambda_plus, p) +
                     std::pow(state.lambda_minus, p);
  rep.scaled_identity_dev = std::abs(lhs - rhs) / rhs;
  return rep;
}

} // namespace pleig
