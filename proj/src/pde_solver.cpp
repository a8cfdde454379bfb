// SPDX-License-Identifier: Apache-2.0
#include "pleig/pde_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "pleig/eigensolver.hpp"
#include "pleig/errors.hpp"
#include "sparse.hpp"

namespace pleig {
namespace {

constexpr double kGold = 0.61803398874989484820;
constexpr int kLineSearchEvals = 40;
constexpr double kDualFloor = 1e-300;

void validate_config(const SolverConfig& cfg) {
  if (!(cfg.p > 1.0)) throw InputError("solver config needs p > 1");
  if (!(cfg.w_min > 0.0) || !(cfg.w_min <= cfg.w_max))
    throw InputError("solver config needs 0 < w_min <= w_max");
  if (!(cfg.outer_tol > 0.0) || !(cfg.cg_tol > 0.0))
    throw InputError("solver tolerances must be positive");
  if (cfg.max_outer < 1 || cfg.cg_max_iter < 1)
    throw InputError("solver iteration limits must be at least 1");
  if (!(cfg.alpha_max > 0.0)) throw InputError("alpha_max must be positive");
}

double effective_eps(const SolverConfig& cfg, const Mesh& m) {
  if (cfg.eps_reg >= 0.0) return cfg.eps_reg;
  const double diam = (m.dim == 1) ? (m.x1 - m.x0)
                                   : std::hypot(m.x1 - m.x0, m.y1 - m.y0);
  return 1e-8 / diam;
}

// Weighted P1 stiffness with a fixed sparsity pattern; values are rewritten
// per descent step. Pinned rows/columns are eliminated (identity row) so the
// system stays SPD.
struct Assembler {
  const Mesh* mesh;
  std::vector<std::uint8_t> pinned;
  CsrMatrix mat;
  std::vector<std::array<int, 9>> slots;
  std::vector<std::array<double, 9>> local;

  Assembler(const Mesh& m, BC bc) : mesh(&m) {
    const int n = m.n_nodes();
    const int npe = m.nodes_per_element();
    pinned.assign(n, 0);
    if (bc == BC::dirichlet)
      pinned.assign(m.boundary_mask.begin(), m.boundary_mask.end());
    else
      pinned[0] = 1;

    std::vector<std::vector<int>> cols(n);
    for (int e = 0; e < m.n_elements(); ++e)
      for (int a = 0; a < npe; ++a) {
        const int i = m.elements[e][a];
        for (int b = 0; b < npe; ++b) {
          const int j = m.elements[e][b];
          auto& row = cols[i];
          auto it = std::lower_bound(row.begin(), row.end(), j);
          if (it == row.end() || *it != j) row.insert(it, j);
        }
      }
    mat.n = n;
    mat.row_ptr.assign(n + 1, 0);
    for (int i = 0; i < n; ++i)
      mat.row_ptr[i + 1] = mat.row_ptr[i] + (int)cols[i].size();
    mat.col_idx.reserve(mat.row_ptr[n]);
    for (int i = 0; i < n; ++i)
      mat.col_idx.insert(mat.col_idx.end(), cols[i].begin(), cols[i].end());
    mat.val.assign(mat.row_ptr[n], 0.0);

    slots.resize(m.n_elements());
    local.resize(m.n_elements());
    for (int e = 0; e < m.n_elements(); ++e)
      for (int a = 0; a < npe; ++a) {
        const int i = m.elements[e][a];
        for (int b = 0; b < npe; ++b) {
          const int j = m.elements[e][b];
          const auto first = mat.col_idx.begin() + mat.row_ptr[i];
          const auto last = mat.col_idx.begin() + mat.row_ptr[i + 1];
          slots[e][a * npe + b] =
              (int)(mat.row_ptr[i] + (std::lower_bound(first, last, j) - first));
          const auto& ga = m.basis_gradients[e][a];
          const auto& gb = m.basis_gradients[e][b];
          local[e][a * npe + b] =
              m.element_measure[e] * (ga[0] * gb[0] + ga[1] * gb[1]);
        }
      }
  }

  void assemble(const std::vector<double>& w) {
    std::fill(mat.val.begin(), mat.val.end(), 0.0);
    const int npe = mesh->nodes_per_element();
    for (int e = 0; e < mesh->n_elements(); ++e)
      for (int ab = 0; ab < npe * npe; ++ab)
        mat.val[slots[e][ab]] += w[e] * local[e][ab];
    for (int i = 0; i < mat.n; ++i) {
      if (pinned[i]) {
        for (int k = mat.row_ptr[i]; k < mat.row_ptr[i + 1]; ++k)
          mat.val[k] = (mat.col_idx[k] == i) ? 1.0 : 0.0;
      } else {
        for (int k = mat.row_ptr[i]; k < mat.row_ptr[i + 1]; ++k)
          if (pinned[mat.col_idx[k]]) mat.val[k] = 0.0;
      }
    }
  }
};

std::vector<double> element_weights(const ScalarField& u, double p, double eps,
                                    const SolverConfig& cfg) {
  const std::vector<double> gn = grad_norms(u);
  std::vector<double> w(gn.size());
  for (size_t e = 0; e < gn.size(); ++e)
    w[e] = std::clamp(std::pow(eps + gn[e], p - 2.0), cfg.w_min, cfg.w_max);
  return w;
}

ScalarField mass_times(const ScalarField& f) {
  ScalarField r(*f.mesh);
  for (int i = 0; i < f.mesh->n_nodes(); ++i)
    r.values[i] = f.mesh->lumped_mass[i] * f.values[i];
  return r;
}

// one linearized solve + golden-section line search, residual supplied
StepResult step_core(const ScalarField& u, const ScalarField& f, double p,
                     const SolverConfig& cfg, Assembler& asmb,
                     const ScalarField& R, double energy_now) {
  const Mesh& m = *u.mesh;
  asmb.assemble(element_weights(u, p, effective_eps(cfg, m), cfg));

  std::vector<double> rhs = R.values;
  for (int i = 0; i < m.n_nodes(); ++i)
    if (asmb.pinned[i]) rhs[i] = 0.0;
  std::vector<double> x(m.n_nodes(), 0.0);
  const CgResult cg = pcg_jacobi(asmb.mat, rhs, x, cfg.cg_tol, cfg.cg_max_iter);
  if (!cg.converged)
    throw SolverError("conjugate gradient did not reach tolerance",
                      cg.iterations);
  ScalarField dir(m, std::move(x));

  const auto eval = [&](double a) {
    ScalarField trial(m, u.values);
    for (int i = 0; i < m.n_nodes(); ++i)
      trial.values[i] += a * dir.values[i];
    return energy(trial, f, p);
  };
  double lo = 0.0, hi = cfg.alpha_max;
  double c = hi - kGold * (hi - lo);
  double d = lo + kGold * (hi - lo);
  double fc = eval(c);
  double fd = eval(d);
  for (int evals = 2; evals < kLineSearchEvals; ++evals) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kGold * (hi - lo);
      fc = eval(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kGold * (hi - lo);
      fd = eval(d);
    }
  }
  const double alpha = (fc < fd) ? c : d;
  const double e_new = (fc < fd) ? fc : fd;

  StepResult out;
  out.alpha = alpha;
  out.cg_iterations = cg.iterations;
  if (e_new > energy_now) {
    out.u_next = ScalarField(m, u.values);
    out.energy_next = energy_now;
    out.decreased = false;
    return out;
  }
  out.u_next = ScalarField(m, u.values);
  for (int i = 0; i < m.n_nodes(); ++i)
    out.u_next.values[i] += alpha * dir.values[i];
  out.energy_next = e_new;
  out.decreased = true;
  return out;
}

ScalarField linear_presolve(const ScalarField& f, const SolverConfig& cfg,
                            Assembler& asmb) {
  const Mesh& m = *f.mesh;
  asmb.assemble(std::vector<double>(m.n_elements(), 1.0));
  std::vector<double> rhs = mass_times(f).values;
  for (int i = 0; i < m.n_nodes(); ++i)
    if (asmb.pinned[i]) rhs[i] = 0.0;
  std::vector<double> x(m.n_nodes(), 0.0);
  const CgResult cg = pcg_jacobi(asmb.mat, rhs, x, cfg.cg_tol, cfg.cg_max_iter);
  if (!cg.converged)
    throw SolverError("conjugate gradient did not reach tolerance",
                      cg.iterations);
  return ScalarField(m, std::move(x));
}

std::pair<ScalarField, SolveReport> solve_core(const ScalarField& f,
                                               const SolverConfig& cfg, BC bc,
                                               const ScalarField* start) {
  validate_config(cfg);
  const Mesh& m = *f.mesh;
  Assembler asmb(m, bc);
  const double p = cfg.p;
  const double den =
      std::max(dual_residual_norm(mass_times(f), p), kDualFloor);

  ScalarField u = start ? ScalarField(m, start->values)
                        : linear_presolve(f, cfg, asmb);
  double e_now = energy(u, f, p);
  SolveReport rep;
  rep.energy_history.push_back(e_now);

  for (int k = 0; k < cfg.max_outer; ++k) {
    const ScalarField R = residual(u, f, p, bc);
    const double rel = dual_residual_norm(R, p) / den;
    rep.residual_history.push_back(rel);
    if (rel <= cfg.outer_tol) {
      rep.iterations = k;
      rep.converged = true;
      return {std::move(u), std::move(rep)};
    }
    StepResult step = step_core(u, f, p, cfg, asmb, R, e_now);
    if (!step.decreased) {
      rep.iterations = k;
      rep.converged = false; // stagnated short of the tolerance
      return {std::move(u), std::move(rep)};
    }
    u = std::move(step.u_next);
    e_now = step.energy_next;
    rep.energy_history.push_back(e_now);
  }
  const double rel =
      dual_residual_norm(residual(u, f, p, bc), p) / den;
  rep.residual_history.push_back(rel);
  rep.iterations = cfg.max_outer;
  rep.converged = rel <= cfg.outer_tol;
  return {std::move(u), std::move(rep)};
}

} // namespace

double energy(const ScalarField& u, const ScalarField& f, double p) {
  const Mesh& m = *u.mesh;
  double load = 0.0;
  for (int i = 0; i < m.n_nodes(); ++i)
    load += m.lumped_mass[i] * f.values[i] * u.values[i];
  return grad_energy(u, p) / p - load;
}

ScalarField residual(const ScalarField& u, const ScalarField& f, double p,
                     BC bc) {
  const Mesh& m = *u.mesh;
  ScalarField R = mass_times(f);
  const int npe = m.nodes_per_element();
  for (int e = 0; e < m.n_elements(); ++e) {
    const auto g = element_gradient(u, e);
    const double gn = std::sqrt(g[0] * g[0] + g[1] * g[1]);
    if (gn == 0.0) continue; // flux vanishes; avoids 0^(p-2) for p < 2
    const double coef = m.element_measure[e] * std::pow(gn, p - 2.0);
    for (int l = 0; l < npe; ++l) {
      const auto& bg = m.basis_gradients[e][l];
      R.values[m.elements[e][l]] -= coef * (g[0] * bg[0] + g[1] * bg[1]);
    }
  }
  if (bc == BC::dirichlet)
    for (int i = 0; i < m.n_nodes(); ++i)
      if (m.boundary_mask[i]) R.values[i] = 0.0;
  return R;
}

double dual_residual_norm(const ScalarField& r, double p) {
  const Mesh& m = *r.mesh;
  const double q = p / (p - 1.0);
  double s = 0.0;
  for (int i = 0; i < m.n_nodes(); ++i)
    s += m.lumped_mass[i] *
         std::pow(std::abs(r.values[i] / m.lumped_mass[i]), q);
  return std::pow(s, 1.0 / q);
}

StepResult descent_step(const ScalarField& u, const ScalarField& f, double p,
                        const SolverConfig& cfg, BC bc) {
  SolverConfig c = cfg;
  c.p = p;
  validate_config(c);
  Assembler asmb(*u.mesh, bc);
  const ScalarField R = residual(u, f, p, bc);
  return step_core(u, f, p, c, asmb, R, energy(u, f, p));
}

std::pair<ScalarField, SolveReport>
solve_p_poisson_dirichlet(const ScalarField& f, const SolverConfig& cfg,
                          const ScalarField* start) {
  return solve_core(f, cfg, BC::dirichlet, start);
}

std::pair<ScalarField, SolveReport>
solve_p_poisson_neumann(const ScalarField& f, const SolverConfig& cfg,
                        const ScalarField* start) {
  const Mesh& m = *f.mesh;
  double net = 0.0;
  for (int i = 0; i < m.n_nodes(); ++i)
    net += m.lumped_mass[i] * f.values[i];
  const double scale = dual_residual_norm(mass_times(f), cfg.p);
  if (std::abs(net) > 1e-10 * scale)
    throw InputError("Neumann load violates the zero-mean compatibility "
                     "condition");
  auto [u, rep] = solve_core(f, cfg, BC::neumann, start);
  return {p_mean_shift(u, cfg.p), std::move(rep)};
}

FirstEigenpair first_eigenpair(const Mesh& mesh, double p, BC bc,
                               const SolverConfig& cfg, double eigen_tol,
                               int max_eigen_iter) {
  if (bc != BC::dirichlet)
    throw InputError("first_eigenpair supports Dirichlet conditions only");
  SolverConfig c = cfg;
  c.p = p;
  validate_config(c);

  // positive first-mode bump, zero on the boundary
  const double PI = 3.14159265358979323846;
  ScalarField v(mesh);
  for (int i = 0; i < mesh.n_nodes(); ++i) {
    if (mesh.boundary_mask[i]) continue;
    double s = std::sin(PI * (mesh.node_x[i] - mesh.x0) / (mesh.x1 - mesh.x0));
    if (mesh.dim == 2)
      s *= std::sin(PI * (mesh.node_y[i] - mesh.y0) / (mesh.y1 - mesh.y0));
    v.values[i] = s;
  }
  v = normalize_p(v, p);

  FirstEigenpair out;
  double lam = grad_energy(v, p);
  ScalarField prev_solution;
  for (int k = 1; k <= max_eigen_iter; ++k) {
    ScalarField f(mesh);
    for (int i = 0; i < mesh.n_nodes(); ++i) {
      const double t = v.values[i];
      f.values[i] = std::pow(std::abs(t), p - 1.0) * (t >= 0.0 ? 1.0 : -1.0);
    }
    auto [sol, rep] =
        solve_p_poisson_dirichlet(f, c, k == 1 ? nullptr : &prev_solution);
    prev_solution = ScalarField(mesh, sol.values);
    v = normalize_p(sol, p);
    double mean = 0.0;
    for (int i = 0; i < mesh.n_nodes(); ++i)
      mean += mesh.lumped_mass[i] * v.values[i];
    if (mean < 0.0)
      for (auto& t : v.values) t = -t;
    const double lam_new = grad_energy(v, p);
    out.iterations = k;
    if (std::abs(lam_new - lam) <= eigen_tol * lam_new) {
      lam = lam_new;
      out.converged = true;
      break;
    }
    lam = lam_new;
  }
  out.lambda1 = lam;
  out.w1 = std::move(v);
  return out;
}

} // namespace pleig
