// SPDX-License-Identifier: Apache-2.0
#include "pleig/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "pleig/errors.hpp"
#include "sparse.hpp"

namespace pleig {
namespace {

constexpr double kGold = 0.61803398874989484820;
constexpr int kLineSearchEvals = 40;

void validate_p(double p) {
  if (!(p >= 1.05) || !(p <= 200.0))
    throw InputError("p must lie in [1.05, 200]");
}

void check_length(const Graph& g, const std::vector<double>& f) {
  if (static_cast<int>(f.size()) != g.n)
    throw InputError("node vector length does not match the graph");
}

double signed_power(double t, double q) {
  if (q == 1.0) return t; // keep phi_2 exact
  return std::pow(std::abs(t), q) * (t >= 0.0 ? 1.0 : -1.0);
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double norm_p_vec(const std::vector<double>& f, double p) {
  double s = 0.0;
  for (double x : f) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

struct Edge {
  int i, j; // i < j
  double w;
};

bool bfs_reaches_all(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int k = g.row_ptr[u]; k < g.row_ptr[u + 1]; ++k) {
      const int v = g.col_idx[k];
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push_back(v);
      }
    }
  }
  return count == g.n;
}

Graph from_edge_list(int n, const std::vector<Edge>& edges) {
  struct Entry {
    int r, c;
    double w;
  };
  std::vector<Entry> dir;
  dir.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    dir.push_back({e.i, e.j, e.w});
    dir.push_back({e.j, e.i, e.w});
  }
  std::sort(dir.begin(), dir.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.r, a.c) < std::tie(b.r, b.c);
  });
  for (size_t k = 1; k < dir.size(); ++k)
    if (dir[k].r == dir[k - 1].r && dir[k].c == dir[k - 1].c)
      throw InputError("duplicate edge in graph input");

  Graph g;
  g.n = n;
  g.row_ptr.assign(n + 1, 0);
  for (const Entry& e : dir) ++g.row_ptr[e.r + 1];
  for (int i = 0; i < n; ++i) g.row_ptr[i + 1] += g.row_ptr[i];
  g.col_idx.resize(dir.size());
  g.weight.resize(dir.size());
  for (size_t k = 0; k < dir.size(); ++k) {
    g.col_idx[k] = dir[k].c;
    g.weight[k] = dir[k].w;
  }
  g.degree.assign(n, 0.0);
  for (const Entry& e : dir) g.degree[e.r] += e.w;
  g.node_mass.assign(n, 1.0);
  g.connected = bfs_reaches_all(g);
  return g;
}

std::vector<int> bfs_distances(const Graph& g, int s) {
  std::vector<int> dist(g.n, -1);
  dist[s] = 0;
  std::deque<int> q{s};
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int k = g.row_ptr[u]; k < g.row_ptr[u + 1]; ++k) {
      const int v = g.col_idx[k];
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

// double sweep: distances from the far end of a pseudo-diameter give a start
// aligned with the longest direction of the graph
std::vector<double> bfs_diameter_field(const Graph& g) {
  const std::vector<int> d0 = bfs_distances(g, 0);
  const int far = static_cast<int>(
      std::max_element(d0.begin(), d0.end()) - d0.begin());
  const std::vector<int> da = bfs_distances(g, far);
  return std::vector<double>(da.begin(), da.end());
}

// root of sum_i phi_p(f_i - c) = 0; the function is strictly decreasing in c
double p_shift_value(const std::vector<double>& f, double p) {
  const auto mm = std::minmax_element(f.begin(), f.end());
  double lo = *mm.first, hi = *mm.second;
  if (lo == hi) return lo;
  const double tol = 1e-12 * std::max(1.0, norm_p_vec(f, p));
  const auto shifted_sum = [&](double c) {
    double s = 0.0;
    for (double v : f) s += signed_power(v - c, p - 1.0);
    return s;
  };
  double c = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    c = 0.5 * (lo + hi);
    const double gv = shifted_sum(c);
    if (std::abs(gv) <= tol || c == lo || c == hi) break;
    if (gv > 0.0)
      lo = c;
    else
      hi = c;
  }
  return c;
}

// pinned weighted graph Laplacian; pattern fixed at construction, values
// refilled per linearization
struct GraphAssembler {
  const Graph* g;
  int pin;
  CsrMatrix mat;
  std::vector<int> diag_slot; // per row
  std::vector<int> adj_slot;  // per graph CSR entry

  GraphAssembler(const Graph& gr, int pin_) : g(&gr), pin(pin_) {
    const int n = gr.n;
    mat.n = n;
    mat.row_ptr.assign(n + 1, 0);
    for (int i = 0; i < n; ++i)
      mat.row_ptr[i + 1] =
          mat.row_ptr[i] + (gr.row_ptr[i + 1] - gr.row_ptr[i]) + 1;
    mat.col_idx.assign(mat.row_ptr[n], 0);
    mat.val.assign(mat.row_ptr[n], 0.0);
    diag_slot.assign(n, 0);
    adj_slot.assign(gr.col_idx.size(), 0);
    for (int i = 0; i < n; ++i) {
      int s = mat.row_ptr[i];
      bool placed = false;
      for (int k = gr.row_ptr[i]; k < gr.row_ptr[i + 1]; ++k) {
        const int j = gr.col_idx[k];
        if (!placed && j > i) {
          diag_slot[i] = s;
          mat.col_idx[s++] = i;
          placed = true;
        }
        adj_slot[k] = s;
        mat.col_idx[s++] = j;
      }
      if (!placed) {
        diag_slot[i] = s;
        mat.col_idx[s] = i;
      }
    }
  }

  // edge_w parallel to the graph CSR; both orientations carry equal values
  void assemble(const std::vector<double>& edge_w) {
    std::fill(mat.val.begin(), mat.val.end(), 0.0);
    for (int i = 0; i < g->n; ++i) {
      double d = 0.0;
      for (int k = g->row_ptr[i]; k < g->row_ptr[i + 1]; ++k) {
        mat.val[adj_slot[k]] = -edge_w[k];
        d += edge_w[k];
      }
      mat.val[diag_slot[i]] = d;
    }
    for (int k = mat.row_ptr[pin]; k < mat.row_ptr[pin + 1]; ++k)
      mat.val[k] = (mat.col_idx[k] == pin) ? 1.0 : 0.0;
    for (int i = 0; i < g->n; ++i) {
      if (i == pin) continue;
      for (int k = mat.row_ptr[i]; k < mat.row_ptr[i + 1]; ++k)
        if (mat.col_idx[k] == pin) mat.val[k] = 0.0;
    }
  }
};

std::vector<double> linearized_weights(const Graph& g,
                                       const std::vector<double>& f, double p,
                                       const GraphEigenConfig& cfg) {
  std::vector<double> w(g.col_idx.size());
  for (int i = 0; i < g.n; ++i)
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k)
      w[k] = g.weight[k] *
             std::clamp(std::pow(cfg.eps_reg + std::abs(f[i] - f[g.col_idx[k]]),
                                 p - 2.0),
                        cfg.w_min, cfg.w_max);
  return w;
}

double inner_energy(const Graph& g, const std::vector<double>& f,
                    const std::vector<double>& rhs, double p) {
  double dot = 0.0;
  for (int i = 0; i < g.n; ++i) dot += rhs[i] * f[i];
  return dirichlet_energy_p(g, f, p) / p - dot;
}

std::vector<double> inner_residual(const Graph& g, const std::vector<double>& f,
                                   const std::vector<double>& rhs, double p,
                                   int pin) {
  std::vector<double> lap = apply_p_laplacian(g, f, p);
  std::vector<double> r(g.n);
  for (int i = 0; i < g.n; ++i) r[i] = rhs[i] - lap[i];
  r[pin] = 0.0;
  return r;
}

struct InnerReport {
  int iterations = 0; // accepted descent steps
  bool converged = false;
};

// p = 2 inner problem is linear: one pinned Laplacian solve
InnerReport solve_inner_p2(const Graph& g, const std::vector<double>& rhs,
                           const GraphEigenConfig& cfg, int pin,
                           GraphAssembler& asmb, std::vector<double>& f) {
  asmb.assemble(g.weight);
  std::vector<double> b = rhs;
  b[pin] = 0.0;
  f[pin] = 0.0;
  const CgResult cg = pcg_jacobi(asmb.mat, b, f, cfg.cg_tol, cfg.cg_max_iter);
  if (!cg.converged)
    throw SolverError("conjugate gradient did not reach tolerance",
                      cg.iterations);
  InnerReport rep;
  rep.iterations = cg.iterations;
  rep.converged = true;
  return rep;
}

// weighted-linearization descent on J(f) = Q_p/p - <rhs, f>, node pin fixed
InnerReport descent_inner(const Graph& g, const std::vector<double>& rhs,
                          double p, const GraphEigenConfig& cfg, int pin,
                          GraphAssembler& asmb, std::vector<double>& f) {
  InnerReport rep;
  const double den = std::max(norm2(rhs), 1e-300);
  double e_now = inner_energy(g, f, rhs, p);
  for (int it = 0; it < cfg.max_inner; ++it) {
    const std::vector<double> r = inner_residual(g, f, rhs, p, pin);
    if (norm2(r) / den < cfg.inner_tol) {
      rep.converged = true;
      return rep;
    }
    asmb.assemble(linearized_weights(g, f, p, cfg));
    std::vector<double> d(g.n, 0.0);
    const CgResult cg = pcg_jacobi(asmb.mat, r, d, cfg.cg_tol, cfg.cg_max_iter);
    if (!cg.converged)
      throw SolverError("conjugate gradient did not reach tolerance",
                        cg.iterations);
    const auto eval = [&](double a) {
      std::vector<double> trial(f);
      for (int i = 0; i < g.n; ++i) trial[i] += a * d[i];
      return inner_energy(g, trial, rhs, p);
    };
    double lo = 0.0, hi = cfg.alpha_max;
    double c = hi - kGold * (hi - lo);
    double dd = lo + kGold * (hi - lo);
    double fc = eval(c);
    double fd = eval(dd);
    for (int evals = 2; evals < kLineSearchEvals; ++evals) {
      if (fc < fd) {
        hi = dd;
        dd = c;
        fd = fc;
        c = hi - kGold * (hi - lo);
        fc = eval(c);
      } else {
        lo = c;
        c = dd;
        fc = fd;
        dd = lo + kGold * (hi - lo);
        fd = eval(dd);
      }
    }
    const double alpha = (fc < fd) ? c : dd;
    const double e_new = (fc < fd) ? fc : fd;
    if (e_new > e_now) return rep; // stagnated at the energy rounding floor
    for (int i = 0; i < g.n; ++i) f[i] += alpha * d[i];
    e_now = e_new;
    rep.iterations = it + 1;
  }
  const std::vector<double> r = inner_residual(g, f, rhs, p, pin);
  rep.converged = norm2(r) / den < cfg.inner_tol;
  return rep;
}

void validate_cfg(const GraphEigenConfig& cfg) {
  if (!(cfg.eps_reg >= 0.0)) throw InputError("eps_reg must be nonnegative");
  if (!(cfg.w_min > 0.0) || !(cfg.w_max >= cfg.w_min))
    throw InputError("weight clamp needs 0 < w_min <= w_max");
  if (!(cfg.outer_tol > 0.0) || !(cfg.inner_tol > 0.0) || !(cfg.cg_tol > 0.0))
    throw InputError("tolerances must be positive");
  if (cfg.max_outer < 1 || cfg.max_inner < 1 || cfg.cg_max_iter < 1)
    throw InputError("iteration limits must be at least 1");
  if (!(cfg.alpha_max > 0.0)) throw InputError("alpha_max must be positive");
}

GraphEigenReport disconnected_indicator(const Graph& g, double p) {
  std::vector<int> comp(g.n, -1);
  std::vector<int> sizes;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    comp[s] = id;
    int size = 1;
    std::deque<int> q{s};
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int k = g.row_ptr[u]; k < g.row_ptr[u + 1]; ++k) {
        const int v = g.col_idx[k];
        if (comp[v] < 0) {
          comp[v] = id;
          ++size;
          q.push_back(v);
        }
      }
    }
    sizes.push_back(size);
  }
  const int smallest = static_cast<int>(
      std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<double> f(g.n);
  for (int i = 0; i < g.n; ++i) f[i] = (comp[i] == smallest) ? 1.0 : 0.0;
  const double c = p_shift_value(f, p);
  for (double& v : f) v -= c;
  const double nf = norm_p_vec(f, p);
  for (double& v : f) v /= nf;

  GraphEigenReport rep;
  rep.p = p;
  rep.lambda2 = rayleigh_graph(g, f, p); // exactly 0: no edge crosses a level
  rep.iterations = 0;
  rep.converged = true;
  rep.f = std::move(f);
  return rep;
}

} // namespace

Graph build_graph(int n, const std::vector<std::array<double, 3>>& triplets) {
  if (n < 1) throw InputError("graph needs at least one node");
  std::vector<Edge> edges;
  edges.reserve(triplets.size());
  for (const auto& t : triplets) {
    const int i = static_cast<int>(t[0]);
    const int j = static_cast<int>(t[1]);
    if (t[0] != i || t[1] != j || i < 0 || j < 0 || i >= n || j >= n)
      throw InputError("edge endpoints must be node indices below n");
    if (i == j) throw InputError("self loops are not allowed");
    if (!(t[2] > 0.0) || !std::isfinite(t[2]))
      throw InputError("edge weights must be positive and finite");
    edges.push_back({std::min(i, j), std::max(i, j), t[2]});
  }
  return from_edge_list(n, edges);
}

Graph build_epsilon_graph(const std::vector<std::array<double, 3>>& points,
                          double eps, EdgeWeight kind, double sigma) {
  const int n = static_cast<int>(points.size());
  if (n < 2) throw InputError("epsilon graph needs at least two points");
  if (!(eps > 0.0)) throw InputError("eps must be positive");
  if (kind == EdgeWeight::gauss && !(sigma > 0.0))
    throw InputError("sigma must be positive");
  std::vector<Edge> edges;
  const double e2 = eps * eps;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double d2 = 0.0;
      for (int c = 0; c < 3; ++c) {
        const double t = points[i][c] - points[j][c];
        d2 += t * t;
      }
      if (d2 == 0.0 || d2 > e2) continue; // coincident points get no edge
      const double w = (kind == EdgeWeight::unit)
                           ? 1.0
                           : std::exp(-d2 / (2.0 * sigma * sigma));
      edges.push_back({i, j, w});
    }
  }
  return from_edge_list(n, edges);
}

double phi_p(double t, double p) {
  if (!(p > 1.0)) throw InputError("exponent p must exceed 1");
  return signed_power(t, p - 1.0);
}

std::vector<double> apply_p_laplacian(const Graph& g,
                                      const std::vector<double>& f, double p) {
  if (!(p > 1.0)) throw InputError("exponent p must exceed 1");
  check_length(g, f);
  std::vector<double> out(g.n, 0.0);
  for (int i = 0; i < g.n; ++i) {
    double s = 0.0;
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k)
      s += g.weight[k] * signed_power(f[i] - f[g.col_idx[k]], p - 1.0);
    out[i] = s;
  }
  return out;
}

double dirichlet_energy_p(const Graph& g, const std::vector<double>& f,
                          double p) {
  if (!(p > 1.0)) throw InputError("exponent p must exceed 1");
  check_length(g, f);
  double q = 0.0;
  for (int i = 0; i < g.n; ++i)
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      const int j = g.col_idx[k];
      if (j > i) q += g.weight[k] * std::pow(std::abs(f[i] - f[j]), p);
    }
  return q;
}

double rayleigh_graph(const Graph& g, const std::vector<double>& f, double p) {
  if (!(p > 1.0)) throw InputError("exponent p must exceed 1");
  check_length(g, f);
  double den = 0.0;
  for (double v : f) den += std::pow(std::abs(v), p);
  if (!(den > 0.0))
    throw InputError("rayleigh quotient of the zero vector");
  return dirichlet_energy_p(g, f, p) / den;
}

GraphEigenReport graph_second_eigenpair(const Graph& g, double p,
                                        const GraphEigenConfig& cfg,
                                        const std::vector<double>* init) {
  validate_p(p);
  validate_cfg(cfg);
  if (g.n < 2) throw InputError("second eigenpair needs at least two nodes");
  if (!g.connected) return disconnected_indicator(g, p);

  std::vector<double> f = init ? *init : bfs_diameter_field(g);
  check_length(g, f);
  {
    const double c = p_shift_value(f, p);
    for (double& v : f) v -= c;
    const double nf = norm_p_vec(f, p);
    if (!(nf > 1e-300))
      throw DegenerateFieldError("initial field is constant");
    for (double& v : f) v /= nf;
  }

  GraphEigenReport rep;
  rep.p = p;

  // lambda_+- of the signed parts; the shift guarantees both signs appear
  const auto part_lambdas = [&](const std::vector<double>& v, int iter,
                                double& lp, double& lm) {
    std::vector<double> plus(g.n), minus(g.n);
    double sp = 0.0, sm = 0.0;
    for (int i = 0; i < g.n; ++i) {
      plus[i] = std::max(v[i], 0.0);
      minus[i] = std::max(-v[i], 0.0);
      sp += plus[i];
      sm += minus[i];
    }
    if (!(sp > 0.0) || !(sm > 0.0))
      throw PartitionCollapseError(
          "iteration " + std::to_string(iter) +
          ": one side of the partition vanished");
    lp = rayleigh_graph(g, plus, p);
    lm = rayleigh_graph(g, minus, p);
  };

  double lam_plus, lam_minus;
  part_lambdas(f, 0, lam_plus, lam_minus);

  const int pin = 0;
  GraphAssembler asmb(g, pin);
  for (int k = 0; k < cfg.max_outer; ++k) {
    const double lam = rayleigh_graph(g, f, p);
    std::vector<double> rhs(g.n);
    for (int i = 0; i < g.n; ++i)
      rhs[i] = lam * signed_power(f[i], p - 1.0);

    std::vector<double> u = f; // warm start; pin handled by the solvers
    const InnerReport irep =
        (p == 2.0) ? solve_inner_p2(g, rhs, cfg, pin, asmb, u)
                   : descent_inner(g, rhs, p, cfg, pin, asmb, u);
    if (!irep.converged && irep.iterations == 0) {
      // no progress at all; iterating further would replay the same state
      // and fake outer convergence
      rep.invariant_violations.push_back(
          "iteration " + std::to_string(k) +
          ": inner solver made no progress");
      break;
    }

    const double c = p_shift_value(u, p);
    for (double& v : u) v -= c;
    const double nu = norm_p_vec(u, p);
    if (!(nu > 1e-300))
      throw PartitionCollapseError("iteration " + std::to_string(k) +
                                   ": iterate collapsed to a constant");
    for (double& v : u) v /= nu;

    const double ray = rayleigh_graph(g, u, p);
    double lp, lm;
    part_lambdas(u, k, lp, lm);

    // cut edges charge energy to both parts, so unlike the mesh case this
    // margin can go negative; recorded, not enforced
    const double margin = std::max(lam_plus, lam_minus) + 1e-8 - ray;
    rep.rayleigh_margins.push_back(margin);
    if (margin < 0.0)
      rep.invariant_violations.push_back(
          "iteration " + std::to_string(k) + ": rayleigh bound exceeded by " +
          std::to_string(-margin));

    rep.lambda_plus_history.push_back(lp);
    rep.lambda_minus_history.push_back(lm);
    rep.rayleigh_history.push_back(ray);

    const bool done =
        std::abs(lp - lam_plus) < cfg.outer_tol * std::max(1.0, lam_plus) &&
        std::abs(lm - lam_minus) < cfg.outer_tol * std::max(1.0, lam_minus);
    f = std::move(u);
    lam_plus = lp;
    lam_minus = lm;
    rep.iterations = k + 1;
    if (done) {
      rep.converged = true;
      break;
    }
  }

  rep.lambda2 = rayleigh_graph(g, f, p);
  rep.f = std::move(f);
  return rep;
}

std::vector<int> threshold_cut(const std::vector<double>& f) {
  std::vector<int> C;
  for (int i = 0; i < static_cast<int>(f.size()); ++i)
    if (f[i] > 0.0) C.push_back(i);
  if (C.empty() || C.size() == f.size())
    throw DegenerateCutError(
        "thresholding a one-signed vector gives no bipartition");
  return C;
}

CutMetrics cut_metrics(const Graph& g, const std::vector<int>& C) {
  std::vector<char> in_c(g.n, 0);
  int size_c = 0;
  for (int i : C) {
    if (i < 0 || i >= g.n)
      throw InputError("cut contains an invalid node index");
    if (in_c[i]) throw InputError("cut lists a node twice");
    in_c[i] = 1;
    ++size_c;
  }
  if (size_c == 0 || size_c == g.n)
    throw InputError("cut must be a proper nonempty subset");

  double vol_c = 0.0, vol_all = 0.0, cut = 0.0;
  for (int i = 0; i < g.n; ++i) {
    vol_all += g.degree[i];
    if (!in_c[i]) continue;
    vol_c += g.degree[i];
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k)
      if (!in_c[g.col_idx[k]]) cut += g.weight[k];
  }
  CutMetrics m;
  m.cut_value = cut;
  m.side_sizes = {size_c, g.n - size_c};
  m.side_volumes = {vol_c, vol_all - vol_c};
  m.rcc = cut / std::min(m.side_sizes[0], m.side_sizes[1]);
  m.ncc = cut / std::min(m.side_volumes[0], m.side_volumes[1]);
  return m;
}

std::pair<double, std::vector<int>> brute_force_rcc(const Graph& g) {
  if (g.n < 2) throw InputError("bipartition needs at least two nodes");
  if (g.n > 20) throw InputError("brute force is limited to 20 nodes");
  // node n-1 stays outside C, so each unordered bipartition appears once
  const unsigned long last = 1ul << (g.n - 1);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_c;
  std::vector<int> C;
  for (unsigned long mask = 1; mask < last; ++mask) {
    C.clear();
    for (int i = 0; i < g.n - 1; ++i)
      if ((mask >> i) & 1ul) C.push_back(i);
    const CutMetrics m = cut_metrics(g, C);
    if (m.rcc < best) {
      best = m.rcc;
      best_c = C;
    }
  }
  return {best, best_c};
}

double fiedler_value(const Graph& g) {
  if (g.n < 2) throw InputError("fiedler value needs at least two nodes");
  if (g.n > 64) throw InputError("dense eigensolve is limited to 64 nodes");
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      L(i, g.col_idx[k]) -= g.weight[k];
      L(i, i) += g.weight[k];
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
  if (es.info() != Eigen::Success)
    throw SolverError("dense eigensolve failed", 0);
  return es.eigenvalues()[1];
}

namespace {

bool parse_double(const std::string& tok, double& out) {
  const size_t a = tok.find_first_not_of(" \t");
  if (a == std::string::npos) return false;
  const size_t b = tok.find_last_not_of(" \t");
  const std::string t = tok.substr(a, b - a + 1);
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    const size_t c = line.find(',', pos);
    if (c == std::string::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, c - pos));
    pos = c + 1;
  }
  return out;
}

} // namespace

std::vector<std::array<double, 3>> read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open points file: " + path);
  std::vector<std::array<double, 3>> pts;
  std::string line;
  int lineno = 0;
  int columns = 0;
  bool allow_header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::vector<std::string> tok = split_commas(line);
    if (tok.size() < 1 || tok.size() > 3)
      throw InputError("points file line " + std::to_string(lineno) +
                       ": expected 1 to 3 columns");
    std::array<double, 3> row{0.0, 0.0, 0.0};
    bool numeric = true;
    for (size_t c = 0; c < tok.size(); ++c)
      if (!parse_double(tok[c], row[c])) {
        numeric = false;
        break;
      }
    if (!numeric) {
      if (allow_header) { // only the first line may be a header
        allow_header = false;
        continue;
      }
      throw InputError("points file line " + std::to_string(lineno) +
                       ": not a number");
    }
    allow_header = false;
    if (columns == 0) columns = static_cast<int>(tok.size());
    if (static_cast<int>(tok.size()) != columns)
      throw InputError("points file line " + std::to_string(lineno) +
                       ": inconsistent column count");
    pts.push_back(row);
  }
  if (pts.empty()) throw InputError("points file has no rows: " + path);
  return pts;
}

void write_labels_csv(const std::string& path, const std::vector<int>& labels) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write labels file: " + path);
  out << "index,label\n";
  for (size_t i = 0; i < labels.size(); ++i)
    out << i << "," << labels[i] << "\n";
  out.flush();
  if (!out) throw InputError("failed while writing labels file: " + path);
}

} // namespace pleig
