// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace pleig {

// Weighted undirected graph, symmetric CSR adjacency, zero diagonal.
// Immutable after build.
struct Graph {
  int n = 0;
  std::vector<int> row_ptr;   // size n+1
  std::vector<int> col_idx;   // both (i,j) and (j,i) stored
  std::vector<double> weight; // parallel to col_idx
  std::vector<double> degree; // d_i = sum_j w_ij
  std::vector<double> node_mass; // for norms, default 1
  bool connected = true; // warning flag, set by the builders

  int n_edges() const { return static_cast<int>(col_idx.size()) / 2; }
};

struct CutMetrics {
  double cut_value = 0.0;
  double rcc = 0.0; // cut / min(|C|, |C^c|)
  double ncc = 0.0; // cut / min(vol C, vol C^c)
  std::array<int, 2> side_sizes{0, 0};
  std::array<double, 2> side_volumes{0.0, 0.0};
};

struct GraphEigenConfig {
  double eps_reg = 1e-8;
  double w_min = 1e-10;
  double w_max = 1e10;
  double outer_tol = 1e-6;
  int max_outer = 200;
  double inner_tol = 1e-8;
  int max_inner = 200;
  double cg_tol = 1e-10;
  int cg_max_iter = 5000;
  double alpha_max = 2.0;
};

struct GraphEigenReport {
  double p = 2.0;
  double lambda2 = 0.0; // Rayleigh quotient of the final vector
  std::vector<double> lambda_plus_history;
  std::vector<double> lambda_minus_history;
  std::vector<double> rayleigh_history;
  int iterations = 0;
  bool converged = false;
  std::vector<double> f;
  std::vector<std::string> invariant_violations;
  // max(lambda+-^{k-1}) + 1e-8 - R_p(f^k); can go negative on graphs (cut
  // edges charge energy to both parts), recorded rather than asserted
  std::vector<double> rayleigh_margins;
};

enum class EdgeWeight { unit, gauss };

// triplets (i, j, w) with i != j; both orientations filled in
Graph build_graph(int n, const std::vector<std::array<double, 3>>& triplets);

// edge iff 0 < dist <= eps; gauss weight exp(-d^2 / (2 sigma^2))
Graph build_epsilon_graph(const std::vector<std::array<double, 3>>& points,
                          double eps, EdgeWeight kind = EdgeWeight::unit,
                          double sigma = 1.0);

double phi_p(double t, double p); // |t|^(p-1) sign(t)

// (out)_i = sum_j w_ij phi_p(f_i - f_j); the gradient of Q_p / p
std::vector<double> apply_p_laplacian(const Graph& g,
                                      const std::vector<double>& f, double p);

double dirichlet_energy_p(const Graph& g, const std::vector<double>& f,
                          double p); // Q_p = sum_{i<j} w_ij |f_i - f_j|^p
double rayleigh_graph(const Graph& g, const std::vector<double>& f, double p);

// inverse-power analogue of the Neumann bipartition iteration; init overrides
// the default double-BFS start (used by symmetry tests). A disconnected graph
// short-circuits: lambda2 = 0 with the indicator of the smallest component
// (shifted and normalized), iterations = 0.
GraphEigenReport graph_second_eigenpair(const Graph& g, double p,
                                        const GraphEigenConfig& cfg,
                                        const std::vector<double>* init = nullptr);

// C = { i : f_i > 0 }, ties at zero go to the complement
std::vector<int> threshold_cut(const std::vector<double>& f);

CutMetrics cut_metrics(const Graph& g, const std::vector<int>& C);

// enumerates all bipartitions; n <= 20
std::pair<double, std::vector<int>> brute_force_rcc(const Graph& g);

// dense symmetric eigensolve oracle for small graphs (n <= 64): the second
// smallest eigenvalue of the p = 2 Laplacian
double fiedler_value(const Graph& g);

// rows "x[,y[,z]]", optional header line
std::vector<std::array<double, 3>> read_points_csv(const std::string& path);
void write_labels_csv(const std::string& path, const std::vector<int>& labels);

} // namespace pleig
