// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pleig {

// Structured P1 mesh on an interval or an axis-aligned rectangle.
// Rectangles are split into two triangles per grid cell along the fixed
// lower-left to upper-right diagonal so runs are bit-reproducible.
// Immutable after construction; share read-only.
struct Mesh {
  int dim = 0; // 1 or 2

  std::vector<double> node_x;
  std::vector<double> node_y; // all zero in 1D

  // segments use slots 0,1 (slot 2 = -1); triangles are counter-clockwise
  std::vector<std::array<int, 3>> elements;
  std::vector<double> element_measure;
  // constant gradient of each local basis function, per element
  std::vector<std::array<std::array<double, 2>, 3>> basis_gradients;

  std::vector<std::uint8_t> boundary_mask;
  std::vector<double> lumped_mass; // m_i = sum of adjacent measure/(dim+1)
  double measure = 0.0;            // |Omega|

  // generating parameters, kept for initial guesses and reports
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  int nx = 0, ny = 0; // cells per axis (ny = 0 in 1D)

  int n_nodes() const { return static_cast<int>(node_x.size()); }
  int n_elements() const { return static_cast<int>(elements.size()); }
  int nodes_per_element() const { return dim + 1; }
};

// Nodal coefficients of a piecewise-linear function. Holds a non-owning
// mesh pointer; the mesh must outlive the field.
struct ScalarField {
  const Mesh* mesh = nullptr;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const Mesh& m) : mesh(&m), values(m.n_nodes(), 0.0) {}
  ScalarField(const Mesh& m, std::vector<double> v);
};

Mesh build_interval_mesh(double a, double b, int n_cells);
Mesh build_rectangle_mesh(double x0, double x1, double y0, double y1, int nx,
                          int ny);

std::array<double, 2> element_gradient(const ScalarField& u, int e);
std::vector<double> grad_norms(const ScalarField& u);

// lumped (nodal) quadrature for |u|^p, exact per-element sums for |grad u|^p
double norm_p(const ScalarField& u, double p);
double grad_energy(const ScalarField& u, double p);

std::pair<ScalarField, ScalarField> split_parts(const ScalarField& u);
ScalarField normalize_p(const ScalarField& u, double p);

// header "x,u" (1D) or "x,y,u" (2D), node-index order, 17 significant digits
void write_field_csv(const ScalarField& u, const std::string& path);

} // namespace pleig
