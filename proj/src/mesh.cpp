// SPDX-License-Identifier: Apache-2.0
#include "pleig/mesh.hpp"

#include <cmath>
#include <fstream>

#include "pleig/errors.hpp"
#include "pleig/fmt.hpp"

namespace pleig {

ScalarField::ScalarField(const Mesh& m, std::vector<double> v)
    : mesh(&m), values(std::move(v)) {
  if ((int)values.size() != m.n_nodes())
    throw InputError("field length does not match mesh node count");
}

Mesh build_interval_mesh(double a, double b, int n_cells) {
  if (!(b > a)) throw InputError("interval mesh needs b > a");
  if (n_cells < 2) throw InputError("interval mesh needs at least 2 cells");

  Mesh m;
  m.dim = 1;
  m.x0 = a;
  m.x1 = b;
  m.y0 = 0.0;
  m.y1 = 0.0;
  m.nx = n_cells;
  m.ny = 0;
  m.measure = b - a;
  const double h = (b - a) / n_cells;

  m.node_x.resize(n_cells + 1);
  m.node_y.assign(n_cells + 1, 0.0);
  for (int i = 0; i <= n_cells; ++i)
    m.node_x[i] = (i == n_cells) ? b : a + h * i;

  m.elements.resize(n_cells);
  m.element_measure.resize(n_cells);
  m.basis_gradients.resize(n_cells);
  for (int e = 0; e < n_cells; ++e) {
    m.elements[e] = {e, e + 1, -1};
    const double he = m.node_x[e + 1] - m.node_x[e];
    m.element_measure[e] = he;
    m.basis_gradients[e][0] = {-1.0 / he, 0.0};
    m.basis_gradients[e][1] = {1.0 / he, 0.0};
    m.basis_gradients[e][2] = {0.0, 0.0};
  }

  m.boundary_mask.assign(n_cells + 1, 0);
  m.boundary_mask[0] = 1;
  m.boundary_mask[n_cells] = 1;

  m.lumped_mass.assign(n_cells + 1, 0.0);
  for (int e = 0; e < n_cells; ++e) {
    m.lumped_mass[e] += 0.5 * m.element_measure[e];
    m.lumped_mass[e + 1] += 0.5 * m.element_measure[e];
  }
  return m;
}

Mesh build_rectangle_mesh(double x0, double x1, double y0, double y1, int nx,
                          int ny) {
  if (!(x1 > x0) || !(y1 > y0)) throw InputError("rectangle mesh needs x1 > x0 and y1 > y0");
  if (nx < 2 || ny < 2) throw InputError("rectangle mesh needs at least 2 cells per axis");

  Mesh m;
  m.dim = 2;
  m.x0 = x0;
  m.x1 = x1;
  m.y0 = y0;
  m.y1 = y1;
  m.nx = nx;
  m.ny = ny;
  m.measure = (x1 - x0) * (y1 - y0);
  const double hx = (x1 - x0) / nx;
  const double hy = (y1 - y0) / ny;
  const int n_nodes = (nx + 1) * (ny + 1);

  m.node_x.resize(n_nodes);
  m.node_y.resize(n_nodes);
  for (int iy = 0; iy <= ny; ++iy) {
    const double yv = (iy == ny) ? y1 : y0 + hy * iy;
    for (int ix = 0; ix <= nx; ++ix) {
      const int i = iy * (nx + 1) + ix;
      m.node_x[i] = (ix == nx) ? x1 : x0 + hx * ix;
      m.node_y[i] = yv;
    }
  }

  // each cell splits along its lower-left to upper-right diagonal into two
  // counter-clockwise triangles
  m.elements.reserve(2 * nx * ny);
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const int a = iy * (nx + 1) + ix;
      const int b = a + 1;
      const int c = b + (nx + 1);
      const int d = a + (nx + 1);
      m.elements.push_back({a, b, c});
      m.elements.push_back({a, c, d});
    }

  const int n_elems = (int)m.elements.size();
  m.element_measure.resize(n_elems);
  m.basis_gradients.resize(n_elems);
  for (int e = 0; e < n_elems; ++e) {
    const auto& el = m.elements[e];
    const double xa = m.node_x[el[0]], ya = m.node_y[el[0]];
    const double xb = m.node_x[el[1]], yb = m.node_y[el[1]];
    const double xc = m.node_x[el[2]], yc = m.node_y[el[2]];
    const double twice_area = (xb - xa) * (yc - ya) - (xc - xa) * (yb - ya);
    m.element_measure[e] = 0.5 * twice_area;
    const double xs[3] = {xa, xb, xc};
    const double ys[3] = {ya, yb, yc};
    for (int l = 0; l < 3; ++l) {
      const int l1 = (l + 1) % 3;
      const int l2 = (l + 2) % 3;
      m.basis_gradients[e][l][0] = (ys[l1] - ys[l2]) / twice_area;
      m.basis_gradients[e][l][1] = (xs[l2] - xs[l1]) / twice_area;
    }
  }

  m.boundary_mask.assign(n_nodes, 0);
  for (int iy = 0; iy <= ny; ++iy)
    for (int ix = 0; ix <= nx; ++ix)
      if (ix == 0 || ix == nx || iy == 0 || iy == ny)
        m.boundary_mask[iy * (nx + 1) + ix] = 1;

  m.lumped_mass.assign(n_nodes, 0.0);
  for (int e = 0; e < n_elems; ++e) {
    const double third = m.element_measure[e] / 3.0;
    for (int l = 0; l < 3; ++l) m.lumped_mass[m.elements[e][l]] += third;
  }
  return m;
}

std::array<double, 2> element_gradient(const ScalarField& u, int e) {
  const Mesh& m = *u.mesh;
  std::array<double, 2> g = {0.0, 0.0};
  const int npe = m.nodes_per_element();
  for (int l = 0; l < npe; ++l) {
    const double v = u.values[m.elements[e][l]];
    g[0] += v * m.basis_gradients[e][l][0];
    g[1] += v * m.basis_gradients[e][l][1];
  }
  return g;
}

std::vector<double> grad_norms(const ScalarField& u) {
  const Mesh& m = *u.mesh;
  std::vector<double> out(m.n_elements());
  for (int e = 0; e < m.n_elements(); ++e) {
    const auto g = element_gradient(u, e);
    out[e] = std::sqrt(g[0] * g[0] + g[1] * g[1]);
  }
  return out;
}

namespace {
void check_exponent(double p) {
  if (!(p > 1.0)) throw InputError("exponent p must exceed 1");
}
} // namespace

double norm_p(const ScalarField& u, double p) {
  check_exponent(p);
  const Mesh& m = *u.mesh;
  double s = 0.0;
  for (int i = 0; i < m.n_nodes(); ++i)
    s += m.lumped_mass[i] * std::pow(std::abs(u.values[i]), p);
  return std::pow(s, 1.0 / p);
}

double grad_energy(const ScalarField& u, double p) {
  check_exponent(p);
  const Mesh& m = *u.mesh;
  double s = 0.0;
  const std::vector<double> gn = grad_norms(u);
  for (int e = 0; e < m.n_elements(); ++e)
    s += m.element_measure[e] * std::pow(gn[e], p);
  return s;
}

std::pair<ScalarField, ScalarField> split_parts(const ScalarField& u) {
  ScalarField up(*u.mesh), um(*u.mesh);
  for (size_t i = 0; i < u.values.size(); ++i) {
    const double v = u.values[i];
    if (v > 0.0)
      up.values[i] = v;
    else
      um.values[i] = -v;
  }
  return {up, um};
}

ScalarField normalize_p(const ScalarField& u, double p) {
  const double n = norm_p(u, p);
  if (!(n > 1e-300))
    throw DegenerateFieldError("cannot normalize a vanishing field");
  ScalarField out(*u.mesh, u.values);
  for (auto& v : out.values) v /= n;
  return out;
}

void write_field_csv(const ScalarField& u, const std::string& path) {
  std::ofstream out(path);
  if (!out.good()) throw InputError("cannot open " + path + " for writing");
  const Mesh& m = *u.mesh;
  if (m.dim == 1) {
    out << "x,u\n";
    for (int i = 0; i < m.n_nodes(); ++i)
      out << format_sig17(m.node_x[i]) << ',' << format_sig17(u.values[i])
          << '\n';
  } else {
    out << "x,y,u\n";
    for (int i = 0; i < m.n_nodes(); ++i)
      out << format_sig17(m.node_x[i]) << ',' << format_sig17(m.node_y[i])
          << ',' << format_sig17(u.values[i]) << '\n';
  }
  if (!out.good()) throw InputError("write to " + path + " failed");
}

} // namespace pleig
