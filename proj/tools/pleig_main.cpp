// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "pleig/eigensolver.hpp"
#include "pleig/errors.hpp"
#include "pleig/fixtures.hpp"
#include "pleig/fmt.hpp"
#include "pleig/graph.hpp"
#include "pleig/log.hpp"
#include "pleig/mesh.hpp"
#include "pleig/pde_solver.hpp"

namespace {

using namespace pleig;

const double PI = 3.14159265358979323846;

// ---------------------------------------------------------------- json
// Reports must be byte-identical for identical configs: fixed key order,
// floats always through the shared 17-significant-digit formatter.

std::string jesc(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string jarr(const std::vector<double>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_sig17(v[i]);
  }
  out += "]";
  return out;
}

std::string jarr(const std::vector<std::string>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += "\"" + jesc(v[i]) + "\"";
  }
  out += "]";
  return out;
}

std::string jbool(bool b) { return b ? "true" : "false"; }

void emit_report(const std::string& json, const std::string& path) {
  if (path.empty()) {
    std::fputs(json.c_str(), stdout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write report file: " + path);
  out << json;
  out.flush();
  if (!out) throw InputError("failed while writing report file: " + path);
}

// ---------------------------------------------------------------- options

struct MeshSpec {
  std::string kind; // "interval" or "rectangle"
  std::vector<double> bounds;
  std::vector<double> resolution;
};

std::string mesh_json(const MeshSpec& ms) {
  return "\"mesh\":{\"kind\":\"" + ms.kind + "\",\"bounds\":" +
         jarr(ms.bounds) + ",\"resolution\":" + jarr(ms.resolution) + "}";
}

struct PdeOpts {
  double a = -2.0, b = 2.0;
  int n = 512;
  double x0 = -2.0, x1 = 2.0, y0 = -2.0, y1 = 2.0;
  int nx = 64, ny = 64;
  double p = 2.0;
  std::string bc = "dirichlet";
  double tol = 1e-6;
  int max_outer = 200;
  double eps_reg = -1.0; // auto: 1e-8 / diameter
  double w_min = 1e-10;
  std::string report, field;
};

struct GraphOpts {
  std::string points;
  bool blobs = false;
  unsigned seed = 42;
  double eps = std::nan("");
  std::string weights = "unit";
  double sigma = std::nan("");
  double p = 2.0;
  double tol = 1e-6;
  int max_outer = 200;
  double eps_reg = 1e-8;
  std::string report, labels;
};

struct VerifyOpts {
  std::string suite;
  std::string p_list = "1.5,2,3,5";
};

BC parse_bc(const std::string& s) {
  if (s == "dirichlet") return BC::dirichlet;
  if (s == "neumann") return BC::neumann;
  throw InputError("bc must be dirichlet or neumann");
}

void add_solver_flags(CLI::App* cmd, PdeOpts& o) {
  cmd->add_option("--p", o.p, "exponent p")->capture_default_str();
  cmd->add_option("--bc", o.bc, "boundary condition")
      ->check(CLI::IsMember({"dirichlet", "neumann"}))
      ->capture_default_str();
  cmd->add_option("--tol", o.tol, "outer stopping tolerance")
      ->capture_default_str();
  cmd->add_option("--max-outer", o.max_outer, "outer iteration cap")
      ->capture_default_str();
  cmd->add_option("--eps-reg", o.eps_reg,
                  "gradient regularization (negative = automatic)")
      ->capture_default_str();
  cmd->add_option("--w-min", o.w_min,
                  "weight clamp floor; raise toward 1e-2 for p >= 10")
      ->capture_default_str();
  cmd->add_option("--report", o.report, "JSON report path (default stdout)");
  cmd->add_option("--field", o.field, "eigenfunction CSV path");
}

SolverConfig to_solver_config(const PdeOpts& o) {
  SolverConfig cfg;
  cfg.p = o.p;
  cfg.eps_reg = o.eps_reg;
  cfg.w_min = o.w_min;
  return cfg;
}

// ---------------------------------------------------------------- logging

void log_eigen_run(const EigenReport& rep) {
  if (log_at_least(LogLevel::debug)) {
    for (size_t k = 0; k < rep.rayleigh_history.size(); ++k)
      std::fprintf(stderr, "iter %zu: lambda+=%.12g lambda-=%.12g rayleigh=%.12g\n",
                   k, rep.lambda_plus_history[k], rep.lambda_minus_history[k],
                   rep.rayleigh_history[k]);
  }
  if (log_at_least(LogLevel::info))
    std::fprintf(stderr, "lambda2=%.12g iterations=%d converged=%s\n",
                 rep.lambda2, rep.iterations,
                 rep.converged ? "true" : "false");
}

void log_graph_run(const GraphEigenReport& rep) {
  if (log_at_least(LogLevel::debug)) {
    for (size_t k = 0; k < rep.rayleigh_history.size(); ++k)
      std::fprintf(stderr, "iter %zu: lambda+=%.12g lambda-=%.12g rayleigh=%.12g\n",
                   k, rep.lambda_plus_history[k], rep.lambda_minus_history[k],
                   rep.rayleigh_history[k]);
  }
  if (log_at_least(LogLevel::info))
    std::fprintf(stderr, "lambda2=%.12g iterations=%d converged=%s\n",
                 rep.lambda2, rep.iterations,
                 rep.converged ? "true" : "false");
}

// ---------------------------------------------------------------- second

std::string eigen_report_json(const EigenReport& rep, const MeshSpec& ms) {
  std::string s = "{\"p\":" + format_sig17(rep.p);
  s += ",\"bc\":\"";
  s += (rep.bc == BC::dirichlet) ? "dirichlet" : "neumann";
  s += "\",\"lambda2\":" + format_sig17(rep.lambda2);
  s += ",\"rayleigh\":" + format_sig17(rep.rayleigh);
  s += ",\"lambda_plus_history\":" + jarr(rep.lambda_plus_history);
  s += ",\"lambda_minus_history\":" + jarr(rep.lambda_minus_history);
  s += ",\"iterations\":" + std::to_string(rep.iterations);
  s += ",\"converged\":" + jbool(rep.converged);
  s += ",\"invariant_violations\":" + jarr(rep.invariant_violations);
  s += "," + mesh_json(ms);
  s += "}\n";
  return s;
}

int run_second_pde(const PdeOpts& o, const Mesh& mesh, const MeshSpec& ms) {
  const BC bc = parse_bc(o.bc);
  BipartitionState st = init_guess(mesh, o.p, bc);
  const EigenReport rep =
      iterate(std::move(st), o.p, bc, to_solver_config(o), o.tol, o.max_outer);
  log_eigen_run(rep);
  if (!o.field.empty()) write_field_csv(rep.u2, o.field);
  emit_report(eigen_report_json(rep, ms), o.report);
  return rep.converged ? 0 : 2;
}

int run_second_interval(const PdeOpts& o) {
  const Mesh mesh = build_interval_mesh(o.a, o.b, o.n);
  const MeshSpec ms{"interval", {o.a, o.b}, {static_cast<double>(o.n)}};
  return run_second_pde(o, mesh, ms);
}

int run_second_rect(const PdeOpts& o) {
  const Mesh mesh = build_rectangle_mesh(o.x0, o.x1, o.y0, o.y1, o.nx, o.ny);
  const MeshSpec ms{"rectangle",
                    {o.x0, o.x1, o.y0, o.y1},
                    {static_cast<double>(o.nx), static_cast<double>(o.ny)}};
  return run_second_pde(o, mesh, ms);
}

int run_second_graph(const GraphOpts& o) {
  std::vector<std::array<double, 3>> pts;
  if (!o.points.empty()) {
    pts = read_points_csv(o.points);
  } else if (o.blobs) {
    pts = planted_blob_points(o.seed).first;
  } else {
    throw InputError("graph mode needs --points FILE or --blobs");
  }
  double eps = o.eps;
  if (std::isnan(eps)) {
    if (!o.blobs) throw InputError("--eps is required with --points");
    eps = 0.25; // the planted fixture is tuned to this radius
  }
  const EdgeWeight kind =
      (o.weights == "gauss") ? EdgeWeight::gauss : EdgeWeight::unit;
  const double sigma = std::isnan(o.sigma) ? eps : o.sigma;
  const Graph g = build_epsilon_graph(pts, eps, kind, sigma);
  if (!g.connected && log_at_least(LogLevel::info))
    std::fprintf(stderr,
                 "warning: epsilon graph is disconnected; the second "
                 "eigenvector degenerates to a component indicator\n");

  GraphEigenConfig cfg;
  cfg.outer_tol = o.tol;
  cfg.max_outer = o.max_outer;
  cfg.eps_reg = o.eps_reg;
  const GraphEigenReport rep = graph_second_eigenpair(g, o.p, cfg);
  log_graph_run(rep);

  const std::vector<int> C = threshold_cut(rep.f);
  const CutMetrics m = cut_metrics(g, C);
  if (!o.labels.empty()) {
    std::vector<int> lab(g.n, 0);
    for (int i : C) lab[i] = 1;
    write_labels_csv(o.labels, lab);
  }

  std::string s = "{\"p\":" + format_sig17(rep.p);
  s += ",\"bc\":\"none\"";
  s += ",\"lambda2\":" + format_sig17(rep.lambda2);
  s += ",\"rayleigh\":" + format_sig17(rep.lambda2); // final Rayleigh quotient
  s += ",\"lambda_plus_history\":" + jarr(rep.lambda_plus_history);
  s += ",\"lambda_minus_history\":" + jarr(rep.lambda_minus_history);
  s += ",\"iterations\":" + std::to_string(rep.iterations);
  s += ",\"converged\":" + jbool(rep.converged);
  s += ",\"invariant_violations\":" + jarr(rep.invariant_violations);
  s += ",\"graph\":{\"n\":" + std::to_string(g.n) +
       ",\"edges\":" + std::to_string(g.n_edges()) +
       ",\"eps\":" + format_sig17(eps) + "}";
  s += ",\"cut\":{\"rcc\":" + format_sig17(m.rcc) +
       ",\"ncc\":" + format_sig17(m.ncc) + "}";
  s += "}\n";
  emit_report(s, o.report);
  return rep.converged ? 0 : 2;
}

// ---------------------------------------------------------------- first

int run_first(const PdeOpts& o, bool interval) {
  const Mesh mesh = interval
                        ? build_interval_mesh(o.a, o.b, o.n)
                        : build_rectangle_mesh(o.x0, o.x1, o.y0, o.y1, o.nx,
                                               o.ny);
  const MeshSpec ms =
      interval ? MeshSpec{"interval", {o.a, o.b}, {static_cast<double>(o.n)}}
               : MeshSpec{"rectangle",
                          {o.x0, o.x1, o.y0, o.y1},
                          {static_cast<double>(o.nx),
                           static_cast<double>(o.ny)}};
  const BC bc = parse_bc(o.bc);
  const FirstEigenpair fe =
      first_eigenpair(mesh, o.p, bc, to_solver_config(o), o.tol, o.max_outer);
  if (log_at_least(LogLevel::info))
    std::fprintf(stderr, "lambda1=%.12g iterations=%d converged=%s\n",
                 fe.lambda1, fe.iterations, fe.converged ? "true" : "false");
  if (!o.field.empty()) write_field_csv(fe.w1, o.field);

  std::string s = "{\"p\":" + format_sig17(o.p);
  s += ",\"bc\":\"";
  s += (bc == BC::dirichlet) ? "dirichlet" : "neumann";
  s += "\",\"lambda1\":" + format_sig17(fe.lambda1);
  s += ",\"iterations\":" + std::to_string(fe.iterations);
  s += ",\"converged\":" + jbool(fe.converged);
  s += "," + mesh_json(ms);
  s += "}\n";
  emit_report(s, o.report);
  return fe.converged ? 0 : 2;
}

// ---------------------------------------------------------------- verify

double pi_p(double p) { return 2.0 * PI / (p * std::sin(PI / p)); }

std::vector<double> parse_p_list(const std::string& list) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= list.size()) {
    const size_t c = list.find(',', pos);
    const std::string tok =
        list.substr(pos, c == std::string::npos ? std::string::npos : c - pos);
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size())
      throw InputError("bad value in --p list: '" + tok + "'");
    out.push_back(v);
    if (c == std::string::npos) break;
    pos = c + 1;
  }
  if (out.empty()) throw InputError("--p list is empty");
  return out;
}

struct VerifyRow {
  bool pass;
  std::string name;
  std::string detail;
};

int print_and_score(const std::vector<VerifyRow>& rows) {
  bool all = true;
  for (const VerifyRow& r : rows) {
    std::printf("%s  %-24s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 2;
}

int verify_1d_closed_form(const std::vector<double>& ps) {
  std::vector<VerifyRow> rows;
  const Mesh mesh = build_interval_mesh(-2.0, 2.0, 2000);
  for (double p : ps) {
    SolverConfig cfg;
    cfg.p = p;
    if (p >= 10.0) cfg.w_min = 1e-2; // flat-gradient regions stall otherwise
    const EigenReport rep =
        iterate(init_guess(mesh, p, BC::dirichlet), p, BC::dirichlet, cfg,
                1e-6, 200);
    const double exact = (p - 1.0) * std::pow(2.0 * pi_p(p) / 4.0, p);
    const double rel = std::abs(rep.lambda2 - exact) / exact;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "p=%g lambda2=%.10g exact=%.10g rel=%.3e", p, rep.lambda2,
                  exact, rel);
    rows.push_back({rep.converged && rel <= 0.01, "1d-closed-form", buf});
  }
  return print_and_score(rows);
}

int verify_square_p2() {
  const Mesh mesh = build_rectangle_mesh(-2.0, 2.0, -2.0, 2.0, 200, 200);
  const EigenReport rep = iterate(init_guess(mesh, 2.0, BC::dirichlet), 2.0,
                                  BC::dirichlet, SolverConfig{}, 1e-6, 200);
  const double exact = 5.0 * PI * PI / 16.0;
  const double err = std::abs(rep.lambda2 - exact);
  char buf[160];
  std::snprintf(buf, sizeof buf, "lambda2=%.10g target=%.10g |err|=%.3e",
                rep.lambda2, exact, err);
  return print_and_score(
      {{rep.converged && err <= 0.002, "square-p2", buf}});
}

int verify_neumann_p2() {
  const Mesh mesh = build_rectangle_mesh(-2.0, 2.0, -2.0, 2.0, 128, 128);
  // the symmetric square splits the degenerate cos pair by ~8e-5 relative,
  // so the outer tolerance sits above that gap
  const EigenReport rep = iterate(init_guess(mesh, 2.0, BC::neumann), 2.0,
                                  BC::neumann, SolverConfig{}, 5e-5, 200);
  const double exact = PI * PI / 16.0;
  const double rel = std::abs(rep.lambda2 - exact) / exact;
  double worst_mean = 0.0;
  for (double v : rep.pmean_after_shift)
    worst_mean = std::max(worst_mean, v);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "lambda2=%.10g target=%.10g rel=%.3e max|mean_p|=%.3e",
                rep.lambda2, exact, rel, worst_mean);
  return print_and_score({{rep.converged && rel <= 0.01 && worst_mean <= 1e-10,
                           "neumann-p2", buf}});
}

int verify_graph_fiedler() {
  std::vector<VerifyRow> rows;
  const int sizes[10] = {8, 10, 12, 9, 11, 12, 8, 10, 11, 12};
  for (int s = 0; s < 10; ++s) {
    const auto pts = random_connected_points(100 + s, sizes[s], 0.45);
    const Graph g = build_epsilon_graph(pts, 0.45);
    const GraphEigenReport rep =
        graph_second_eigenpair(g, 2.0, GraphEigenConfig{});
    const double fv = fiedler_value(g);
    const double rel = std::abs(rep.lambda2 - fv) / fv;
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=%d lambda2=%.10g dense=%.10g rel=%.3e",
                  g.n, rep.lambda2, fv, rel);
    rows.push_back({rep.converged && rel <= 1e-4, "graph-fiedler", buf});
  }
  return print_and_score(rows);
}

int verify_graph_rcc() {
  std::vector<VerifyRow> rows;
  {
    const Graph g = build_bridged_cliques(4);
    const GraphEigenReport rep =
        graph_second_eigenpair(g, 2.0, GraphEigenConfig{});
    std::vector<int> C = threshold_cut(rep.f);
    std::sort(C.begin(), C.end());
    auto [rcc_star, c_star] = brute_force_rcc(g);
    // canonicalize both cuts to the side containing node 0
    if (!C.empty() && C[0] != 0) {
      std::vector<int> flip;
      std::vector<char> in(g.n, 0);
      for (int i : C) in[i] = 1;
      for (int i = 0; i < g.n; ++i)
        if (!in[i]) flip.push_back(i);
      C = flip;
    }
    const double rcc = cut_metrics(g, C).rcc;
    char buf[160];
    std::snprintf(buf, sizeof buf, "bridged-cliques rcc=%.10g rcc*=%.10g",
                  rcc, rcc_star);
    rows.push_back({C == c_star && rcc == rcc_star, "graph-rcc", buf});
  }
  {
    const Graph g = build_graph(6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1},
                                    {3, 4, 1}, {3, 5, 1}, {4, 5, 1},
                                    {2, 3, 1}});
    const GraphEigenReport rep =
        graph_second_eigenpair(g, 2.0, GraphEigenConfig{});
    std::vector<int> C = threshold_cut(rep.f);
    std::sort(C.begin(), C.end());
    const bool split = (C == std::vector<int>{0, 1, 2}) ||
                       (C == std::vector<int>{3, 4, 5});
    const auto [rcc_star, c_star] = brute_force_rcc(g);
    const double rcc = cut_metrics(g, C).rcc;
    char buf[160];
    std::snprintf(buf, sizeof buf, "two-triangles rcc=%.10g rcc*=%.10g", rcc,
                  rcc_star);
    rows.push_back({split && rcc == rcc_star, "graph-rcc", buf});
  }
  return print_and_score(rows);
}

int run_verify(const VerifyOpts& o) {
  if (o.suite == "1d-closed-form")
    return verify_1d_closed_form(parse_p_list(o.p_list));
  if (o.suite == "square-p2") return verify_square_p2();
  if (o.suite == "neumann-p2") return verify_neumann_p2();
  if (o.suite == "graph-fiedler") return verify_graph_fiedler();
  if (o.suite == "graph-rcc") return verify_graph_rcc();
  throw InputError("unknown suite: " + o.suite);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-Laplacian eigenpair toolkit: interval/rectangle meshes and "
               "point-cloud graphs"};
  app.require_subcommand(1);

  PdeOpts so;
  GraphOpts go;
  PdeOpts fo;
  VerifyOpts vo;

  CLI::App* second =
      app.add_subcommand("second", "second eigenvalue and eigenfunction");
  second->require_subcommand(1);
  CLI::App* s_int = second->add_subcommand("interval", "1d interval domain");
  s_int->add_option("--a", so.a, "left endpoint")->capture_default_str();
  s_int->add_option("--b", so.b, "right endpoint")->capture_default_str();
  s_int->add_option("--n", so.n, "element count")->capture_default_str();
  add_solver_flags(s_int, so);
  CLI::App* s_rect = second->add_subcommand("rect", "2d rectangle domain");
  s_rect->add_option("--x0", so.x0, "left bound")->capture_default_str();
  s_rect->add_option("--x1", so.x1, "right bound")->capture_default_str();
  s_rect->add_option("--y0", so.y0, "bottom bound")->capture_default_str();
  s_rect->add_option("--y1", so.y1, "top bound")->capture_default_str();
  s_rect->add_option("--nx", so.nx, "cells along x")->capture_default_str();
  s_rect->add_option("--ny", so.ny, "cells along y")->capture_default_str();
  add_solver_flags(s_rect, so);
  CLI::App* s_graph =
      second->add_subcommand("graph", "epsilon graph from a point cloud");
  s_graph->add_option("--points", go.points, "points CSV (x[,y[,z]])");
  s_graph->add_flag("--blobs", go.blobs, "use the planted two-blob fixture");
  s_graph->add_option("--seed", go.seed, "seed for synthetic points")
      ->capture_default_str();
  s_graph->add_option("--eps", go.eps,
                      "connection radius (required with --points; --blobs "
                      "defaults to 0.25)");
  s_graph->add_option("--weights", go.weights, "edge weights")
      ->check(CLI::IsMember({"unit", "gauss"}))
      ->capture_default_str();
  s_graph->add_option("--sigma", go.sigma, "gaussian width (default eps)");
  s_graph->add_option("--p", go.p, "exponent p")->capture_default_str();
  s_graph->add_option("--tol", go.tol, "outer stopping tolerance")
      ->capture_default_str();
  s_graph->add_option("--max-outer", go.max_outer, "outer iteration cap")
      ->capture_default_str();
  s_graph->add_option("--eps-reg", go.eps_reg, "gradient regularization")
      ->capture_default_str();
  s_graph->add_option("--report", go.report, "JSON report path (default stdout)");
  s_graph->add_option("--labels", go.labels, "thresholded labels CSV path");

  CLI::App* first =
      app.add_subcommand("first", "first eigenvalue and eigenfunction");
  first->require_subcommand(1);
  CLI::App* f_int = first->add_subcommand("interval", "1d interval domain");
  f_int->add_option("--a", fo.a, "left endpoint")->capture_default_str();
  f_int->add_option("--b", fo.b, "right endpoint")->capture_default_str();
  f_int->add_option("--n", fo.n, "element count")->capture_default_str();
  add_solver_flags(f_int, fo);
  CLI::App* f_rect = first->add_subcommand("rect", "2d rectangle domain");
  f_rect->add_option("--x0", fo.x0, "left bound")->capture_default_str();
  f_rect->add_option("--x1", fo.x1, "right bound")->capture_default_str();
  f_rect->add_option("--y0", fo.y0, "bottom bound")->capture_default_str();
  f_rect->add_option("--y1", fo.y1, "top bound")->capture_default_str();
  f_rect->add_option("--nx", fo.nx, "cells along x")->capture_default_str();
  f_rect->add_option("--ny", fo.ny, "cells along y")->capture_default_str();
  add_solver_flags(f_rect, fo);

  CLI::App* verify =
      app.add_subcommand("verify", "built-in oracle suites");
  verify
      ->add_option("--suite", vo.suite,
                   "one of: 1d-closed-form, square-p2, neumann-p2, "
                   "graph-fiedler, graph-rcc")
      ->required();
  verify->add_option("--p", vo.p_list, "comma list of exponents")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 4; // bad flags are input errors
  }

  try {
    if (s_int->parsed()) return run_second_interval(so);
    if (s_rect->parsed()) return run_second_rect(so);
    if (s_graph->parsed()) return run_second_graph(go);
    if (f_int->parsed()) return run_first(fo, true);
    if (f_rect->parsed()) return run_first(fo, false);
    if (verify->parsed()) return run_verify(vo);
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const DegenerateFieldError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const PartitionCollapseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const DegenerateCutError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const SolverError& e) {
    std::fprintf(stderr, "error: %s (after %d iterations)\n", e.what(),
                 e.iterations);
    return 2;
  }
  return 0;
}
