#include "hbl/ring_capacity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hbl/errors.hpp"

namespace hbl {

namespace {

struct Grid {
  int n_theta = 0;
  int n_rho = 0;          // rows 0..n_rho
  double h_theta = 0.0;
  double h_rho = 0.0;
  std::vector<signed char> fixed;  // -1 free, 0 / 1 Dirichlet value
  std::vector<double> u;

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_theta) +
           static_cast<std::size_t>(j);
  }
};

Grid build_grid(const RingDomainSpec& spec, int n_theta, double& truncation,
                bool close_truncation = false) {
  Grid g;
  g.n_theta = n_theta;
  g.h_theta = kTwoPi / n_theta;
  const double r_in = spec.inner.radius;
  const bool circle = std::holds_alternative<OuterCircle>(spec.outer);
  const double r_out = circle ? std::get<OuterCircle>(spec.outer).radius
                              : std::get<OuterRay>(spec.outer).truncation_radius;
  truncation = r_out;
  const double rho_max = std::log(r_out / r_in);
  g.n_rho = std::max(2, static_cast<int>(std::lround(rho_max / g.h_theta)));
  g.h_rho = rho_max / g.n_rho;

  const std::size_t total = static_cast<std::size_t>(g.n_rho + 1) * static_cast<std::size_t>(n_theta);
  g.fixed.assign(total, -1);
  g.u.assign(total, 0.0);
  for (int j = 0; j < n_theta; ++j) g.fixed[g.index(0, j)] = 0;
  if (circle || close_truncation) {
    for (int j = 0; j < n_theta; ++j) g.fixed[g.index(g.n_rho, j)] = 1;
  }
  if (!circle) {
    // theta is measured from the ray, so the ray sits on column 0
    const double rho_start = std::log(std::get<OuterRay>(spec.outer).start / r_in);
    for (int i = 0; i <= g.n_rho; ++i)
      if (i * g.h_rho >= rho_start - 1e-12 * std::max(1.0, rho_start)) g.fixed[g.index(i, 0)] = 1;
  }
  for (std::size_t k = 0; k < total; ++k)
    if (g.fixed[k] >= 0) g.u[k] = g.fixed[k];
  return g;
}

double theta_weight(const Grid& g, int i) {
  const double w = g.h_rho / g.h_theta;
  return i == g.n_rho ? 0.5 * w : w;
}

double rho_weight(const Grid& g) { return g.h_theta / g.h_rho; }

// y = A x restricted to free nodes, where x^T A x is the edge energy.
void apply(const Grid& g, const std::vector<double>& x, std::vector<double>& y) {
  const double wr = rho_weight(g);
  for (int i = 0; i <= g.n_rho; ++i) {
    const double wt = theta_weight(g, i);
    for (int j = 0; j < g.n_theta; ++j) {
      const std::size_t k = g.index(i, j);
      if (g.fixed[k] >= 0) {
        y[k] = 0.0;
        continue;
      }
      const int jl = j == 0 ? g.n_theta - 1 : j - 1;
      const int jr = j + 1 == g.n_theta ? 0 : j + 1;
      double acc = wt * (2.0 * x[k] - x[g.index(i, jl)] - x[g.index(i, jr)]);
      if (i > 0) acc += wr * (x[k] - x[g.index(i - 1, j)]);
      if (i < g.n_rho) acc += wr * (x[k] - x[g.index(i + 1, j)]);
      y[k] = acc;
    }
  }
}

double energy(const Grid& g) {
  const double wr = rho_weight(g);
  double e = 0.0;
  for (int i = 0; i <= g.n_rho; ++i) {
    const double wt = theta_weight(g, i);
    for (int j = 0; j < g.n_theta; ++j) {
      const double v = g.u[g.index(i, j)];
      const double dt = g.u[g.index(i, (j + 1) % g.n_theta)] - v;
      e += wt * dt * dt;
      if (i < g.n_rho) {
        const double dr = g.u[g.index(i + 1, j)] - v;
        e += wr * dr * dr;
      }
    }
  }
  return e;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Jacobi-preconditioned conjugate gradients on the free nodes.
void solve(Grid& g, const RingSolverOptions& opt, int& iterations, double& residual) {
  const std::size_t n = g.u.size();
  std::vector<double> r(n), z(n), p(n), q(n), diag(n, 1.0);

  // residual of the lifted Dirichlet data: r = -A u_D on free nodes
  std::vector<double> boundary(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    if (g.fixed[k] > 0) boundary[k] = 1.0;
  {
    // A applied to boundary values, evaluated through full stencils
    const double wr = rho_weight(g);
    for (int i = 0; i <= g.n_rho; ++i) {
      const double wt = theta_weight(g, i);
      for (int j = 0; j < g.n_theta; ++j) {
        const std::size_t k = g.index(i, j);
        if (g.fixed[k] >= 0) {
          r[k] = 0.0;
          diag[k] = 1.0;
          continue;
        }
        const int jl = (j + g.n_theta - 1) % g.n_theta;
        const int jr = (j + 1) % g.n_theta;
        double nb = wt * (boundary[g.index(i, jl)] + boundary[g.index(i, jr)]);
        double d = 2.0 * wt;
        if (i > 0) {
          nb += wr * boundary[g.index(i - 1, j)];
          d += wr;
        }
        if (i < g.n_rho) {
          nb += wr * boundary[g.index(i + 1, j)];
          d += wr;
        }
        r[k] = nb;
        diag[k] = d;
      }
    }
  }
  const double bnorm = std::sqrt(dot(r, r));
  std::vector<double> x(n, 0.0);
  iterations = 0;
  residual = 0.0;
  if (bnorm == 0.0) return;

  for (std::size_t k = 0; k < n; ++k) z[k] = r[k] / diag[k];
  p = z;
  double rz = dot(r, z);
  for (int it = 1; it <= opt.max_iterations; ++it) {
    apply(g, p, q);
    const double alpha = rz / dot(p, q);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] += alpha * p[k];
      r[k] -= alpha * q[k];
    }
    residual = std::sqrt(dot(r, r)) / bnorm;
    iterations = it;
    if (residual < opt.residual_tolerance) break;
    for (std::size_t k = 0; k < n; ++k) z[k] = r[k] / diag[k];
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (std::size_t k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
  }
  if (!(residual < opt.residual_tolerance))
    throw NumericalError("ring capacity solver did not converge: relative residual " +
                         std::to_string(residual) + " after " + std::to_string(iterations) +
                         " iterations");
  for (std::size_t k = 0; k < n; ++k)
    if (g.fixed[k] < 0) g.u[k] = x[k];
}

void validate(const RingDomainSpec& spec) {
  if (spec.grid_resolution < 32) throw InvalidArgument("grid resolution must be at least 32");
  const double r_in = spec.inner.radius;
  if (!(r_in > 0.0) || !std::isfinite(r_in)) throw InvalidArgument("inner disk radius must be positive");
  if (const auto* c = std::get_if<OuterCircle>(&spec.outer)) {
    if (!(c->radius > r_in) || !std::isfinite(c->radius))
      throw InvalidArgument("outer circle must enclose the inner disk (components overlap)");
  } else {
    const auto& ray = std::get<OuterRay>(spec.outer);
    if (!(ray.start > r_in) || !std::isfinite(ray.start))
      throw InvalidArgument("ray must start outside the inner disk (components overlap)");
    if (!(ray.truncation_radius > ray.start) || !std::isfinite(ray.truncation_radius))
      throw InvalidArgument("ray truncation radius must exceed its start");
  }
}

}  // namespace

RingCapacityResult ring_capacity_numeric(const RingDomainSpec& spec,
                                         const RingSolverOptions& options) {
  validate(spec);
  RingCapacityResult out;
  out.method = CapacityMethod::grid_oracle;

  double truncation = 0.0;
  Grid coarse = build_grid(spec, spec.grid_resolution / 2, truncation);
  int it_coarse = 0;
  double res_coarse = 0.0;
  solve(coarse, options, it_coarse, res_coarse);
  out.coarse_value = energy(coarse);

  Grid fine = build_grid(spec, spec.grid_resolution, truncation);
  solve(fine, options, out.iterations, out.residual);
  out.value = energy(fine);
  out.truncation_radius = truncation;
  out.error_estimate = std::max(std::abs(out.value - out.coarse_value),
                                std::max(options.residual_tolerance, 1e-12) * out.value);
  if (std::holds_alternative<OuterRay>(spec.outer)) {
    // holding the truncation circle at 1 bounds the untruncated capacity from above
    Grid closed = build_grid(spec, spec.grid_resolution, truncation, true);
    int it = 0;
    double res = 0.0;
    solve(closed, options, it, res);
    out.truncation_upper = energy(closed);
    out.error_estimate = std::max(out.error_estimate, out.truncation_upper - out.value);
  }
  return out;
}

}  // namespace hbl
