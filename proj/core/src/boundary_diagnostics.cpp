#include "hbl/boundary_diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hbl/errors.hpp"

namespace hbl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Integral over u in [log lo, log hi] of phi * F(phi), both branches.
double lm_piece(const AnalyticFunction& a, const GammaCurve& curve, double lo, double hi,
                double abs_tol) {
  auto integrand = [&](double u) {
    const double phi = std::exp(u);
    double total = 0.0;
    for (double sign : {1.0, -1.0}) {
      const auto p = curve.at_offset(sign * std::min(phi, curve.max_offset()));
      const double a2 = std::norm(a.value(p.z));
      if (!(a2 < 1.0))
        throw DomainError("not a sense-preserving dilatation on the curve: |a| >= 1 at " +
                          to_string(p.z));
      total += (1.0 - a2) / curve.one_minus_abs2(phi) * p.speed * phi;
    }
    return total;
  };
  double err = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, std::log(lo), std::log(hi), 12, 1e-11, &err, &l1);
  // 1 - |a|^2 cancels near the boundary; its relative noise grows like eps / (1 - |z|^2)
  const double floor =
      16.0 * std::numeric_limits<double>::epsilon() * l1 / curve.one_minus_abs2(lo);
  if (!(err <= std::max(abs_tol, floor)))
    throw NumericalError("L(m) quadrature missed its tolerance: error estimate " +
                         to_string(Complex(err, 0.0)));
  return value;
}

void validate_schedule(std::span<const double> schedule, const GammaCurve& curve) {
  if (schedule.size() < 3) throw InvalidArgument("delta schedule needs at least three cutoffs");
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (!(schedule[k] > 0.0 && schedule[k] < curve.max_offset()))
      throw InvalidArgument("delta cutoffs must lie in (0, min(pi, 1/m))");
    if (k > 0 && !(schedule[k] < schedule[k - 1]))
      throw InvalidArgument("delta schedule must be strictly decreasing");
  }
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

// Nodes and weights of Gauss-Legendre on [0, 1].
void gauss_legendre01(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (t * p1 - p0) / (t * t - 1.0);
    const double wt = 2.0 / ((1.0 - t * t) * dp * dp);
    x[static_cast<std::size_t>(i)] = 0.5 * (1.0 - t);
    x[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + t);
    w[static_cast<std::size_t>(i)] = 0.5 * wt;
    w[static_cast<std::size_t>(n - 1 - i)] = 0.5 * wt;
  }
}

double polar_area(const HarmonicMap& f, int n_theta, int n_r, long& negative) {
  std::vector<double> rx, rw;
  gauss_legendre01(n_r, rx, rw);
  const double h = kTwoPi / n_theta;
  double total = 0.0;
  for (int j = 0; j < n_theta; ++j) {
    const Complex e = std::polar(1.0, (j + 0.5) * h);
    double ring = 0.0;
    for (int i = 0; i < n_r; ++i) {
      const Complex z = rx[static_cast<std::size_t>(i)] * e;
      const double hp = std::abs(f.h().derivative(z));
      const double gp = std::abs(f.g().derivative(z));
      const double jac = (hp - gp) * (hp + gp);
      if (jac < 0.0) ++negative;
      ring += rw[static_cast<std::size_t>(i)] * jac * rx[static_cast<std::size_t>(i)];
    }
    total += ring;
  }
  return total * h;
}

double segment_distance(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a) * std::conj(d)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

}  // namespace

// ---------------------------------------------------------------------------

double lm_integral(const AnalyticFunction& a, const GammaCurve& curve, double delta,
                   double abs_tol) {
  if (!(delta > 0.0 && delta < curve.max_offset()))
    throw InvalidArgument("delta must lie in (0, min(pi, 1/m))");
  return lm_piece(a, curve, delta, curve.max_offset(), abs_tol);
}

const char* to_string(DivergenceClass c) noexcept {
  switch (c) {
    case DivergenceClass::convergent: return "convergent";
    case DivergenceClass::divergent: return "divergent";
    case DivergenceClass::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<double> default_delta_schedule() {
  std::vector<double> s;
  for (int k = 1; k <= 7; ++k) s.push_back(std::pow(10.0, -k));
  return s;
}

LmEstimate lm_classify(const AnalyticFunction& a, double zeta_angle, double m,
                       std::span<const double> schedule, const LmOptions& options) {
  const GammaCurve curve(zeta_angle, m);
  validate_schedule(schedule, curve);

  LmEstimate est;
  est.m = m;
  est.zeta_angle = zeta_angle;
  // accumulate disjoint pieces so the partial values are monotone by construction
  double upper = curve.max_offset();
  double running = 0.0;
  for (double delta : schedule) {
    running += lm_piece(a, curve, delta, upper, options.abs_tol);
    est.partial_values.emplace_back(delta, running);
    upper = delta;
  }

  const std::size_t n = est.partial_values.size();
  const std::size_t k = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(2, options.fit_points)));
  std::vector<double> xs, ys;
  for (std::size_t i = n - k; i < n; ++i) {
    xs.push_back(-std::log(est.partial_values[i].first));
    ys.push_back(est.partial_values[i].second);
  }
  const LineFit fit = fit_line(xs, ys);
  DivergenceVerdict& v = est.verdict;
  v.slope = fit.slope;
  v.fit_residual = fit.rms;

  const double d1 = est.partial_values[n - 2].second - est.partial_values[n - 3].second;
  const double d2 = est.partial_values[n - 1].second - est.partial_values[n - 2].second;
  const double last = est.partial_values[n - 1].second;
  bool convergent = d1 < options.cauchy_tolerance && d2 < options.cauchy_tolerance;
  v.tail_estimate = 0.0;
  if (!convergent && d1 > 0.0) {
    const double ratio = d2 / d1;
    if (ratio <= 0.5) {
      v.tail_estimate = d2 * ratio / (1.0 - ratio);
      convergent = v.tail_estimate < options.cauchy_tolerance;
    }
  }
  const double rise = std::abs(fit.slope) * (xs.back() - xs.front());
  if (convergent) {
    v.cls = DivergenceClass::convergent;
    v.limit_or_rate = last + v.tail_estimate;
    est.conclusion = "L(m) finite at this m; no continuity conclusion forced";
  } else if (fit.slope > options.slope_threshold && fit.rms <= options.fit_tolerance * rise) {
    v.cls = DivergenceClass::divergent;
    v.limit_or_rate = 0.5 * fit.slope;
    est.conclusion =
        "L(m) divergent at this m; divergence for every m < 1/pi forces continuity of f* at zeta";
  } else {
    v.cls = DivergenceClass::inconclusive;
    v.limit_or_rate = 0.5 * fit.slope;
    est.conclusion = "trend not decided at this schedule";
  }
  return est;
}

// ---------------------------------------------------------------------------

const char* to_string(BlwVerdict v) noexcept {
  switch (v) {
    case BlwVerdict::tends_to_zero: return "tends-to-zero";
    case BlwVerdict::tends_to_positive: return "tends-to-positive";
    case BlwVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<double> default_blw_radii() {
  std::vector<double> r;
  for (int k = 0; k <= 12; ++k) r.push_back(1.0 - std::pow(10.0, -1.0 - 0.25 * k));
  return r;
}

BlwTrend blw_radial(const HarmonicMap& f, double zeta_angle, std::span<const double> radii,
                    const BlwOptions& options) {
  if (f.domain() != Domain::disk) throw InvalidArgument("radial trend needs a map on the unit disk");
  const std::size_t w = static_cast<std::size_t>(std::max(2, options.window));
  if (radii.size() < w) throw InvalidArgument("need at least as many radii as the trend window");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] > 0.0 && radii[k] < 1.0)) throw InvalidArgument("radii must lie in (0, 1)");
    if (k > 0 && !(radii[k] > radii[k - 1])) throw InvalidArgument("radii must be strictly increasing");
  }
  if (radii.back() < 0.999) throw InvalidArgument("last radius must be at least 0.999");

  BlwTrend t;
  t.radii.assign(radii.begin(), radii.end());
  const Complex zeta = std::polar(1.0, zeta_angle);
  for (double r : radii) {
    double hp = 0.0;
    try {
      hp = std::abs(f.h().derivative(r * zeta));
    } catch (const Error& e) {
      throw NumericalError("evaluation failed at radius " + std::to_string(r) + ": " + e.what());
    }
    if (!std::isfinite(hp))
      throw NumericalError("non-finite h' at radius " + std::to_string(r));
    t.values.push_back((1.0 - r) * hp);
  }

  const std::size_t n = t.values.size();
  bool decreasing = true;
  for (std::size_t k = n - w + 1; k < n; ++k)
    if (t.values[k] > t.values[k - 1]) decreasing = false;
  double mean = 0.0;
  for (std::size_t k = n - w; k < n; ++k) mean += t.values[k];
  mean /= static_cast<double>(w);
  double spread = 0.0;
  for (std::size_t k = n - w; k < n; ++k) spread = std::max(spread, std::abs(t.values[k] - mean));

  if (t.values.back() < options.zero_tolerance && decreasing) {
    t.verdict = BlwVerdict::tends_to_zero;
  } else if (mean > 0.0 && spread <= options.stabilization * mean) {
    t.verdict = BlwVerdict::tends_to_positive;
    t.c_estimate = mean;
  } else {
    t.verdict = BlwVerdict::inconclusive;
  }
  return t;
}

// ---------------------------------------------------------------------------

AreaResult area_integral(const HarmonicMap& f, int resolution) {
  if (f.domain() != Domain::disk) throw InvalidArgument("area integral needs a map on the unit disk");
  if (resolution < 8) throw InvalidArgument("area resolution must be at least 8");
  AreaResult r;
  long neg_coarse = 0;
  r.area = polar_area(f, resolution, resolution / 2, r.negative_cells);
  r.coarse_area = polar_area(f, resolution / 2, resolution / 4, neg_coarse);
  r.error_estimate = std::abs(r.area - r.coarse_area);
  return r;
}

// ---------------------------------------------------------------------------

Thm54Report thm54_check(const HarmonicMap& f, double zeta_angle, std::span<const double> m_grid,
                        double compact_margin, const Thm54Options& options) {
  if (f.domain() != Domain::disk) throw InvalidArgument("area bound needs a map on the unit disk");
  if (m_grid.empty()) throw InvalidArgument("m grid is empty");
  for (std::size_t k = 0; k < m_grid.size(); ++k) {
    if (!(m_grid[k] > 0.0 && m_grid[k] < 1.0 / kPi))
      throw InvalidArgument("m grid values must lie in (0, 1/pi)");
    if (k > 0 && !(m_grid[k] > m_grid[k - 1]))
      throw InvalidArgument("m grid must be strictly increasing");
  }
  if (!(compact_margin > 0.0 && compact_margin < 1.0))
    throw InvalidArgument("compact margin must lie in (0, 1)");

  Thm54Report rep;
  const Complex zeta = std::polar(1.0, zeta_angle);

  auto weight = [&](Complex z) { return (1.0 - std::abs(z)) * std::abs(f.h().derivative(z)); };
  double H = weight(0.0);
  const double rmax = 1.0 - compact_margin;
  for (int i = 1; i <= options.disk_radial_samples; ++i) {
    const double r = rmax * i / options.disk_radial_samples;
    for (int j = 0; j < options.disk_angular_samples; ++j)
      H = std::max(H, weight(std::polar(r, kTwoPi * j / options.disk_angular_samples)));
  }
  // Stolz sector zeta (1 - rho e^{i psi}), |psi| <= half angle
  for (int i = 0; i <= 40; ++i) {
    const double rho = compact_margin * std::pow(1e-6 / compact_margin, i / 40.0);
    for (int j = -4; j <= 4; ++j) {
      const double psi = options.sector_half_angle * j / 4.0;
      const Complex z = zeta * (1.0 - std::polar(rho, psi));
      if (std::abs(z) < 1.0) H = std::max(H, weight(z));
    }
  }
  rep.H = H;
  rep.area = area_integral(f, options.area_resolution).area;

  const AnalyticFunction a = f.dilatation_function();
  std::vector<double> L;
  for (double m : m_grid) {
    rep.per_m.push_back(lm_classify(a, zeta_angle, m, options.delta_schedule, options.lm));
    const auto& est = rep.per_m.back();
    if (est.verdict.cls == DivergenceClass::divergent) rep.divergent_short_circuit = true;
    L.push_back(est.verdict.cls == DivergenceClass::convergent ? est.verdict.limit_or_rate
                                                               : est.partial_values.back().second);
  }
  if (rep.divergent_short_circuit) {
    rep.integral_L = kInf;
    rep.rhs = kInf;
  } else {
    double integral = 0.0;
    for (std::size_t k = 1; k < m_grid.size(); ++k)
      integral += 0.5 * (L[k] + L[k - 1]) * (m_grid[k] - m_grid[k - 1]);
    rep.integral_L = integral;
    rep.rhs = kPi * H * H / 0.15 * integral;
  }
  rep.inequality_holds = rep.area < rep.rhs;
  rep.conclusion = rep.divergent_short_circuit
                       ? "L(m) divergent on the grid; the bound holds trivially"
                       : (rep.inequality_holds ? "area bound satisfied on the sampled data"
                                               : "area bound violated on the sampled data");
  return rep;
}

// ---------------------------------------------------------------------------

MajorizationCheck majorization_check(const AnalyticFunction& a, const AnalyticFunction& F,
                                     std::span<const Complex> samples) {
  MajorizationCheck c;
  for (Complex z : samples) {
    const double fF = std::abs(F.value(z));
    if (!(fF < 1.0)) throw InvalidArgument("majorant leaves the unit disk at " + to_string(z));
    if (fF <= 1e-12) continue;
    const double ratio = std::abs(a.value(z)) / fF;
    if (ratio > c.worst_ratio) {
      c.worst_ratio = ratio;
      c.worst_point = z;
    }
  }
  c.necessary_ok = c.worst_ratio <= 1.0 + 1e-9;
  return c;
}

// ---------------------------------------------------------------------------

const char* to_string(Approach a) noexcept {
  return a == Approach::radial ? "radial" : "tangential-fan";
}

ClusterSample cluster_sample(const HarmonicMap& f, double zeta_angle, Approach approach, int n) {
  if (f.domain() != Domain::disk) throw InvalidArgument("cluster sampling needs a map on the unit disk");
  if (n < 10) throw InvalidArgument("cluster sampling needs n >= 10");
  constexpr double kStop = 1.0 - 1e-4;
  const Complex zeta = std::polar(1.0, zeta_angle);
  ClusterSample out;

  auto eval = [&](Complex z) {
    try {
      return eval_map(f, z);
    } catch (const Error& e) {
      throw NumericalError("evaluation failed near the boundary at " + to_string(z) + ": " +
                           e.what());
    }
  };

  if (approach == Approach::radial) {
    for (int k = 0; k < n; ++k) {
      const double r = 1.0 - std::pow(10.0, -1.0 - 3.0 * k / (n - 1));
      out.points.push_back(eval(std::min(r, kStop) * zeta));
    }
    out.endpoints.push_back(out.points.back());
  } else {
    constexpr int kPerPath = 16;
    for (int p = 0; p < n; ++p) {
      const double psi = -0.5 * kPi + kPi * (p + 0.5) / n;
      // smallest rho keeping |zeta (1 - rho e^{i psi})| <= kStop
      const double c = std::cos(psi);
      const double target = 1.0 - kStop * kStop;
      const double rho_min = target / (c + std::sqrt(c * c - target));
      const double rho_max = std::max(0.1, 2.0 * rho_min);
      Complex last{};
      for (int i = 0; i < kPerPath; ++i) {
        const double rho = rho_max * std::pow(rho_min / rho_max, static_cast<double>(i) / (kPerPath - 1));
        last = eval(zeta * (1.0 - std::polar(rho, psi)));
        out.points.push_back(last);
      }
      out.endpoints.push_back(last);
    }
  }

  if (f.boundary_data()) {
    const auto seg = f.boundary_data()->one_sided_limits(zeta_angle);
    out.reference_segment = seg;
    double worst = 0.0;
    for (Complex p : out.endpoints) worst = std::max(worst, segment_distance(p, seg.first, seg.second));
    out.max_distance = worst;
    double gap = 0.0;
    for (int k = 0; k <= 100; ++k) {
      const Complex q = seg.first + (seg.second - seg.first) * (k / 100.0);
      double best = kInf;
      for (Complex p : out.endpoints) best = std::min(best, std::abs(p - q));
      gap = std::max(gap, best);
    }
    out.coverage_gap = gap;
  }
  return out;
}

}  // namespace hbl
