#include "ostro/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "ostro/numerics.hpp"

namespace ostro {

std::string to_string(EvalMode mode) {
  switch (mode) {
    case EvalMode::analytic: return "analytic";
    case EvalMode::fd: return "fd";
    case EvalMode::dft: return "dft";
  }
  return "unknown";
}

std::string to_string(ConservedCurrent::Label label) {
  return label == ConservedCurrent::Label::energy ? "energy" : "momentum";
}

ForcingFn forcing_of(const Topography& topo) {
  return [topo](double x, double t) { return topo.eval(x, t); };
}

namespace {

ResidualReport make_report(const Eigen::VectorXd& r, const Eigen::VectorXd& field, const Grid1D& grid,
                           int margin, EvalMode mode) {
  const int len = grid.n() - 2 * margin;
  ResidualReport rep;
  rep.grid = grid;
  rep.margin = margin;
  rep.mode = mode;
  rep.max_abs = r.segment(margin, len).cwiseAbs().maxCoeff();
  rep.rel_max = rep.max_abs / (1.0 + field.segment(margin, len).cwiseAbs().maxCoeff());
  return rep;
}

// Pointwise residual forms shared by the analytic and sampled paths.
double u_form(double u, double ux, double uxx, double uxxxx, double utx, double hx,
              const PhysParams& p) {
  return utx + ux * ux + u * uxx + p.alpha * uxxxx - p.beta * u - hx;
}

double v_form(double v, double vx, double vxx, double vxxxx, double vtx, double h,
              const PhysParams& p) {
  return vtx + vx * vxx + p.alpha * vxxxx - p.beta * v - h;
}

struct SampledDerivs {
  Grid1D grid;
  double t;
  Eigen::VectorXd f, fx, fxx, fxxxx, ftx;
  int margin;
};

SampledDerivs sampled_derivs(const std::vector<SampledField>& levels, double dt, EvalMode mode) {
  if (levels.size() < 3) {
    throw Error(ErrorKind::MissingTimeLevels, "sampled residual needs 3 or 5 time levels, got " +
                                                  std::to_string(levels.size()));
  }
  if (levels.size() != 3 && levels.size() != 5) {
    throw Error(ErrorKind::InvalidArgument, "sampled residual takes 3 or 5 time levels");
  }
  if (!(dt > 0.0)) throw Error(ErrorKind::InvalidArgument, "time spacing must be positive");
  const Grid1D grid = levels.front().grid;
  for (const auto& l : levels) {
    if (!(l.grid == grid)) throw Error(ErrorKind::ShapeMismatch, "time levels on different grids");
  }
  const auto& mid = levels[levels.size() / 2];
  const std::vector<double> w = levels.size() == 3 ? std::vector<double>{-0.5, 0.0, 0.5}
                                                   : std::vector<double>{1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
  Eigen::VectorXd ft = Eigen::VectorXd::Zero(grid.n());
  int base_margin = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    ft += (w[i] / dt) * levels[i].values;
    base_margin = std::max(base_margin, levels[i].margin);
  }
  SampledDerivs d{grid, mid.t, mid.values, {}, {}, {}, {}, 0};
  if (mode == EvalMode::dft) {
    const SampledField c(grid, mid.t, mid.values);
    d.fx = dft_derivative(c, 1).values;
    d.fxx = dft_derivative(c, 2).values;
    d.fxxxx = dft_derivative(c, 4).values;
    d.ftx = dft_derivative(SampledField(grid, mid.t, ft), 1).values;
    return d;
  }
  if (mode != EvalMode::fd) throw Error(ErrorKind::InvalidArgument, "sampled residual needs fd or dft mode");
  const Boundary b = grid.periodic() ? Boundary::periodic_wrap : Boundary::interior_only;
  const SampledField c(grid, mid.t, mid.values, base_margin);
  const auto fx = fd_derivative(c, {1, 4, b});
  const auto fxx = fd_derivative(c, {2, 4, b});
  const auto fxxxx = fd_derivative(c, {4, 4, b});
  const auto ftx = fd_derivative(SampledField(grid, mid.t, ft, base_margin), {1, 4, b});
  d.fx = fx.values;
  d.fxx = fxx.values;
  d.fxxxx = fxxxx.values;
  d.ftx = ftx.values;
  d.margin = std::max({fx.margin, fxx.margin, fxxxx.margin, ftx.margin});
  return d;
}

}  // namespace

ResidualReport residual_u(const ClosedFormField& u, const ForcingFn& h, const PhysParams& params,
                          const Grid1D& grid, double t) {
  Eigen::VectorXd r(grid.n()), f(grid.n());
  for (int i = 0; i < grid.n(); ++i) {
    const double x = grid.x(i);
    const auto p = u.partials(x, t);
    f[i] = p.dx[0];
    r[i] = u_form(p.dx[0], p.dx[1], p.dx[2], p.dx[4], p.dtx, h(x, t).h_x, params);
  }
  return make_report(r, f, grid, 0, EvalMode::analytic);
}

ResidualReport residual_u(const ExactSolution& sol, const Grid1D& grid, double t) {
  return residual_u(sol.u, forcing_of(sol.topo), sol.params, grid, t);
}

ResidualReport residual_u(const std::vector<SampledField>& levels, double dt, const ForcingFn& h,
                          const PhysParams& params, EvalMode mode) {
  const auto d = sampled_derivs(levels, dt, mode);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(d.grid.n());
  for (int i = d.margin; i < d.grid.n() - d.margin; ++i) {
    r[i] = u_form(d.f[i], d.fx[i], d.fxx[i], d.fxxxx[i], d.ftx[i], h(d.grid.x(i), d.t).h_x, params);
  }
  return make_report(r, d.f, d.grid, d.margin, mode);
}

ResidualReport residual_v(const ClosedFormField& v, const ForcingFn& h, const PhysParams& params,
                          const Grid1D& grid, double t) {
  Eigen::VectorXd r(grid.n()), f(grid.n());
  for (int i = 0; i < grid.n(); ++i) {
    const double x = grid.x(i);
    const auto p = v.partials(x, t);
    f[i] = p.dx[0];
    r[i] = v_form(p.dx[0], p.dx[1], p.dx[2], p.dx[4], p.dtx, h(x, t).h, params);
  }
  return make_report(r, f, grid, 0, EvalMode::analytic);
}

ResidualReport residual_v(const ExactSolution& sol, const Grid1D& grid, double t) {
  return residual_v(sol.v, forcing_of(sol.topo), sol.params, grid, t);
}

ResidualReport residual_v(const std::vector<SampledField>& levels, double dt, const ForcingFn& h,
                          const PhysParams& params, EvalMode mode) {
  const auto d = sampled_derivs(levels, dt, mode);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(d.grid.n());
  for (int i = d.margin; i < d.grid.n() - d.margin; ++i) {
    r[i] = v_form(d.f[i], d.fx[i], d.fxx[i], d.fxxxx[i], d.ftx[i], h(d.grid.x(i), d.t).h, params);
  }
  return make_report(r, d.f, d.grid, d.margin, mode);
}

namespace {

double reduction_form(double V, double V1, double V2, double V4, double rhs_h1, double z,
                      const PhysParams& p, const ReductionVariant& var) {
  using K = ReductionVariant::Kind;
  const double lhs = p.alpha * V4 + (V1 - (var.kind == K::case2 ? var.mu : 0.0)) * V2 - p.beta * V;
  switch (var.kind) {
    case K::x1: return lhs - rhs_h1;
    case K::case1: return lhs - var.h2 * z * z;
    case K::case2: return lhs;
  }
  return lhs;
}

}  // namespace

ResidualReport residual_reduction(const Profile& V, const Profile& h1, const PhysParams& params,
                                  const ReductionVariant& variant, const Grid1D& grid) {
  Eigen::VectorXd r(grid.n()), f(grid.n());
  for (int i = 0; i < grid.n(); ++i) {
    const double z = grid.x(i);
    const auto j = V.jet<4>(z);
    f[i] = j[0];
    const double rhs = variant.kind == ReductionVariant::Kind::x1 ? h1(z) : 0.0;
    r[i] = reduction_form(j[0], j.derivative(1), j.derivative(2), j.derivative(4), rhs, z, params, variant);
  }
  return make_report(r, f, grid, 0, EvalMode::analytic);
}

ResidualReport residual_reduction(const SampledField& V, const Profile& h1, const PhysParams& params,
                                  const ReductionVariant& variant) {
  const Boundary b = V.grid.periodic() ? Boundary::periodic_wrap : Boundary::interior_only;
  const auto d1 = fd_derivative(V, {1, 4, b});
  const auto d2 = fd_derivative(V, {2, 4, b});
  const auto d4 = fd_derivative(V, {4, 4, b});
  const int margin = std::max({d1.margin, d2.margin, d4.margin});
  Eigen::VectorXd r = Eigen::VectorXd::Zero(V.grid.n());
  for (int i = margin; i < V.grid.n() - margin; ++i) {
    const double z = V.grid.x(i);
    const double rhs = variant.kind == ReductionVariant::Kind::x1 ? h1(z) : 0.0;
    r[i] = reduction_form(V.values[i], d1.values[i], d2.values[i], d4.values[i], rhs, z, params, variant);
  }
  return make_report(r, V.values, V.grid, margin, EvalMode::fd);
}

ConservedCurrent energy_current(const Topography& topo, const PhysParams& params) {
  const auto* gp = std::get_if<topographies::Galilean>(&topo.variant());
  if (gp == nullptr) {
    throw Error(ErrorKind::ShapeMismatch, "energy current needs h = h1(chi) - beta c chi + h0");
  }
  const topographies::Galilean g = *gp;
  const double alpha = params.alpha;
  const double beta = params.beta;
  ConservedCurrent cur{ConservedCurrent::Label::energy, {}, {}};
  cur.density = [g, alpha, beta](double x, double t, const FieldPartials& v) {
    const double c = g.speed(t);
    const double z = x - g.speed.primitive(t);
    const double vx = v.dx[1];
    return 0.5 * alpha * v.dx[2] * v.dx[2] - vx * vx * vx / 6.0 + 0.5 * c * vx * vx -
           0.5 * beta * v.dx[0] * v.dx[0] +
           (beta * c * z + g.speed.derivative(t, 1) - g.h1(z) - g.h0(t)) * v.dx[0];
  };
  cur.flux = [g, alpha, beta](double x, double t, const FieldPartials& v) {
    const double c = g.speed(t);
    const double c1 = g.speed.derivative(t, 1);
    const double c2 = g.speed.derivative(t, 2);
    const double C = g.speed.primitive(t);
    const double h0 = g.h0(t);
    const double h0p = g.h0.derivative(t, 1);
    const double z = x - C;
    const double h1 = g.h1(z);
    const double k1 = (c2 - h0p) / beta;
    const double vv = v.dx[0], vx = v.dx[1], vxx = v.dx[2], vxxx = v.dx[3];
    const double vt = v.dt, vtx = v.dtx;
    const double s = c1 * z + k1;
    double f = alpha * (vt + c * vx - s) * vxxx - 0.5 * alpha * c * vxx * vxx -
               alpha * (vtx - c1) * vxx + c * vx * vx * vx / 3.0 + 0.5 * (vt - s) * vx * vx +
               0.5 * vt * vt - s * vt - 0.5 * beta * c * vv * vv +
               (beta * c * c * z - c * (h1 + h0)) * vv;
    f += -beta / 3.0 * c * c1 * z * z * z + 0.5 * (c * h0p + c1 * h0 - c * c2) * z * z +
         h0 * (c2 - h0p) / beta * z;
    f += c1 * g.h1.moment_primitive(z) + k1 * g.h1.primitive(z);
    f += -beta / 3.0 * c1 * c * C * C * C - 0.5 * (c1 * h0 + c * h0p - c * c2) * C * C +
         h0 * (c2 - h0p) / beta * C;
    return f;
  };
  return cur;
}

ConservedCurrent momentum_current(const Topography& topo, const PhysParams& params) {
  if (topo.kind() == Topography::Kind::galilean) {
    throw Error(ErrorKind::ShapeMismatch, "momentum current needs h = h2 x^2 + h1 x + h0");
  }
  const auto q = topo.as_quadratic();
  const double alpha = params.alpha;
  const double beta = params.beta;
  auto weight = [q, beta](double t) { return std::exp(-2.0 / beta * q.h2.primitive(t)); };
  ConservedCurrent cur{ConservedCurrent::Label::momentum, {}, {}};
  cur.density = [q, beta, weight](double, double t, const FieldPartials& v) {
    return (0.5 * v.dx[1] * v.dx[1] - 2.0 / beta * q.h2(t) * v.dx[0]) * weight(t);
  };
  cur.flux = [q, alpha, beta, weight](double x, double t, const FieldPartials& v) {
    const double b2 = beta * beta, b3 = b2 * beta;
    const double h2 = q.h2(t), h2p = q.h2.derivative(t, 1), h1 = q.h1(t), h0 = q.h0(t);
    const double K = h1 / beta + 2.0 * h2p / b2 - 4.0 * h2 * h2 / b3;
    const double vv = v.dx[0], vx = v.dx[1], vxx = v.dx[2], vxxx = v.dx[3];
    const double x2 = x * x;
    double f = (vx + 2.0 * h2 * x / beta + K) * alpha * vxxx - 0.5 * alpha * vxx * vxx -
               2.0 * alpha / beta * h2 * vxx + vx * vx * vx / 3.0 +
               (h2 * x / beta + 0.5 * K) * vx * vx + (2.0 * h2 * x / beta + K) * v.dt -
               0.5 * beta * vv * vv - (h2 * x2 + h1 * x + h0) * vv;
    f += -h2 * h2 * x2 * x2 / (2.0 * beta) +
         h2 * (4.0 * h2 * h2 / (3.0 * b3) - 2.0 * h2p / (3.0 * b2) - h1 / beta) * x2 * x -
         (h0 * h2 / beta + h1 * h1 / (2.0 * beta) + h1 * h2p / b2 - 2.0 * h1 * h2 * h2 / b3) * x2 +
         h0 * (4.0 * h2 * h2 / b3 - 2.0 * h2p / b2 - h1 / beta) * x;
    return f * weight(t);
  };
  return cur;
}

ResidualReport continuity_check(const ConservedCurrent& current, const ClosedFormField& v,
                                const Grid1D& grid, const std::vector<double>& times, double dt) {
  if (times.empty()) throw Error(ErrorKind::InvalidArgument, "continuity check needs at least one time");
  const int n = grid.n();
  ResidualReport worst;
  worst.grid = grid;
  worst.mode = EvalMode::fd;
  for (double t : times) {
    Eigen::VectorXd tp(n), tm(n), t0(n), phi(n);
    for (int i = 0; i < n; ++i) {
      const double x = grid.x(i);
      tp[i] = current.density(x, t + dt, v.partials(x, t + dt));
      tm[i] = current.density(x, t - dt, v.partials(x, t - dt));
      const auto p = v.partials(x, t);
      t0[i] = current.density(x, t, p);
      phi[i] = current.flux(x, t, p);
    }
    const auto dphi = fd_derivative(SampledField(grid, t, phi), {1, 4, Boundary::interior_only});
    const Eigen::VectorXd r = (tp - tm) / (2.0 * dt) + dphi.values;
    Eigen::VectorXd masked = Eigen::VectorXd::Zero(n);
    masked.segment(dphi.margin, n - 2 * dphi.margin) = r.segment(dphi.margin, n - 2 * dphi.margin);
    const auto rep = make_report(masked, t0, grid, dphi.margin, EvalMode::fd);
    if (rep.max_abs >= worst.max_abs) worst = rep;
  }
  return worst;
}

double conserved_integral(const ConservedCurrent& current, const ClosedFormField& v,
                          const Grid1D& grid, double t) {
  Eigen::VectorXd d(grid.n());
  for (int i = 0; i < grid.n(); ++i) {
    const double x = grid.x(i);
    d[i] = current.density(x, t, v.partials(x, t));
  }
  return quadrature(SampledField(grid, t, d));
}

double drift(const std::vector<double>& series) {
  if (series.empty()) return 0.0;
  double m = 0.0;
  for (double s : series) m = std::max(m, std::abs(s - series.front()));
  return m / (1.0 + std::abs(series.front()));
}

double mass_balance(const ClosedFormField& u, const ForcingFn& h, const PhysParams& params,
                    double a, double b, double t, int n, double dt) {
  const Grid1D grid(a, b, n, false);
  auto flux = [&](double x) {
    const auto p = u.partials(x, t);
    const double ut = dt > 0.0 ? (u(x, t + dt) - u(x, t - dt)) / (2.0 * dt) : p.dt;
    return ut + p.dx[0] * p.dx[1] + params.alpha * p.dx[3];
  };
  const double integral = simpson(sample(u, grid, t));
  return flux(b) - flux(a) - params.beta * integral - (h(b, t).h - h(a, t).h);
}

double first_integral(const Eigen::Vector4d& s, double mu, const PhysParams& p) {
  const double v1 = s[1];
  return p.alpha * v1 * s[3] - 0.5 * p.alpha * s[2] * s[2] + v1 * v1 * v1 / 3.0 -
         0.5 * mu * v1 * v1 - 0.5 * p.beta * s[0] * s[0];
}

double first_integral_printed(const Eigen::Vector4d& s, double mu, const PhysParams& p) {
  const double v1 = s[1];
  return p.beta * v1 * s[3] - 0.5 * p.beta * s[2] * s[2] + v1 * v1 * v1 / (3.0 * p.alpha) -
         mu * v1 * v1 / (2.0 * p.alpha) - 0.5 * p.beta * s[0] * s[0];
}

namespace {

void require_zero_mean(const SampledField& u) {
  if (!u.grid.periodic()) throw Error(ErrorKind::NotPeriodic, "Hamiltonian check needs a periodic grid");
  const double scale = u.values.cwiseAbs().maxCoeff();
  if (std::abs(u.values.mean()) > 1e-8 * std::max(scale, 1e-300) && scale > 0.0) {
    throw Error(ErrorKind::NonZeroMean, "Hamiltonian check needs a zero-mean state");
  }
}

struct ForcingSamples {
  Eigen::VectorXd h, H, Hx;
};

// H is periodic up to a linear part; D_x of that part is the slope.
ForcingSamples sample_forcing(const ForcingFn& h, const Grid1D& grid, double t, const Spectral& sp) {
  const int n = grid.n();
  ForcingSamples f{Eigen::VectorXd(n), Eigen::VectorXd(n), Eigen::VectorXd(n)};
  for (int i = 0; i < n; ++i) {
    const auto v = h(grid.x(i), t);
    f.h[i] = v.h;
    f.H[i] = v.H;
  }
  const double slope = (h(grid.b(), t).H - h(grid.a(), t).H) / grid.length();
  Eigen::VectorXd periodic = f.H - slope * (grid.points().array() - grid.a()).matrix();
  f.Hx = sp.derivative(periodic, 1).array() + slope;
  return f;
}

}  // namespace

double hamiltonian_functional(const SampledField& u, const ForcingFn& h, const PhysParams& params) {
  const Spectral sp(u.grid.n(), u.grid.length());
  const Eigen::VectorXd ux = sp.derivative(u.values, 1);
  const Eigen::VectorXd v = sp.antiderivative(u.values);
  double s = 0.0;
  for (int i = 0; i < u.grid.n(); ++i) {
    const double ui = u.values[i];
    s += 0.5 * params.alpha * ux[i] * ux[i] - ui * ui * ui / 6.0 - 0.5 * params.beta * v[i] * v[i] +
         h(u.grid.x(i), u.t).H * ui;
  }
  return s * u.grid.dx();
}

HamiltonianReport hamiltonian_check(const SampledField& u, const ForcingFn& h,
                                    const PhysParams& params, const std::optional<SampledField>& u_t,
                                    int directions, double eps, std::uint64_t seed) {
  require_zero_mean(u);
  const Grid1D& grid = u.grid;
  const int n = grid.n();
  const Spectral sp(n, grid.length());
  const auto f = sample_forcing(h, grid, u.t, sp);
  const Eigen::VectorXd& U = u.values;
  const Eigen::VectorXd v = sp.antiderivative(U);
  const Eigen::VectorXd w = sp.antiderivative(v);
  const Eigen::VectorXd ux = sp.derivative(U, 1);
  const Eigen::VectorXd uxx = sp.derivative(U, 2);
  const Eigen::VectorXd uxxx = sp.derivative(U, 3);

  // dH/du = -alpha u_xx - u^2/2 + beta d^-2 u + H
  const Eigen::VectorXd local = -params.alpha * uxx - 0.5 * U.cwiseProduct(U) + params.beta * w;
  const Eigen::VectorXd grad = local + f.H;
  HamiltonianReport rep;
  rep.flow = sp.derivative(local, 1) + f.Hx;
  const Eigen::VectorXd evolution = -U.cwiseProduct(ux) - params.alpha * uxxx + params.beta * v + f.h;
  rep.structure = make_report(rep.flow - evolution, U, grid, 0, EvalMode::dft);
  rep.ut_mismatch = u_t ? (u_t->values - rep.flow).cwiseAbs().maxCoeff()
                        : std::numeric_limits<double>::quiet_NaN();

  rep.gateaux = std::numeric_limits<double>::quiet_NaN();
  if (directions > 0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    const int modes = std::min(8, n / 4);
    rep.gateaux = 0.0;
    for (int d = 0; d < directions; ++d) {
      Eigen::VectorXd dir = Eigen::VectorXd::Zero(n);
      for (int m = 1; m <= modes; ++m) {
        const double a = normal(rng), b = normal(rng);
        const double kappa = 2.0 * std::numbers::pi * m / grid.length();
        for (int i = 0; i < n; ++i) {
          const double x = grid.x(i) - grid.a();
          dir[i] += (a * std::cos(kappa * x) + b * std::sin(kappa * x)) / m;
        }
      }
      const SampledField up(grid, u.t, U + eps * dir);
      const SampledField um(grid, u.t, U - eps * dir);
      const double quotient =
          (hamiltonian_functional(up, h, params) - hamiltonian_functional(um, h, params)) / (2.0 * eps);
      const double exact = grad.dot(dir) * grid.dx();
      rep.gateaux = std::max(rep.gateaux, std::abs(quotient - exact) / (1.0 + std::abs(exact)));
    }
  }
  return rep;
}

SampledField lagrangian_density(const ClosedFormField& v, const ForcingFn& h, const PhysParams& params,
                                const Grid1D& grid, double t) {
  Eigen::VectorXd L(grid.n());
  for (int i = 0; i < grid.n(); ++i) {
    const double x = grid.x(i);
    const auto p = v.partials(x, t);
    const double vx = p.dx[1];
    L[i] = -0.5 * p.dt * vx - vx * vx * vx / 6.0 + 0.5 * params.alpha * p.dx[2] * p.dx[2] -
           0.5 * params.beta * p.dx[0] * p.dx[0] + h(x, t).H * vx;
  }
  return {grid, t, L};
}

ResidualReport euler_residual(const ClosedFormField& v, const ForcingFn& h, const PhysParams& params,
                              const Grid1D& grid, double t, double dt) {
  const int n = grid.n();
  Eigen::VectorXd Lv(n), Lvt_p(n), Lvt_m(n), Lvx(n), Lvxx(n), direct(n), vals(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    const auto p = v.partials(x, t);
    const auto hv = h(x, t);
    vals[i] = p.dx[0];
    Lv[i] = -params.beta * p.dx[0];
    Lvt_p[i] = -0.5 * v.partials(x, t + dt).dx[1];
    Lvt_m[i] = -0.5 * v.partials(x, t - dt).dx[1];
    Lvx[i] = -0.5 * p.dt - 0.5 * p.dx[1] * p.dx[1] + hv.H;
    Lvxx[i] = params.alpha * p.dx[2];
    direct[i] = v_form(p.dx[0], p.dx[1], p.dx[2], p.dx[4], p.dtx, hv.h, params);
  }
  const auto d1 = fd_derivative(SampledField(grid, t, Lvx), {1, 4, Boundary::interior_only});
  const auto d2 = fd_derivative(SampledField(grid, t, Lvxx), {2, 4, Boundary::interior_only});
  const int margin = std::max(d1.margin, d2.margin);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
  for (int i = margin; i < n - margin; ++i) {
    const double e = Lv[i] - (Lvt_p[i] - Lvt_m[i]) / (2.0 * dt) - d1.values[i] + d2.values[i];
    r[i] = e - direct[i];
  }
  return make_report(r, vals, grid, margin, EvalMode::fd);
}

std::vector<ResidualReport> symmetry_orbit_check(const SymmetryGenerator& gen,
                                                 const std::vector<double>& eps,
                                                 const ExactSolution& sol, const Grid1D& grid,
                                                 double t) {
  const ForcingFn same = forcing_of(sol.topo);
  bool translate = false;
  if (const auto* g1 = std::get_if<generators::X1>(&gen.variant())) {
    const auto* topo = std::get_if<topographies::Galilean>(&sol.topo.variant());
    if (topo == nullptr || !(topo->speed == g1->speed)) {
      throw Error(ErrorKind::ShapeMismatch, "X1 needs the Galilean forcing with the same frame speed");
    }
  } else {
    const auto& g2 = std::get<generators::X2>(gen.variant());
    const bool quadratic = sol.topo.kind() != Topography::Kind::galilean;
    if (quadratic && sol.topo.as_quadratic().h2 == g2.h2 && g2.beta == sol.params.beta) {
      translate = false;
    } else if (g2.h2.is_zero()) {
      translate = true;
    } else {
      throw Error(ErrorKind::ShapeMismatch, "X2 needs the quadratic forcing with the same h2");
    }
  }
  std::vector<ResidualReport> out;
  out.reserve(eps.size());
  for (double e : eps) {
    ForcingFn h = same;
    if (translate) {
      h = [same, e](double x, double tt) { return same(x - e, tt); };
    }
    out.push_back(residual_u(gen.apply(e, sol.u), h, sol.params, grid, t));
  }
  return out;
}

}  // namespace ostro
