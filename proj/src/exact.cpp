#include "ostro/exact.hpp"

#include <cmath>

namespace ostro {

namespace {

constexpr int kJet = FieldPartials::kMaxX + 1;

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::fam1: return "fam1";
    case Family::fam2: return "fam2";
    case Family::fam3: return "fam3";
    case Family::rational: return "rational";
    case Family::solitary: return "solitary";
    case Family::oscillatory: return "oscillatory";
    case Family::frameshift: return "frameshift";
    case Family::cubictw: return "cubictw";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e.family;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

std::string to_string(CubicFamily family) {
  switch (family) {
    case CubicFamily::fam1: return "fam1";
    case CubicFamily::fam2: return "fam2";
    case CubicFamily::fam3: return "fam3";
  }
  return "unknown";
}

ClosedFormField galilean_u(const Profile& V, const SpeedProfile& speed) {
  return ClosedFormField([V, speed](double x, double t) {
    const double c = speed(t);
    const auto j = V.jet<kJet>(x - speed.primitive(t));
    FieldPartials p;
    for (int k = 0; k <= FieldPartials::kMaxX; ++k) p.dx[k] = j.derivative(k + 1);
    p.dx[0] += c;
    p.dt = speed.derivative(t, 1) - c * j.derivative(2);
    p.dtx = -c * j.derivative(3);
    return p;
  });
}

ClosedFormField potential_of(const Profile& V, const SpeedProfile& speed, const TimeProfile& h0,
                             double beta) {
  return ClosedFormField([V, speed, h0, beta](double x, double t) {
    const double c = speed(t);
    const double cp = speed.derivative(t, 1);
    const double z = x - speed.primitive(t);
    const auto j = V.jet<FieldPartials::kMaxX>(z);
    FieldPartials p;
    for (int k = 0; k <= FieldPartials::kMaxX; ++k) p.dx[k] = j.derivative(k);
    p.dx[0] += c * z + (cp - h0(t)) / beta;
    p.dx[1] += c;
    p.dt = -c * j.derivative(1) + cp * z - c * c + (speed.derivative(t, 2) - h0.derivative(t, 1)) / beta;
    p.dtx = -c * j.derivative(2) + cp;
    return p;
  });
}

ClosedFormField potential_of(const topographies::QuadraticInX& q, double beta) {
  return ClosedFormField([q, beta](double x, double t) {
    const double b2 = beta * beta;
    const double b3 = b2 * beta;
    const double h2 = q.h2(t), h2p = q.h2.derivative(t, 1), h2pp = q.h2.derivative(t, 2);
    const double h2ppp = q.h2.derivative(t, 3);
    const double h1 = q.h1(t), h1p = q.h1.derivative(t, 1), h1pp = q.h1.derivative(t, 2);
    // K = h1/beta + 2 h2'/beta^2 - 4 h2^2/beta^3, u = -(2/beta) h2 x - K
    const double K = h1 / beta + 2.0 * h2p / b2 - 4.0 * h2 * h2 / b3;
    const double Kp = h1p / beta + 2.0 * h2pp / b2 - 8.0 * h2 * h2p / b3;
    const double Kpp = h1pp / beta + 2.0 * h2ppp / b2 - 8.0 * (h2p * h2p + h2 * h2pp) / b3;
    // The t-only part is fixed by the reduced equation, it is not free.
    const double W = (2.0 / beta * h2 * K - Kp - q.h0(t)) / beta;
    const double Wp = (2.0 / beta * (h2p * K + h2 * Kp) - Kpp - q.h0.derivative(t, 1)) / beta;
    FieldPartials p;
    p.dx[0] = -h2 * x * x / beta - K * x + W;
    p.dx[1] = -2.0 * h2 * x / beta - K;
    p.dx[2] = -2.0 * h2 / beta;
    p.dt = -h2p * x * x / beta - Kp * x + Wp;
    p.dtx = -2.0 * h2p * x / beta - Kp;
    return p;
  });
}

namespace {

// u from a potential: shift the x-derivatives down by one.
ClosedFormField derivative_field(const ClosedFormField& v, const std::function<double(double, double)>& dtt_x) {
  return ClosedFormField([v, dtt_x](double x, double t) {
    const FieldPartials pv = v.partials(x, t);
    FieldPartials p;
    for (int k = 0; k < FieldPartials::kMaxX; ++k) p.dx[k] = pv.dx[k + 1];
    p.dt = pv.dtx;
    p.dtx = dtt_x(x, t);
    return p;
  });
}

}  // namespace

ExactSolution galilean_solution(Family family, const Profile& V, const Profile& h1,
                                const PhysParams& params, const SpeedProfile& speed,
                                const TimeProfile& h0) {
  return ExactSolution{family,
                       galilean_u(V, speed),
                       potential_of(V, speed, h0, params.beta),
                       Topography::galilean(h1, speed, h0, params.beta, true),
                       params,
                       speed,
                       V,
                       h1,
                       {}};
}

ExactSolution cubic_solution(const CubicCoeffs<double>& k, const PhysParams& params,
                             const SpeedProfile& speed, const TimeProfile& h0) {
  const Family f = k.family == CubicFamily::fam1   ? Family::fam1
                   : k.family == CubicFamily::fam2 ? Family::fam2
                                                   : Family::fam3;
  auto s = galilean_solution(f, Profile::polynomial(k.profile()), Profile::polynomial(k.forcing()),
                             params, speed, h0);
  s.coefficients = {{"c3", k.c3}, {"c2", k.c2}, {"c1", k.c1}, {"c0", k.c0},
                    {"a3", k.a3}, {"a2", k.a2}, {"a1", k.a1}, {"a0", k.a0}};
  return s;
}

Profile rational_forcing(double c0, const PhysParams& params) {
  const double a1 = -24.0 * params.alpha * params.beta;
  const double a3 = -(a1 / params.beta) * (a1 / params.beta);
  return Profile::rational(c0, a1, 0.0, a3);
}

ExactSolution rational_wave(double c0, const PhysParams& params, const SpeedProfile& speed,
                            const TimeProfile& h0) {
  if (!(c0 > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "rational wave needs c0 > 0");
  const double c1 = 24.0 * params.alpha;
  auto s = galilean_solution(Family::rational, Profile::rational(c0, c1, 0.0, 0.0),
                             rational_forcing(c0, params), params, speed, h0);
  s.coefficients = {{"c0", c0}, {"c1", c1}, {"a1", -24.0 * params.alpha * params.beta},
                    {"a3", -c1 * c1}};
  return s;
}

Profile solitary_forcing(double k, const PhysParams& params) {
  const double a = params.alpha;
  const double k4 = k * k * k * k;
  // -12 k alpha (beta + 8 k^4 alpha sech^2) tanh, with sech^2 = 1 - tanh^2
  return Profile::tanh(k, -12.0 * k * a * (params.beta + 8.0 * k4 * a), 0.0, 96.0 * k4 * k * a * a);
}

ExactSolution solitary_wave(double k, const PhysParams& params, const SpeedProfile& speed,
                            const TimeProfile& h0) {
  if (!(k > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "solitary wave needs k > 0");
  const double c1 = 12.0 * params.alpha * k;
  auto s = galilean_solution(Family::solitary, Profile::tanh(k, c1, 0.0, 0.0),
                             solitary_forcing(k, params), params, speed, h0);
  s.coefficients = {{"k", k}, {"c1", c1}};
  return s;
}

ExactSolution oscillatory_wave(double c0, double c1, double phi, const PhysParams& params,
                               const SpeedProfile& speed, const TimeProfile& h0) {
  const double ratio = params.beta / params.alpha;
  if (!(ratio > 0.0)) throw Error(ErrorKind::SignMismatch, "oscillatory wave needs beta/alpha > 0");
  if (c1 == 0.0) throw Error(ErrorKind::ZeroCoefficient, "oscillatory wave needs c1 != 0");
  const double omega = std::pow(ratio, 0.25);
  const Profile V = Profile::sinusoid(c0, c1, 0.0, omega, phi);
  auto s = galilean_solution(Family::oscillatory, V, forcing_from_profile(V, params.alpha, params.beta),
                             params, speed, h0);
  s.coefficients = {{"c0", c0}, {"c1", c1}, {"phi", phi}, {"omega", omega}};
  return s;
}

ExactSolution frame_shift_solution(const Topography& topo, const PhysParams& params) {
  const auto q = topo.as_quadratic();
  const double beta = params.beta;
  ClosedFormField v = potential_of(q, beta);
  // u_tx = -(2/beta) h2'
  ClosedFormField u = derivative_field(v, [q, beta](double, double t) {
    return -2.0 / beta * q.h2.derivative(t, 1);
  });
  return ExactSolution{Family::frameshift, u, v, topo, params, SpeedProfile::zero(),
                       std::nullopt, std::nullopt, {}};
}

Polynomial<double> cubic_tw_profile(double mu, double c2, double beta) {
  const double g = 4.0 * c2 * c2 - beta * mu;
  return Polynomial<double>({3.0 * c2 * g / (beta * beta), (12.0 * c2 * c2 - beta * mu) / (2.0 * beta),
                             c2, beta / 18.0});
}

ExactSolution cubic_tw_solution(double mu, double c2, const TimeProfile& h1, const TimeProfile& h0,
                                const PhysParams& params) {
  const double beta = params.beta;
  // wave speed c~ = mu - h1/beta, zeta = x - int c~
  const SpeedProfile ct = h1.affine(-1.0 / beta, mu);
  const Polynomial<double> Vp = cubic_tw_profile(mu, c2, beta);
  const Profile V = Profile::polynomial(Vp);
  // In the moving frame u = c~ + V'(zeta) - mu, i.e. the Galilean form with profile V - mu zeta.
  const Profile W = Profile::polynomial(Vp - Polynomial<double>({0.0, mu}));
  ClosedFormField u = galilean_u(W, ct);
  ClosedFormField v([V, ct, h0, mu, beta](double x, double t) {
    const double c = ct(t);
    const double cp = ct.derivative(t, 1);
    const double z = x - ct.primitive(t);
    const auto j = V.jet<FieldPartials::kMaxX>(z);
    FieldPartials p;
    for (int k = 0; k <= FieldPartials::kMaxX; ++k) p.dx[k] = j.derivative(k);
    p.dx[0] += (c - mu) * x + (cp - h0(t)) / beta;
    p.dx[1] += c - mu;
    p.dt = -c * j.derivative(1) + cp * x + (ct.derivative(t, 2) - h0.derivative(t, 1)) / beta;
    p.dtx = -c * j.derivative(2) + cp;
    return p;
  });
  auto s = ExactSolution{Family::cubictw, u, v, Topography::quadratic_constant(0.0, h1, h0, true),
                         params, ct, V, std::nullopt, {}};
  s.coefficients = {{"mu", mu}, {"c2", c2}};
  return s;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {Family::fam1, "fam1", "a3, a2, a1, a0, branch; alpha, beta, speed, h0",
       "cubic profile, general cubic forcing, c3 = (beta +- sqrt(72 a3 + beta^2))/36"},
      {Family::fam2, "fam2", "a2 != 0, a0, c0; alpha, beta, speed, h0",
       "cubic profile with c3 = beta/6, forcing a3 = beta^2/3, a1 = a2^2/beta^2"},
      {Family::fam3, "fam3", "c2, a1, a0; alpha, beta, speed, h0",
       "cubic profile with c3 = beta/18, forcing linear in zeta"},
      {Family::rational, "rational", "c0 > 0; alpha, beta, speed, h0",
       "single-hump algebraically decaying wave u = c + 24 alpha (c0 - chi^2)/(chi^2 + c0)^2"},
      {Family::solitary, "solitary", "k > 0; alpha, beta, speed, h0",
       "sech-squared wave u = c + 12 alpha k^2 sech^2(k chi)"},
      {Family::oscillatory, "oscillatory", "c0, c1 != 0, phi; beta/alpha > 0, speed, h0",
       "periodic wave u = c - c1 omega sin(omega chi + phi), omega^4 = beta/alpha"},
      {Family::frameshift, "frameshift", "h2(t), h1(t), h0(t); alpha, beta",
       "linear-in-x flow u = -(2/beta) h2 x - K(t) under quadratic forcing"},
      {Family::cubictw, "cubictw", "mu, c2, h1(t), h0(t); alpha, beta",
       "quadratic travelling wave in zeta = x - int (mu - h1/beta) dt"},
  };
  return entries;
}

}  // namespace ostro
