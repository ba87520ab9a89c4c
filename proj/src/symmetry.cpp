#include "ostro/symmetry.hpp"

#include <cmath>

namespace ostro {

namespace {

// u~(x,t) = u(x - s(t), t - tau) + d(t); s' and d' feed the time partials.
FieldPartials shifted(const FieldPartials& p, double ds, double dd) {
  FieldPartials r = p;
  r.dt = p.dt - ds * p.dx[1] + dd;
  r.dtx = p.dtx - ds * p.dx[2];
  return r;
}

}  // namespace

SymmetryGenerator SymmetryGenerator::x2(TimeProfile h2, double beta) {
  if (beta == 0.0) throw Error(ErrorKind::InvalidArgument, "beta must be nonzero");
  return SymmetryGenerator(generators::X2{h2, beta});
}

std::array<double, 3> SymmetryGenerator::shift_factor(const generators::X2& g, double t) {
  const double k = -2.0 / g.beta;
  const double e = std::exp(k * g.h2.primitive(t));
  const double h = g.h2(t);
  return {e, k * h * e, (k * g.h2.derivative(t, 1) + k * k * h * h) * e};
}

PointImage SymmetryGenerator::map(double eps, double t, double x, double u) const {
  if (eps == 0.0) return {t, x, u};
  if (const auto* g = std::get_if<generators::X1>(&v_)) {
    const double t1 = t + eps;
    return {t1, x + g->speed.primitive(t1) - g->speed.primitive(t), u + g->speed(t1) - g->speed(t)};
  }
  const auto& g = std::get<generators::X2>(v_);
  const auto e = shift_factor(g, t);
  return {t, x + eps * e[0], u + eps * e[1]};
}

ClosedFormField SymmetryGenerator::apply(double eps, const ClosedFormField& u) const {
  if (eps == 0.0) return u;
  if (const auto* g = std::get_if<generators::X1>(&v_)) {
    const SpeedProfile c = g->speed;
    return ClosedFormField([u, c, eps](double x, double t) {
      const double t0 = t - eps;
      const double s = c.primitive(t) - c.primitive(t0);
      FieldPartials r = shifted(u.partials(x - s, t0), c(t) - c(t0),
                                c.derivative(t, 1) - c.derivative(t0, 1));
      r.dx[0] += c(t) - c(t0);
      return r;
    });
  }
  const auto g = std::get<generators::X2>(v_);
  return ClosedFormField([u, g, eps](double x, double t) {
    const auto e = shift_factor(g, t);
    FieldPartials r = shifted(u.partials(x - eps * e[0], t), eps * e[1], eps * e[2]);
    r.dx[0] += eps * e[1];
    return r;
  });
}

}  // namespace ostro
