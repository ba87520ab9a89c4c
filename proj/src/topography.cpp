#include "ostro/topography.hpp"

#include <cmath>
#include <sstream>

namespace ostro {

namespace {

TopoValues eval_quadratic(const TimeProfile& h2, const TimeProfile& h1, const TimeProfile& h0,
                          double x, double t) {
  const double a = h2(t);
  const double b = h1(t);
  const double c = h0(t);
  TopoValues r{};
  r.h = (a * x + b) * x + c;
  r.h_x = 2.0 * a * x + b;
  r.h_t = (h2.derivative(t, 1) * x + h1.derivative(t, 1)) * x + h0.derivative(t, 1);
  r.H = ((a / 3.0 * x + 0.5 * b) * x + c) * x;
  return r;
}

}  // namespace

Topography Topography::galilean(Profile h1, SpeedProfile speed, TimeProfile h0, double beta,
                                bool allow_unforced) {
  if (beta == 0.0) throw Error(ErrorKind::InvalidArgument, "beta must be nonzero");
  Topography t(topographies::Galilean{std::move(h1), speed, h0, beta});
  t.check_forced(allow_unforced);
  return t;
}

Topography Topography::quadratic(TimeProfile h2, TimeProfile h1, TimeProfile h0,
                                 bool allow_unforced) {
  Topography t(topographies::QuadraticInX{h2, h1, h0});
  t.check_forced(allow_unforced);
  return t;
}

Topography Topography::quadratic_constant(double h2, TimeProfile h1, TimeProfile h0,
                                          bool allow_unforced) {
  Topography t(topographies::QuadraticConstant{h2, h1, h0});
  t.check_forced(allow_unforced);
  return t;
}

Topography Topography::none() {
  return quadratic(TimeProfile::zero(), TimeProfile::zero(), TimeProfile::zero(), true);
}

void Topography::check_forced(bool allow_unforced) {
  // Sample h_x on a 21 x 21 grid over [-5, 5]^2.
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double x = -5.0 + 0.5 * i;
      const double t = -5.0 + 0.5 * j;
      if (std::abs(eval(x, t).h_x) > 1e-12) {
        unforced_ = false;
        return;
      }
    }
  }
  if (!allow_unforced) {
    throw Error(ErrorKind::InvalidArgument,
                "topography has h_x identically zero; request the unforced case explicitly");
  }
  unforced_ = true;
}

TopoValues Topography::eval(double x, double t) const {
  return std::visit(
      [x, t](const auto& g) -> TopoValues {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, topographies::Galilean>) {
          const double C = g.speed.primitive(t);
          const double c = g.speed(t);
          const double cp = g.speed.derivative(t, 1);
          const double z = x - C;
          const auto j = g.h1.template jet<1>(z);
          TopoValues r{};
          r.h = j[0] - g.beta * c * z + g.h0(t);
          r.h_x = j[1] - g.beta * c;
          r.h_t = -c * j[1] - g.beta * cp * z + g.beta * c * c + g.h0.derivative(t, 1);
          r.H = g.h1.primitive(z) - g.h1.primitive(-C) - 0.5 * g.beta * c * (z * z - C * C) +
                g.h0(t) * x;
          return r;
        } else if constexpr (std::is_same_v<G, topographies::QuadraticInX>) {
          return eval_quadratic(g.h2, g.h1, g.h0, x, t);
        } else {
          return eval_quadratic(TimeProfile::constant(g.h2), g.h1, g.h0, x, t);
        }
      },
      v_);
}

namespace {

bool constant_in_time(const TimeProfile& f) {
  return f.kind() == TimeProfile::Kind::zero || f.kind() == TimeProfile::Kind::constant;
}

}  // namespace

bool Topography::is_static() const {
  return std::visit(
      [](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, topographies::Galilean>) {
          return g.speed.is_zero() && constant_in_time(g.h0);
        } else if constexpr (std::is_same_v<G, topographies::QuadraticInX>) {
          return constant_in_time(g.h2) && constant_in_time(g.h1) && constant_in_time(g.h0);
        } else {
          return constant_in_time(g.h1) && constant_in_time(g.h0);
        }
      },
      v_);
}

topographies::QuadraticInX Topography::as_quadratic() const {
  if (const auto* q = std::get_if<topographies::QuadraticInX>(&v_)) return *q;
  if (const auto* q = std::get_if<topographies::QuadraticConstant>(&v_)) {
    return {TimeProfile::constant(q->h2), q->h1, q->h0};
  }
  throw Error(ErrorKind::ShapeMismatch, "topography is not quadratic in x");
}

std::string Topography::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&os](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, topographies::Galilean>) {
          os << "galilean{h1=" << g.h1.describe() << ", speed=" << g.speed.describe()
             << ", h0=" << g.h0.describe() << ", beta=" << g.beta << "}";
        } else if constexpr (std::is_same_v<G, topographies::QuadraticInX>) {
          os << "quadratic{h2=" << g.h2.describe() << ", h1=" << g.h1.describe()
             << ", h0=" << g.h0.describe() << "}";
        } else {
          os << "quadratic_constant{h2=" << g.h2 << ", h1=" << g.h1.describe()
             << ", h0=" << g.h0.describe() << "}";
        }
      },
      v_);
  return os.str();
}

TopoValues topo_eval(const Topography& topo, double x, double t) { return topo.eval(x, t); }

std::string to_string(Topography::Kind kind) {
  switch (kind) {
    case Topography::Kind::galilean: return "galilean";
    case Topography::Kind::quadratic: return "quadratic";
    case Topography::Kind::quadratic_constant: return "quadratic_constant";
  }
  return "unknown";
}

}  // namespace ostro
