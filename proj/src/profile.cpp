#include "ostro/profile.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace ostro {

namespace {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Legendre roots by Newton iteration on [-1, 1].
GaussRule make_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss20() {
  static const GaussRule rule = make_gauss_legendre(20);
  return rule;
}

// Composite 20-point Gauss-Legendre on [0, z], panels of width <= 0.25.
template <class F>
double integrate_from_zero(F&& f, double z) {
  if (z == 0.0) return 0.0;
  const auto& rule = gauss20();
  const int panels = static_cast<int>(std::ceil(std::abs(z) / 0.25));
  const double h = z / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    sum += 0.5 * h * s;
  }
  return sum;
}

// log(cosh(x)) without overflow
double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

}  // namespace

Profile Profile::rational(double c0, double a1, double a2, double a3) {
  if (!(c0 > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "rational profile needs c0 > 0");
  return Profile(profiles::RationalTriple{c0, {a1, a2, a3}});
}

Profile Profile::tanh(double k, double a1, double a2, double a3) {
  return Profile(profiles::TanhTriple{k, {a1, a2, a3}});
}

Profile Profile::sinusoid(double offset, double cos_amp, double sin_amp, double freq,
                          double phase) {
  return Profile(profiles::Sinusoid{offset, cos_amp, sin_amp, freq, phase});
}

std::string to_string(Profile::Kind kind) {
  switch (kind) {
    case Profile::Kind::polynomial: return "polynomial";
    case Profile::Kind::rational: return "rational";
    case Profile::Kind::tanh: return "tanh";
    case Profile::Kind::sinusoid: return "sinusoid";
    case Profile::Kind::reduction_forcing: return "reduction_forcing";
  }
  return "unknown";
}

std::string Profile::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&os](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, profiles::Poly>) {
          os << "poly[" << p.p.to_string() << "]";
        } else if constexpr (std::is_same_v<P, profiles::RationalTriple>) {
          os << "rational[c0=" << p.c0 << "; " << p.a[0] << ", " << p.a[1] << ", " << p.a[2]
             << "]";
        } else if constexpr (std::is_same_v<P, profiles::TanhTriple>) {
          os << "tanh[k=" << p.k << "; " << p.a[0] << ", " << p.a[1] << ", " << p.a[2] << "]";
        } else if constexpr (std::is_same_v<P, profiles::Sinusoid>) {
          os << "sinusoid[" << p.offset << " + " << p.cos_amp << " cos + " << p.sin_amp
             << " sin; freq=" << p.freq << ", phase=" << p.phase << "]";
        } else {
          os << "forcing[alpha=" << p.alpha << ", beta=" << p.beta << "; "
             << p.profile->describe() << "]";
        }
      },
      v_);
  return os.str();
}

double Profile::derivative(double z, int k) const {
  if (k < 0 || k > kDerivatives) {
    throw Error(ErrorKind::InvalidArgument, "profile derivative order out of range");
  }
  return jet<kDerivatives>(z).derivative(k);
}

std::array<double, Profile::kDerivatives + 1> Profile::derivatives(double z) const {
  const auto j = jet<kDerivatives>(z);
  std::array<double, kDerivatives + 1> d{};
  for (int k = 0; k <= kDerivatives; ++k) d[static_cast<std::size_t>(k)] = j.derivative(k);
  return d;
}

double Profile::primitive(double z) const {
  return std::visit(
      [z](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, profiles::Poly>) {
          return p.p.integral()(z);
        } else if constexpr (std::is_same_v<P, profiles::RationalTriple>) {
          // int_0^z s/(c0+s^2)^m ds
          const double q = p.c0 + z * z;
          const double i1 = 0.5 * std::log(q / p.c0);
          const double i2 = 0.5 * (1.0 / p.c0 - 1.0 / q);
          const double i3 = 0.25 * (1.0 / (p.c0 * p.c0) - 1.0 / (q * q));
          return p.a[0] * i1 + p.a[1] * i2 + p.a[2] * i3;
        } else if constexpr (std::is_same_v<P, profiles::TanhTriple>) {
          if (p.k == 0.0) return 0.0;
          const double t = std::tanh(p.k * z);
          const double lc = log_cosh(p.k * z) / p.k;
          const double i1 = lc;
          const double i2 = z - t / p.k;
          const double i3 = lc - 0.5 * t * t / p.k;
          return p.a[0] * i1 + p.a[1] * i2 + p.a[2] * i3;
        } else if constexpr (std::is_same_v<P, profiles::Sinusoid>) {
          double r = p.offset * z;
          if (p.freq == 0.0) {
            return r + (p.cos_amp * std::cos(p.phase) + p.sin_amp * std::sin(p.phase)) * z;
          }
          const double arg = p.freq * z + p.phase;
          r += p.cos_amp / p.freq * (std::sin(arg) - std::sin(p.phase));
          r -= p.sin_amp / p.freq * (std::cos(arg) - std::cos(p.phase));
          return r;
        } else {
          // alpha V''' + V'^2/2 - beta int V, taken between 0 and z
          const auto at = p.profile->template jet<3>(z);
          const auto at0 = p.profile->template jet<3>(0.0);
          const double v3 = at.derivative(3) - at0.derivative(3);
          const double v1sq = at.derivative(1) * at.derivative(1) - at0.derivative(1) * at0.derivative(1);
          return p.alpha * v3 + 0.5 * v1sq - p.beta * p.profile->primitive(z);
        }
      },
      v_);
}

double Profile::moment_primitive(double z) const {
  if (const auto* poly = std::get_if<profiles::Poly>(&v_)) {
    return (Polynomial<double>{0.0, 1.0} * poly->p).integral()(z);
  }
  return integrate_from_zero([this](double s) { return s * (*this)(s); }, z);
}

Profile forcing_from_profile(const Profile& V, double alpha, double beta) {
  return Profile(profiles::ReductionForcing{std::make_shared<const Profile>(V), alpha, beta});
}

}  // namespace ostro
