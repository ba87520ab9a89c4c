#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "ostro/exact.hpp"
#include "ostro/polyexact.hpp"
#include "ostro/verify.hpp"
#include "support.hpp"

using namespace ostro;
using ostro::test::uniform;

namespace {

const PhysParams kUnit(1.0, 1.0);

std::vector<SpeedProfile> catalog_speeds() {
  return {SpeedProfile::zero(), SpeedProfile::constant(2.0), SpeedProfile::linear(1.0, 1.0),
          SpeedProfile::sinusoid(0.3, 0.7, 1.9, 0.4)};
}

std::vector<ExactSolution> galilean_samples(const SpeedProfile& c) {
  const TimeProfile h0 = TimeProfile::sinusoid(0.1, 0.3, 1.0, 0.2);
  return {cubic_solution(cubic_family_1(8.0 / 9.0, 0.3, -0.2, 0.1, 6.0, Branch::plus), {1.0, 6.0}, c, h0),
          cubic_solution(cubic_family_2(12.0, 0.0, 0.0, 6.0), {1.0, 6.0}, c, h0),
          cubic_solution(cubic_family_3(1.0, 0.0, 0.0, 2.0), {1.0, 2.0}, c, h0),
          rational_wave(1.0, kUnit, c, h0),
          solitary_wave(1.0, kUnit, c, h0),
          oscillatory_wave(0.2, 1.0, 0.3, kUnit, c, h0)};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("family 1") {
  const auto k = cubic_family_1(8.0 / 9.0, 0.0, 0.0, 0.0, 6.0, Branch::plus);
  CHECK(k.c3 == doctest::Approx(4.0 / 9.0));
  CHECK(k.c2 == 0.0);
  CHECK(k.c1 == 0.0);
  CHECK(k.c0 == 0.0);
  CHECK(kind_of([] { cubic_family_1(-1.0, 0.0, 0.0, 0.0, 1.0, Branch::plus); }) == ErrorKind::NegativeDiscriminant);
  const auto z = cubic_family_1(0.0, 0.0, 0.0, 0.0, 1.0, Branch::minus);
  CHECK(z.c3 == 0.0);
  CHECK(z.profile().is_zero());
  CHECK(z.forcing().is_zero());
  // a3 = 0 on the plus branch lands on c3 = beta/18
  CHECK(kind_of([] { cubic_family_1(0.0, 1.0, 0.0, 0.0, 1.0, Branch::plus); }) == ErrorKind::DegenerateDenominator);
}

TEST_CASE("family 2") {
  const auto k = cubic_family_2(12.0, 0.0, 0.0, 6.0);
  CHECK(k.c3 == doctest::Approx(1.0));
  CHECK(k.c2 == doctest::Approx(1.0));
  CHECK(k.c1 == 0.0);
  CHECK(k.a3 == doctest::Approx(12.0));
  CHECK(k.a1 == doctest::Approx(4.0));
  CHECK(kind_of([] { cubic_family_2(0.0, 1.0, 1.0, 1.0); }) == ErrorKind::ZeroCoefficient);
  const double beta = 1.7, c0 = -0.6;
  CHECK(cubic_family_2(2 * beta * beta, -c0 * beta, c0, beta).c1 == doctest::Approx(0.0));
}

TEST_CASE("family 3") {
  const auto k = cubic_family_3(1.0, 0.0, 0.0, 2.0);
  CHECK(k.c3 == doctest::Approx(1.0 / 9.0));
  CHECK(k.c1 == doctest::Approx(3.0));
  CHECK(k.c0 == doctest::Approx(3.0));
  CHECK(k.forcing().is_zero());
  const auto m = cubic_family_3(0.0, 0.0, 0.0, 18.0);
  CHECK(m.profile() == Polynomial<double>({0.0, 0.0, 0.0, 1.0}));
  const auto n = cubic_family_3(0.0, 0.0, 0.0, -3.0);
  CHECK(n.c1 == 0.0);
  CHECK(n.c0 == 0.0);
}

TEST_CASE("floating cubic coefficients satisfy the reduction") {
  const std::vector<std::pair<CubicCoeffs<double>, double>> cases = {
      {cubic_family_1(0.5, 0.3, -0.2, 0.7, 1.5, Branch::minus), 1.5},
      {cubic_family_2(-0.8, 0.4, 1.1, -2.0), -2.0},
      {cubic_family_3(0.6, -0.3, 0.2, 0.9), 0.9}};
  for (const auto& [k, beta] : cases) {
    const auto r = reduction_residual_poly(k.profile(), k.forcing(), 1.0, beta);
    for (double c : r.coefficients()) CHECK(std::abs(c) <= 1e-10);
  }
}

TEST_CASE("rational wave") {
  const auto s = rational_wave(1.0, kUnit, SpeedProfile::zero());
  // Profile 24 alpha zeta/(c0 + zeta^2) gives a positive peak; see README.
  CHECK(s.u(0.0, 0.0) == doctest::Approx(24.0));
  CHECK(std::abs(s.u(1.0, 0.3)) < 1e-14);
  CHECK(std::abs(s.u(-1.0, 0.3)) < 1e-14);
  CHECK(std::abs(s.u(100.0, 0.0)) < 3e-3);
  CHECK(kind_of([] { rational_wave(-1.0, kUnit, SpeedProfile::zero()); }) == ErrorKind::NonPositiveParameter);
  CHECK(kind_of([] { rational_wave(0.0, kUnit, SpeedProfile::zero()); }) == ErrorKind::NonPositiveParameter);
  // tabulated forcing agrees with the synthesized one
  const PhysParams p(0.7, -1.3);
  const Profile V = Profile::rational(2.0, 24.0 * p.alpha, 0.0, 0.0);
  const Profile a = rational_forcing(2.0, p), b = forcing_from_profile(V, p.alpha, p.beta);
  for (int i = 0; i < 50; ++i) {
    const double z = uniform(-10, 10);
    CHECK(a(z) == doctest::Approx(b(z)).epsilon(1e-12));
  }
}

TEST_CASE("solitary wave") {
  CHECK(solitary_wave(1.0, kUnit, SpeedProfile::zero()).u(0.0, 0.0) == doctest::Approx(12.0));
  CHECK(solitary_wave(2.0, PhysParams(0.5, 1.0), SpeedProfile::zero()).u(0.0, 0.0) == doctest::Approx(24.0));
  CHECK(kind_of([] { solitary_wave(0.0, kUnit, SpeedProfile::zero()); }) == ErrorKind::NonPositiveParameter);
  // beta + 8 k^4 alpha = 0 leaves a pure tanh^3 forcing
  const PhysParams p(1.0, -8.0);
  const Profile h = solitary_forcing(1.0, p);
  for (double z : {-2.0, -0.4, 0.3, 1.7}) CHECK(h(z) == doctest::Approx(96.0 * std::pow(std::tanh(z), 3)));
  const PhysParams r(0.6, 1.4);
  const Profile syn = forcing_from_profile(Profile::tanh(0.9, 12.0 * r.alpha * 0.9, 0.0, 0.0), r.alpha, r.beta);
  const Profile tab = solitary_forcing(0.9, r);
  for (int i = 0; i < 50; ++i) {
    const double z = uniform(-8, 8);
    CHECK(tab(z) == doctest::Approx(syn(z)).epsilon(1e-12));
  }
}

TEST_CASE("oscillatory wave") {
  const auto s = oscillatory_wave(0.0, 1.0, 0.0, kUnit, SpeedProfile::zero());
  for (double x : {-1.3, 0.0, 0.4, 2.9}) {
    CHECK(s.u(x, 0.7) == doctest::Approx(-std::sin(x)));
    CHECK(s.topo(x, 0.7) == doctest::Approx(0.5 * std::sin(2 * x)));
    // hand substitution: (u u_x + u_xxx)_x = cos 2x - sin x = beta u + h_x
    const double lhs = std::cos(2 * x) - std::sin(x);
    const double rhs = s.u(x, 0.0) + s.topo.eval(x, 0.0).h_x;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
  const auto w = oscillatory_wave(0.0, 1.0, 0.0, PhysParams(16.0, 1.0), SpeedProfile::zero());
  bool found = false;
  for (const auto& [k, v] : w.coefficients) {
    if (k == "omega") {
      CHECK(v == doctest::Approx(0.5));
      found = true;
    }
  }
  CHECK(found);
  // forcing oscillates at twice the wave frequency
  const Profile h = *s.forcing;
  for (double z : {0.1, 0.9, 2.0}) {
    CHECK(h(z + std::numbers::pi) == doctest::Approx(h(z)).epsilon(1e-12));
    CHECK(std::abs(h(z + std::numbers::pi / 2) + h(z)) < 1e-12);
  }
  CHECK(kind_of([] { oscillatory_wave(0.0, 1.0, 0.0, PhysParams(1.0, -1.0), SpeedProfile::zero()); }) ==
        ErrorKind::SignMismatch);
  CHECK(kind_of([] { oscillatory_wave(0.0, 0.0, 0.0, kUnit, SpeedProfile::zero()); }) == ErrorKind::ZeroCoefficient);
}

TEST_CASE("frame-shift solution") {
  const auto z = frame_shift_solution(
      Topography::quadratic(TimeProfile::zero(), TimeProfile::zero(), TimeProfile::sinusoid(0.3, 1.0, 2.0, 0.0), true),
      kUnit);
  for (double x : {-3.0, 0.5, 4.0}) CHECK(z.u(x, 0.8) == 0.0);

  const auto a = frame_shift_solution(
      Topography::quadratic(TimeProfile::constant(1.0), TimeProfile::zero(), TimeProfile::zero()), PhysParams(1.0, 2.0));
  for (double x : {-3.0, 0.5, 4.0}) CHECK(a.u(x, 1.1) == doctest::Approx(-x + 0.5));

  const auto b = frame_shift_solution(
      Topography::quadratic(TimeProfile::linear(0.0, 1.0), TimeProfile::zero(), TimeProfile::zero()), kUnit);
  for (double x : {-3.0, 0.5, 4.0}) {
    for (double t : {0.2, 1.0}) CHECK(b.u(x, t) == doctest::Approx(-2 * t * x - (2.0 - 4 * t * t)));
  }
  // sampled differences are exact on quadratics, so only round-off remains
  const Grid1D g(-4.0, 4.0, 81, false);
  const double dt = 1e-2;
  std::vector<SampledField> levels;
  for (int k = -2; k <= 2; ++k) levels.push_back(sample(b.u, g, 0.7 + k * dt));
  CHECK(residual_u(levels, dt, forcing_of(b.topo), b.params, EvalMode::fd).max_abs <= 1e-8);
}

TEST_CASE("travelling cubic") {
  const auto s = cubic_tw_solution(0.0, 0.0, TimeProfile::zero(), TimeProfile::zero(), PhysParams(1.0, 6.0));
  for (double x : {-2.0, 0.3, 1.5}) {
    CHECK(s.u(x, 0.0) == doctest::Approx(x * x));
    CHECK(s.u(x, 1.0) == doctest::Approx(x * x));
  }
  const auto m = cubic_tw_solution(2.0, 0.0, TimeProfile::zero(), TimeProfile::zero(), kUnit);
  for (double x : {-2.0, 0.3, 1.5}) {
    const double z = x - 2 * 0.6;
    CHECK(m.u(x, 0.6) == doctest::Approx(2.0 + z * z / 6.0 - 3.0));
  }
  const double beta = 1.5, sc = 0.4;
  const auto c = cubic_tw_solution(1.0, 0.2, TimeProfile::constant(beta * sc), TimeProfile::zero(), {1.0, beta});
  CHECK(c.speed(0.3) == doctest::Approx(1.0 - sc));
}

TEST_CASE("forcing synthesis") {
  const Profile zero = forcing_from_profile(Profile::zero(), 1.3, 0.7);
  for (double z : {-1.0, 0.0, 2.0}) CHECK(zero(z) == 0.0);
  for (double alpha : {1.0, 0.4}) {
    const double beta = 1.1;
    const Profile h = forcing_from_profile(Profile::tanh(1.0, 12.0 * alpha, 0.0, 0.0), alpha, beta);
    for (double z : {-1.5, 0.2, 0.9}) {
      const double s2 = 1.0 / (std::cosh(z) * std::cosh(z));
      CHECK(h(z) == doctest::Approx(-12 * alpha * (beta + 8 * alpha * s2) * std::tanh(z)));
    }
  }
  const Profile c = forcing_from_profile(Profile::sinusoid(0.0, 1.0, 0.0, 1.0, 0.0), 1.0, 1.0);
  for (double z : {-1.5, 0.2, 0.9}) CHECK(c(z) == doctest::Approx(0.5 * std::sin(2 * z)));
}

TEST_CASE("potential assembly") {
  const auto v0 = potential_of(Profile::zero(), SpeedProfile::zero(), TimeProfile::zero(), 1.0);
  CHECK(v0(1.3, 0.4) == 0.0);
  const auto v1 = potential_of(Profile::polynomial({0.0, 0.0, 0.0, 1.0}), SpeedProfile::constant(1.0),
                               TimeProfile::zero(), 1.0);
  for (double x : {-1.0, 0.5, 2.0}) {
    const double z = x - 0.7;
    CHECK(v1(x, 0.7) == doctest::Approx(z * z * z + z));
  }
  // the gauge term closes the potential equation; see README
  const auto q = Topography::quadratic(TimeProfile::constant(1.0), TimeProfile::zero(), TimeProfile::zero());
  const auto v2 = potential_of(std::get<topographies::QuadraticInX>(q.variant()), 1.0);
  for (double x : {-1.0, 0.5, 2.0}) CHECK(v2(x, 0.3) == doctest::Approx(-x * x + 4 * x - 8));
}

TEST_CASE("u is the x-derivative of v") {
  std::vector<ExactSolution> all;
  for (const auto& c : catalog_speeds())
    for (auto& s : galilean_samples(c)) all.push_back(s);
  all.push_back(frame_shift_solution(Topography::quadratic(TimeProfile::sinusoid(0.5, 0.2, 1.0, 0.0),
                                                           TimeProfile::linear(0.1, 0.3), TimeProfile::constant(0.2)),
                                     PhysParams(1.0, 2.0)));
  all.push_back(cubic_tw_solution(1.0, 0.5, TimeProfile::linear(0.2, 0.1), TimeProfile::zero(), PhysParams(1.0, 2.0)));
  for (const auto& s : all) {
    for (int i = 0; i < 100; ++i) {
      const double x = uniform(-5, 5), t = uniform(0, 1);
      const double u = s.u(x, t);
      CHECK(std::abs(s.v.partials(x, t).dx[1] - u) <= 1e-10 * (1 + std::abs(u)));
    }
  }
}

TEST_CASE("changing the speed profile only boosts and shifts") {
  const auto c1 = SpeedProfile::linear(1.0, 1.0);
  const auto c2 = SpeedProfile::sinusoid(0.3, 0.7, 1.9, 0.4);
  const auto a = galilean_samples(c1), b = galilean_samples(c2);
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (int i = 0; i < 50; ++i) {
      const double x = uniform(-5, 5), t = uniform(0, 1);
      const double lhs = b[j].u(x + c2.primitive(t) - c1.primitive(t), t) - a[j].u(x, t);
      CHECK(std::abs(lhs - (c2(t) - c1(t))) <= 1e-10 * (1 + std::abs(a[j].u(x, t))));
    }
  }
}

TEST_CASE("static limit") {
  for (const auto& s : galilean_samples(SpeedProfile::zero())) {
    for (int i = 0; i < 50; ++i) {
      const double x = uniform(-5, 5), t = uniform(0, 1);
      CHECK(std::abs(s.u.partials(x, t).dt) <= 1e-12);
    }
  }
}

TEST_CASE("synthesized forcing closes the reduction") {
  const Grid1D g(-10.0, 10.0, 401, false);
  for (const auto& s : galilean_samples(SpeedProfile::zero())) {
    const auto r = residual_reduction(*s.profile, *s.forcing, s.params, ReductionVariant::x1(), g);
    CHECK(r.rel_max <= 1e-12);
  }
}

TEST_CASE("catalog") {
  const auto& c = catalog();
  CHECK(c.size() == 8);
  std::set<std::string> names;
  for (const auto& e : c) {
    names.insert(e.name);
    CHECK(family_from_string(e.name) == e.family);
    CHECK(to_string(e.family) == e.name);
    CHECK_FALSE(e.signature.empty());
  }
  CHECK(names.size() == 8);
  CHECK_THROWS_AS(family_from_string("kdv"), Error);
}
