#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ostro/exact.hpp"
#include "ostro/field.hpp"
#include "ostro/params.hpp"
#include "ostro/symmetry.hpp"
#include "ostro/topography.hpp"
#include "support.hpp"

using namespace ostro;
using ostro::test::central_diff;
using ostro::test::central_diff4;
using ostro::test::uniform;

namespace {

std::vector<SpeedProfile> catalog_speeds() {
  return {SpeedProfile::zero(), SpeedProfile::constant(2.0), SpeedProfile::linear(1.0, 1.0),
          SpeedProfile::sinusoid(0.3, 0.7, 1.9, 0.4)};
}

void check_partials(const ClosedFormField& f, double xlo, double xhi, double tlo, double thi) {
  for (int i = 0; i < 100; ++i) {
    const double x = uniform(xlo, xhi), t = uniform(tlo, thi);
    const auto p = f.partials(x, t);
    for (int k = 0; k < FieldPartials::kMaxX; ++k) {
      const double fd = central_diff4([&](double s) { return f.partials(s, t).dx[k]; }, x);
      CHECK(std::abs(fd - p.dx[k + 1]) <= 1e-6 * (1.0 + std::abs(p.dx[k + 1])));
    }
    const double dt = central_diff4([&](double s) { return f.partials(x, s).dx[0]; }, t);
    CHECK(std::abs(dt - p.dt) <= 1e-6 * (1.0 + std::abs(p.dt)));
    const double dtx = central_diff4([&](double s) { return f.partials(x, s).dx[1]; }, t);
    CHECK(std::abs(dtx - p.dtx) <= 1e-6 * (1.0 + std::abs(p.dtx)));
  }
}

}  // namespace

TEST_CASE("physical parameters reject zero coefficients") {
  CHECK_NOTHROW(PhysParams(1.0, -2.0));
  CHECK_THROWS_AS(PhysParams(0.0, 1.0), Error);
  try {
    PhysParams(1.0, 0.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("moving coordinate") {
  CHECK(chi(SpeedProfile::zero(), 3.0, 7.0) == 3.0);
  CHECK(chi(SpeedProfile::constant(2.0), 5.0, 2.0) == doctest::Approx(1.0).epsilon(1e-15));

  // C(t) for c = 1 + t, taken from independent quadrature of c.
  const SpeedProfile lin = SpeedProfile::linear(1.0, 1.0);
  const double C = ostro::test::simpson_rule([&](double s) { return lin(s); }, 0.0, 2.0);
  CHECK(std::abs(C - 4.0) < 1e-12);
  CHECK(std::abs(chi(lin, 0.0, 2.0) - (-C)) < 1e-12);
  CHECK(chi(lin, 0.0, 2.0) == doctest::Approx(-4.0).epsilon(1e-15));
}

TEST_CASE("moving coordinate has unit slope in x") {
  // Dyadic inputs keep every operation exact.
  const SpeedProfile c = SpeedProfile::constant(0.5);
  for (double x : {-3.0, -0.125, 0.0, 1.5, 7.25}) {
    for (double d : {0.25, 1.0, -2.5}) CHECK(chi(c, x + d, 1.5) - chi(c, x, 1.5) == d);
  }
  for (const auto& p : catalog_speeds()) {
    for (int i = 0; i < 20; ++i) {
      const double x = uniform(-5, 5), d = uniform(-1, 1), t = uniform(-3, 3);
      CHECK(std::abs((chi(p, x + d, t) - chi(p, x, t)) - d) < 1e-13);
    }
  }
}

TEST_CASE("speed profiles: stored primitive and derivatives agree with differences") {
  for (const auto& p : catalog_speeds()) {
    CHECK(p.primitive(0.0) == 0.0);
    for (int i = 0; i < 100; ++i) {
      const double t = uniform(-5, 5);
      const double c = p(t), c1 = p.derivative(t, 1), c2 = p.derivative(t, 2);
      CHECK(std::abs(central_diff([&](double s) { return p.primitive(s); }, t) - c) <= 1e-6 * (1 + std::abs(c)));
      CHECK(std::abs(central_diff([&](double s) { return p(s); }, t) - c1) <= 1e-6 * (1 + std::abs(c1)));
      CHECK(std::abs(central_diff([&](double s) { return p.derivative(s, 1); }, t) - c2) <=
            1e-6 * (1 + std::abs(c2)));
    }
  }
}

TEST_CASE("topography evaluation") {
  SUBCASE("quadratic monomial") {
    const auto topo = Topography::quadratic(TimeProfile::constant(1.0), TimeProfile::zero(), TimeProfile::zero());
    const auto v = topo_eval(topo, 2.0, 0.0);
    CHECK(v.h == doctest::Approx(4.0));
    CHECK(v.h_x == doctest::Approx(4.0));
    CHECK(v.h_t == 0.0);
    CHECK(v.H == doctest::Approx(8.0 / 3.0));
  }
  SUBCASE("static linear profile") {
    const auto topo = Topography::galilean(Profile::polynomial({0.0, 1.0}), SpeedProfile::zero(),
                                           TimeProfile::zero(), 1.0);
    const auto v = topo_eval(topo, 1.0, 5.0);
    CHECK(v.h == doctest::Approx(1.0));
    CHECK(v.h_x == doctest::Approx(1.0));
    CHECK(v.h_t == doctest::Approx(0.0));
    CHECK(v.H == doctest::Approx(0.5));
  }
  SUBCASE("moving quadratic profile") {
    // chi = x - t = 1, so h = chi^2 - beta c chi = 0
    const auto topo = Topography::galilean(Profile::polynomial({0.0, 0.0, 1.0}), SpeedProfile::constant(1.0),
                                           TimeProfile::zero(), 1.0);
    CHECK(std::abs(topo_eval(topo, 2.0, 1.0).h) < 1e-15);
  }
}

TEST_CASE("topography closed forms agree with differences") {
  const double beta = 1.3;
  std::vector<Topography> topos = {
      Topography::galilean(Profile::polynomial({0.2, -1.0, 0.5, 0.3}), SpeedProfile::sinusoid(0.3, 0.7, 1.9, 0.4),
                           TimeProfile::linear(0.1, 0.2), beta),
      Topography::galilean(Profile::rational(1.5, 2.0, -1.0, 0.7), SpeedProfile::linear(1.0, 1.0),
                           TimeProfile::zero(), beta),
      Topography::galilean(Profile::tanh(0.8, 1.0, 0.3, -0.4), SpeedProfile::constant(2.0),
                           TimeProfile::sinusoid(0.0, 0.5, 1.0, 0.0), beta),
      Topography::galilean(Profile::sinusoid(0.1, 0.5, -0.3, 1.7, 0.2), SpeedProfile::zero(),
                           TimeProfile::constant(0.4), beta),
      Topography::quadratic(TimeProfile::sinusoid(0.2, 0.3, 1.1, 0.0), TimeProfile::linear(0.5, -0.2),
                            TimeProfile::constant(1.0)),
      Topography::quadratic_constant(0.7, TimeProfile::sinusoid(0.0, 1.0, 2.0, 0.3), TimeProfile::linear(0.0, 1.0)),
  };
  for (const auto& topo : topos) {
    for (int i = 0; i < 100; ++i) {
      const double x = uniform(-5, 5), t = uniform(-2, 2);
      const auto v = topo.eval(x, t);
      CHECK(std::abs(central_diff([&](double s) { return topo.eval(s, t).H; }, x) - v.h) <= 1e-6 * (1 + std::abs(v.h)));
      CHECK(std::abs(central_diff([&](double s) { return topo(s, t); }, x) - v.h_x) <= 1e-6 * (1 + std::abs(v.h_x)));
      CHECK(std::abs(central_diff([&](double s) { return topo(x, s); }, t) - v.h_t) <= 1e-6 * (1 + std::abs(v.h_t)));
    }
    CHECK(topo.eval(0.0, 0.7).H == doctest::Approx(0.0));
  }
}

TEST_CASE("unforced topographies need the explicit flag") {
  CHECK_THROWS_AS(Topography::galilean(Profile::zero(), SpeedProfile::zero(), TimeProfile::constant(1.0), 1.0),
                  Error);
  CHECK_THROWS_AS(Topography::quadratic(TimeProfile::zero(), TimeProfile::zero(), TimeProfile::linear(0.0, 1.0)),
                  Error);
  const auto t = Topography::quadratic(TimeProfile::zero(), TimeProfile::zero(), TimeProfile::zero(), true);
  CHECK(t.unforced());
  CHECK(Topography::none().unforced());
  // a moving frame alone forces through -beta c chi
  CHECK_NOTHROW(Topography::galilean(Profile::zero(), SpeedProfile::constant(1.0), TimeProfile::zero(), 1.0));
}

TEST_CASE("grids") {
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 4, false), Error);
  CHECK_THROWS_AS(Grid1D(1.0, 1.0, 16, false), Error);
  const Grid1D p(0.0, 2 * std::numbers::pi, 64, true);
  CHECK(p.dx() == doctest::Approx(2 * std::numbers::pi / 64));
  CHECK(p.x(p.n() - 1) < p.b());
  const Grid1D q(-1.0, 1.0, 21, false);
  CHECK(q.dx() == doctest::Approx(0.1));
  CHECK(q.x(20) == doctest::Approx(1.0));
  CHECK(q.points().size() == 21);
}

TEST_CASE("sampled fields validate their contents") {
  const Grid1D g(0.0, 1.0, 11, false);
  CHECK_THROWS_AS(SampledField(g, 0.0, Eigen::VectorXd::Zero(10)), Error);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(11);
  v[3] = std::nan("");
  try {
    SampledField(g, 0.0, v);
    FAIL("expected NonFiniteState");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFiniteState);
  }
  const auto s = sample(ClosedFormField([](double x, double) {
                          FieldPartials p;
                          p.dx[0] = x * x;
                          p.dx[1] = 2 * x;
                          return p;
                        }),
                        g, 0.0);
  CHECK(s.values[10] == doctest::Approx(1.0));
  CHECK(s.max_abs() == doctest::Approx(1.0));
}

TEST_CASE("closed-form partials agree with differences") {
  const PhysParams p(1.0, 1.0);
  const auto speed = SpeedProfile::sinusoid(0.3, 0.7, 1.9, 0.4);
  check_partials(solitary_wave(0.8, p, speed).u, -5, 5, -1, 1);
  check_partials(solitary_wave(0.8, p, speed).v, -5, 5, -1, 1);
  check_partials(rational_wave(1.5, p, SpeedProfile::linear(1.0, 1.0)).u, -5, 5, -1, 1);
  check_partials(oscillatory_wave(0.2, 1.0, 0.3, p, speed).v, -5, 5, -1, 1);
  const auto fs = frame_shift_solution(
      Topography::quadratic(TimeProfile::sinusoid(0.5, 0.2, 1.0, 0.0), TimeProfile::linear(0.1, 0.3),
                            TimeProfile::constant(0.2)),
      PhysParams(1.0, 2.0));
  check_partials(fs.u, -5, 5, -1, 1);
  check_partials(fs.v, -5, 5, -1, 1);
  const auto tw = cubic_tw_solution(1.0, 0.5, TimeProfile::sinusoid(0.0, 0.5, 1.0, 0.0), TimeProfile::constant(0.1),
                                    PhysParams(1.0, 2.0));
  check_partials(tw.u, -5, 5, -1, 1);
  check_partials(tw.v, -5, 5, -1, 1);
}

TEST_CASE("symmetry flows") {
  const PhysParams p(1.0, 1.0);
  const auto u = solitary_wave(1.0, p, SpeedProfile::linear(0.5, 0.2)).u;

  SUBCASE("X2 without h2 is a translation") {
    const auto g = SymmetryGenerator::x2(TimeProfile::zero(), 1.0);
    const auto ut = g.apply(1.0, u);
    for (int i = 0; i < 20; ++i) {
      const double x = uniform(-5, 5), t = uniform(0, 2);
      CHECK(ut(x, t) == doctest::Approx(u(x - 1.0, t)).epsilon(1e-14));
    }
    const auto m = g.map(0.7, 1.0, 2.0, 3.0);
    CHECK(m.t == 1.0);
    CHECK(m.x == doctest::Approx(2.7));
    CHECK(m.u == 3.0);
  }
  SUBCASE("X1 without speed is a time translation") {
    const auto g = SymmetryGenerator::x1(SpeedProfile::zero());
    const auto ut = g.apply(1.0, u);
    for (int i = 0; i < 20; ++i) {
      const double x = uniform(-5, 5), t = uniform(0, 2);
      CHECK(ut(x, t) == doctest::Approx(u(x, t - 1.0)).epsilon(1e-14));
    }
    const auto m = g.map(0.7, 1.0, 2.0, 3.0);
    CHECK(m.t == doctest::Approx(1.7));
    CHECK(m.x == 2.0);
    CHECK(m.u == 3.0);
  }
  SUBCASE("constant boost of the identity field") {
    const ClosedFormField id([](double x, double) {
      FieldPartials f;
      f.dx[0] = x;
      f.dx[1] = 1.0;
      return f;
    });
    const auto ut = SymmetryGenerator::x1(SpeedProfile::constant(2.0)).apply(0.5, id);
    for (double x : {-2.0, 0.0, 3.5}) CHECK(ut(x, 1.3) == doctest::Approx(x - 1.0));
  }
  SUBCASE("zero parameter is the identity") {
    for (const auto& g : {SymmetryGenerator::x1(SpeedProfile::sinusoid(0.3, 0.7, 1.9, 0.4)),
                          SymmetryGenerator::x2(TimeProfile::constant(0.3), 1.0)}) {
      const auto ut = g.apply(0.0, u);
      for (int i = 0; i < 20; ++i) {
        const double x = uniform(-5, 5), t = uniform(0, 2);
        CHECK(ut(x, t) == u(x, t));
        const auto a = ut.partials(x, t), b = u.partials(x, t);
        CHECK(a.dt == b.dt);
        CHECK(a.dtx == b.dtx);
      }
    }
  }
}

TEST_CASE("symmetry flows compose as a one-parameter group") {
  const auto u = rational_wave(1.0, PhysParams(1.0, 1.0), SpeedProfile::constant(0.5)).u;
  std::vector<SymmetryGenerator> gens = {SymmetryGenerator::x2(TimeProfile::constant(0.3), 1.0),
                                         SymmetryGenerator::x2(TimeProfile::sinusoid(0.1, 0.2, 1.0, 0.0), 2.0)};
  for (const auto& s : catalog_speeds()) gens.push_back(SymmetryGenerator::x1(s));
  for (const auto& g : gens) {
    for (int i = 0; i < 50; ++i) {
      const double e1 = uniform(-1, 1), e2 = uniform(-1, 1);
      const double x = uniform(-5, 5), t = uniform(-1, 2);
      const double a = g.apply(e1, g.apply(e2, u))(x, t);
      const double b = g.apply(e1 + e2, u)(x, t);
      CHECK(std::abs(a - b) <= 1e-10);
    }
  }
}
