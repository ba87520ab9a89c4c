#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "ostro/error.hpp"
#include "ostro/exact.hpp"
#include "ostro/ode.hpp"
#include "ostro/pde.hpp"
#include "ostro/verify.hpp"

using namespace ostro;

namespace {

constexpr double kPi = std::numbers::pi;
const PhysParams kUnit(1.0, 1.0);

ErrorKind kind_of(const std::function<void()>& f, std::string* message = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (message != nullptr) *message = e.what();
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

Eigen::Vector4d jet_of(const Profile& V, double z) {
  const auto d = V.derivatives(z);
  return {d[0], d[1], d[2], d[3]};
}

SampledField sine(const Grid1D& g, double amplitude, int mode) {
  Eigen::VectorXd v(g.n());
  for (int i = 0; i < g.n(); ++i) v[i] = amplitude * std::sin(mode * g.x(i));
  return {g, 0.0, v};
}

}  // namespace

TEST_CASE("zero trajectory") {
  const auto tr = ode_integrate(OdeVariant::case2(1.0), kUnit, {}, 0.1, 2.0);
  CHECK(tr.status == OdeTrajectory::Status::ok);
  CHECK(tr.states.size() == 21);
  for (const auto& s : tr.states) CHECK(s.y.isZero());
  CHECK(tr.states.back().zeta == doctest::Approx(2.0));
}

TEST_CASE("reduction ODE reproduces the cubic profile") {
  const auto k = cubic_family_2(12.0, 0.0, 0.0, 6.0);
  const PhysParams p(1.0, 6.0);
  const Profile V = Profile::polynomial(k.profile());
  const Profile h1 = Profile::polynomial(k.forcing());
  for (auto method : {OdeMethod::rk4, OdeMethod::rk45}) {
    const auto tr = ode_integrate(OdeVariant::x1(h1), p, {-1.0, jet_of(V, -1.0)}, 1e-3, 2.0, method);
    REQUIRE(tr.status == OdeTrajectory::Status::ok);
    double err = 0.0;
    for (const auto& s : tr.states) err = std::max(err, (s.y - jet_of(V, s.zeta)).cwiseAbs().maxCoeff());
    CHECK(err <= 1e-8);
  }
}

TEST_CASE("right-hand side of the system") {
  // alpha V'''' = h1 + beta V - V'V''
  const Eigen::Vector4d y(1.0, 2.0, 3.0, 4.0);
  const auto r = reduction_rhs(OdeVariant::case2(0.5), PhysParams(2.0, 3.0), 0.0, y);
  CHECK(r[0] == 2.0);
  CHECK(r[1] == 3.0);
  CHECK(r[2] == 4.0);
  CHECK(r[3] == doctest::Approx((3.0 - 1.5 * 3.0) / 2.0));
}

TEST_CASE("fixed and adaptive steppers agree") {
  const Eigen::Vector4d y0(0.1, 0.0, 0.05, 0.0);
  const auto a = ode_integrate(OdeVariant::case2(2.0), kUnit, {0.0, y0}, 1e-3, 5.0, OdeMethod::rk4);
  const auto b = ode_integrate(OdeVariant::case2(2.0), kUnit, {0.0, y0}, 1e-3, 5.0, OdeMethod::rk45, 1e-11);
  REQUIRE(a.states.size() == b.states.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.states.size(); ++i) d = std::max(d, (a.states[i].y - b.states[i].y).cwiseAbs().maxCoeff());
  CHECK(d <= 1e-7);
  CHECK(to_string(OdeMethod::rk45) == "rk45");
}

TEST_CASE("ODE failure modes") {
  const Eigen::Vector4d y0(0.1, 0.2, 0.05, 0.0);
  CHECK(kind_of([&] {
          ode_integrate(OdeVariant::case2(1.0), kUnit, {0.0, y0}, 0.1, 1.0, OdeMethod::rk45, 1e-30);
        }) == ErrorKind::StepUnderflow);
  CHECK(kind_of([&] { ode_integrate(OdeVariant::case2(1.0), kUnit, {0.0, y0}, 0.0, 1.0); }) ==
        ErrorKind::InvalidArgument);
  // large data blows up; the run stops with the partial trajectory
  const auto tr = ode_integrate(OdeVariant::case2(0.0), kUnit, {0.0, Eigen::Vector4d(10, 10, 10, 10)}, 0.1, 100.0);
  CHECK(tr.status == OdeTrajectory::Status::non_finite);
  CHECK(tr.states.size() < 1001);
  CHECK(tr.message.find("non-finite") != std::string::npos);
  for (const auto& s : tr.states) CHECK(s.y.allFinite());
}

TEST_CASE("stability bound") {
  const Grid1D g(0.0, 2 * kPi, 128, true);
  CHECK(stability_bound(g, 1.0) == doctest::Approx(2.8 / (64.0 * 64.0 * 64.0)));
  CHECK(stability_bound(g, -2.0) == doctest::Approx(1.4 / (64.0 * 64.0 * 64.0)));
}

TEST_CASE("zero stays zero") {
  const Grid1D g(0.0, 2 * kPi, 32, true);
  const auto run = pde_integrate({g, 0.0, Eigen::VectorXd::Zero(32)}, Topography::none(), kUnit,
                                 {5e-4, 0.1, 20, PdeStepper::rk4});
  CHECK(run.times.size() == 11);
  CHECK(run.times.back() == doctest::Approx(0.1));
  for (const auto& u : run.history) CHECK(u.isZero());
}

TEST_CASE("a static wave is a steady state") {
  const auto s = oscillatory_wave(0.0, 1.0, 0.0, kUnit, SpeedProfile::zero());
  const Grid1D g(0.0, 2 * kPi, 64, true);
  const auto u0 = sample(s.u, g, 0.0);
  for (auto stepper : {PdeStepper::rk4, PdeStepper::if_rk4}) {
    const double dt = stepper == PdeStepper::rk4 ? 5e-5 : 1e-2;
    const auto run = pde_integrate(u0, s.topo, kUnit, {dt, 0.2, 100, stepper});
    CHECK((run.history.back() - u0.values).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("unforced runs keep their invariants") {
  const Grid1D g(0.0, 2 * kPi, 64, true);
  const auto run = pde_integrate(sine(g, 0.5, 1), Topography::none(), kUnit, {1e-3, 0.5, 50, PdeStepper::if_rk4});
  CHECK(run.energy_valid);
  CHECK(drift(run.momentum) <= 1e-8);
  CHECK(drift(run.energy) <= 1e-8);
  for (double m : run.mean) CHECK(std::abs(m) <= 1e-14);
  for (double m : run.mass) CHECK(std::abs(m) <= 1e-13);
  // forced runs do not monitor energy
  const auto s = oscillatory_wave(0.0, 1.0, 0.0, kUnit, SpeedProfile::zero());
  const auto forced = pde_integrate(sine(g, 0.5, 1), s.topo, kUnit, {1e-3, 0.01, 1, PdeStepper::if_rk4});
  CHECK_FALSE(forced.energy_valid);
}

TEST_CASE("both steppers approximate the same flow") {
  const Grid1D g(0.0, 2 * kPi, 32, true);
  const double dt = 0.2 / std::ceil(0.2 / stability_bound(g, 1.0));
  const auto a = pde_integrate(sine(g, 0.3, 2), Topography::none(), kUnit, {dt, 0.2, 1000000, PdeStepper::rk4});
  const auto b = pde_integrate(sine(g, 0.3, 2), Topography::none(), kUnit, {1e-4, 0.2, 1000000, PdeStepper::if_rk4});
  CHECK(a.times.back() == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(b.times.back() == doctest::Approx(0.2).epsilon(1e-12));
  CHECK((a.history.back() - b.history.back()).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("PDE preconditions") {
  const Grid1D g(0.0, 2 * kPi, 64, true);
  std::string message;
  CHECK(kind_of([&] { pde_integrate(sine(g, 0.1, 1), Topography::none(), kUnit, {1e-2, 0.1, 1, PdeStepper::rk4}); },
                &message) == ErrorKind::StabilityViolation);
  CHECK(message.find("bound") != std::string::npos);
  const Grid1D b(0.0, 2 * kPi, 64, false);
  CHECK(kind_of([&] { pde_integrate(sine(b, 0.1, 1), Topography::none(), kUnit, {1e-5, 0.1, 1}); }) ==
        ErrorKind::NotPeriodic);
  CHECK(kind_of([&] {
          pde_integrate({g, 0.0, (sine(g, 0.1, 1).values.array() + 1.0).matrix()}, Topography::none(), kUnit,
                        {1e-5, 0.1, 1});
        }) == ErrorKind::NonZeroMean);
  // a solitary forcing is not periodic on this window
  const auto s = solitary_wave(1.0, kUnit, SpeedProfile::zero());
  CHECK(kind_of([&] { pde_integrate(sine(g, 0.1, 1), s.topo, kUnit, {1e-5, 0.1, 1}); }) == ErrorKind::NotPeriodic);
  CHECK(kind_of([&] { pde_integrate(sine(g, 0.1, 1), Topography::none(), kUnit, {1e-5, 0.1, 0}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(to_string(PdeStepper::if_rk4) == "if_rk4");
}
