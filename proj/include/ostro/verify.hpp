#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ostro/exact.hpp"
#include "ostro/field.hpp"
#include "ostro/params.hpp"
#include "ostro/symmetry.hpp"
#include "ostro/topography.hpp"

namespace ostro {

enum class EvalMode { analytic, fd, dft };
std::string to_string(EvalMode mode);

struct ResidualReport {
  double max_abs = 0.0;
  /// max_abs / (1 + max |field|)
  double rel_max = 0.0;
  Grid1D grid{0.0, 1.0, Grid1D::kMinPoints, false};
  int margin = 0;
  EvalMode mode = EvalMode::analytic;
};

/// Forcing as a function of (x, t); lets checks run against a moved copy of h.
using ForcingFn = std::function<TopoValues(double x, double t)>;
ForcingFn forcing_of(const Topography& topo);

// --- PDE residuals -------------------------------------------------------

/// (u_t + u u_x + alpha u_xxx)_x - beta u - h_x from analytic partials.
ResidualReport residual_u(const ClosedFormField& u, const ForcingFn& h, const PhysParams& params,
                          const Grid1D& grid, double t);
ResidualReport residual_u(const ExactSolution& sol, const Grid1D& grid, double t);

/// Sampled mode: `levels` are equally spaced in time by dt and centered on the
/// evaluation time (3 levels: 2nd order in t, 5 levels: 4th order).
ResidualReport residual_u(const std::vector<SampledField>& levels, double dt, const ForcingFn& h,
                          const PhysParams& params, EvalMode mode);

/// v_tx + v_x v_xx + alpha v_xxxx - beta v - h.
ResidualReport residual_v(const ClosedFormField& v, const ForcingFn& h, const PhysParams& params,
                          const Grid1D& grid, double t);
ResidualReport residual_v(const ExactSolution& sol, const Grid1D& grid, double t);
ResidualReport residual_v(const std::vector<SampledField>& levels, double dt, const ForcingFn& h,
                          const PhysParams& params, EvalMode mode);

// --- reduction ODEs ------------------------------------------------------

/// x1: alpha V'''' + V'V'' - beta V = h1(zeta)
/// case1: alpha V'''' + V'V'' - beta V = h2 zeta^2
/// case2: alpha V'''' + (V' - mu) V'' - beta V = 0
struct ReductionVariant {
  enum class Kind { x1, case1, case2 };
  Kind kind = Kind::x1;
  double mu = 0.0;
  double h2 = 0.0;

  static ReductionVariant x1() { return {}; }
  static ReductionVariant case1(double h2) { return {Kind::case1, 0.0, h2}; }
  static ReductionVariant case2(double mu) { return {Kind::case2, mu, 0.0}; }
};

ResidualReport residual_reduction(const Profile& V, const Profile& h1, const PhysParams& params,
                                  const ReductionVariant& variant, const Grid1D& grid);
/// Same with V'..V'''' from 4th-order differences of dense samples.
ResidualReport residual_reduction(const SampledField& V, const Profile& h1,
                                  const PhysParams& params, const ReductionVariant& variant);

// --- conservation laws ---------------------------------------------------

/// Density T and flux Phi as functions of (x, t) and the potential's partials.
struct ConservedCurrent {
  enum class Label { energy, momentum };
  using Evaluator = std::function<double(double x, double t, const FieldPartials& v)>;

  Label label;
  Evaluator density;
  Evaluator flux;
};
std::string to_string(ConservedCurrent::Label label);

/// Energy current; requires the Galilean topography shape (ShapeMismatch otherwise).
ConservedCurrent energy_current(const Topography& topo, const PhysParams& params);
/// Momentum current; requires the quadratic-in-x shape (ShapeMismatch otherwise).
ConservedCurrent momentum_current(const Topography& topo, const PhysParams& params);

/// D_t T + D_x Phi with 2nd-order centered t-differences and 4th-order x-differences,
/// interior only. Max over the listed times; normalized by 1 + max |T|.
ResidualReport continuity_check(const ConservedCurrent& current, const ClosedFormField& v,
                                const Grid1D& grid, const std::vector<double>& times, double dt);

/// Quadrature of T over the grid at time t.
double conserved_integral(const ConservedCurrent& current, const ClosedFormField& v,
                          const Grid1D& grid, double t);
/// max_t |I(t) - I(0)| / (1 + |I(0)|).
double drift(const std::vector<double>& series);

/// [u_t + u u_x + alpha u_xxx]_a^b - beta int_a^b u - (h(b) - h(a)), Simpson on n points.
/// u_t is analytic when dt = 0 and a centered difference otherwise.
double mass_balance(const ClosedFormField& u, const ForcingFn& h, const PhysParams& params,
                    double a, double b, double t, int n = 2001, double dt = 0.0);

// --- first integral ------------------------------------------------------

/// alpha V'V''' - (alpha/2) V''^2 + V'^3/3 - (mu/2) V'^2 - (beta/2) V^2,
/// constant along solutions of the case2 reduction.
double first_integral(const Eigen::Vector4d& state, double mu, const PhysParams& params);
/// The alternative normalization beta V'V''' - (beta/2) V''^2 + V'^3/(3 alpha)
/// - mu V'^2/(2 alpha) - (beta/2) V^2, kept for comparison.
double first_integral_printed(const Eigen::Vector4d& state, double mu, const PhysParams& params);

// --- variational structure -----------------------------------------------

struct HamiltonianReport {
  /// D_x(dH/du) against -u u_x - alpha u_xxx + beta v + h.
  ResidualReport structure;
  /// max |u_t - D_x(dH/du)| when u_t is supplied, else NaN.
  double ut_mismatch = 0.0;
  /// max relative mismatch of the Gateaux difference quotient, NaN when skipped.
  double gateaux = 0.0;
  /// D_x(dH/du) on the grid.
  Eigen::VectorXd flow;
};

/// Spectral check of the Hamiltonian form on a periodic, zero-mean state.
HamiltonianReport hamiltonian_check(const SampledField& u, const ForcingFn& h,
                                    const PhysParams& params,
                                    const std::optional<SampledField>& u_t = std::nullopt,
                                    int directions = 20, double eps = 1e-4,
                                    std::uint64_t seed = 20240601);

/// Discrete Hamiltonian functional on a periodic grid.
double hamiltonian_functional(const SampledField& u, const ForcingFn& h, const PhysParams& params);

/// L = -v_t v_x/2 - v_x^3/6 + alpha v_xx^2/2 - beta v^2/2 + H v_x on the grid.
SampledField lagrangian_density(const ClosedFormField& v, const ForcingFn& h,
                                const PhysParams& params, const Grid1D& grid, double t);

/// Euler operator of L by finite differences minus the potential-equation residual.
ResidualReport euler_residual(const ClosedFormField& v, const ForcingFn& h,
                              const PhysParams& params, const Grid1D& grid, double t, double dt);

// --- symmetries ----------------------------------------------------------

/// residual_u of the transformed solution for each eps, against the forcing the
/// generator preserves. X2 with h2 == 0 acts as a plain translation and is
/// checked against the translated forcing when h is not quadratic in x.
std::vector<ResidualReport> symmetry_orbit_check(const SymmetryGenerator& gen,
                                                 const std::vector<double>& eps,
                                                 const ExactSolution& sol, const Grid1D& grid,
                                                 double t);

}  // namespace ostro
