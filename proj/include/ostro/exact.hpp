#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ostro/cubic.hpp"
#include "ostro/field.hpp"
#include "ostro/params.hpp"
#include "ostro/profile.hpp"
#include "ostro/time_profile.hpp"
#include "ostro/topography.hpp"

namespace ostro {

enum class Family { fam1, fam2, fam3, rational, solitary, oscillatory, frameshift, cubictw };

std::string to_string(Family family);
/// Throws InvalidArgument for an unknown name.
Family family_from_string(std::string_view name);

/// Closed-form solution bundle: u, its potential v (u = v_x), and the forcing it solves.
struct ExactSolution {
  Family family;
  ClosedFormField u;
  ClosedFormField v;
  Topography topo;
  PhysParams params;
  SpeedProfile speed;
  /// Invariant profile V(zeta) for the Galilean families.
  std::optional<Profile> profile;
  /// Forcing profile h1(zeta) for the Galilean families.
  std::optional<Profile> forcing;
  std::vector<std::pair<std::string, double>> coefficients;
};

/// u = c(t) + V'(chi).
ClosedFormField galilean_u(const Profile& V, const SpeedProfile& speed);

/// v = V(chi) + c(t) chi + (c'(t) - h0(t))/beta.
ClosedFormField potential_of(const Profile& V, const SpeedProfile& speed, const TimeProfile& h0,
                             double beta);
/// Frame-shift potential for h = h2 x^2 + h1 x + h0.
ClosedFormField potential_of(const topographies::QuadraticInX& topo, double beta);

/// Generic Galilean-family solution for any profile V; h1 is synthesized.
ExactSolution galilean_solution(Family family, const Profile& V, const Profile& h1,
                                const PhysParams& params, const SpeedProfile& speed,
                                const TimeProfile& h0);

ExactSolution cubic_solution(const CubicCoeffs<double>& k, const PhysParams& params,
                             const SpeedProfile& speed, const TimeProfile& h0 = {});
ExactSolution rational_wave(double c0, const PhysParams& params, const SpeedProfile& speed,
                            const TimeProfile& h0 = {});
ExactSolution solitary_wave(double k, const PhysParams& params, const SpeedProfile& speed,
                            const TimeProfile& h0 = {});
ExactSolution oscillatory_wave(double c0, double c1, double phi, const PhysParams& params,
                               const SpeedProfile& speed, const TimeProfile& h0 = {});
ExactSolution frame_shift_solution(const Topography& topo, const PhysParams& params);
ExactSolution cubic_tw_solution(double mu, double c2, const TimeProfile& h1,
                                const TimeProfile& h0, const PhysParams& params);

/// The rational-family forcing as tabulated from the coefficient solve.
Profile rational_forcing(double c0, const PhysParams& params);
/// The solitary-family forcing in tanh form.
Profile solitary_forcing(double k, const PhysParams& params);
/// Invariant cubic of the travelling-wave reduction with wave speed mu.
Polynomial<double> cubic_tw_profile(double mu, double c2, double beta);

struct CatalogEntry {
  Family family;
  std::string name;
  std::string signature;
  std::string description;
};

const std::vector<CatalogEntry>& catalog();

}  // namespace ostro
