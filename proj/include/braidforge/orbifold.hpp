#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

namespace braidforge {

using Rational = boost::multiprecision::cpp_rational;

// Topological data of a closed 4-manifold M with an embedded surface Sigma
// carrying a cone angle 2*pi/nu along it.
struct OrbifoldGeometry {
  long long euler_M = 0;           // Euler characteristic of M
  long long signature_M = 0;       // signature of M
  long long euler_Sigma = 0;       // Euler characteristic of Sigma
  long long self_intersection = 0; // [Sigma]^2
  int cone_order = 2;              // nu
  bool sigma_orientable = false;

  bool operator==(const OrbifoldGeometry&) const = default;
};

// Throws InputError unless cone_order >= 2 and, for orientable Sigma, the
// Euler characteristic is even and at most 2.
void validate(const OrbifoldGeometry& g);

// chi(M) - (1 - 1/nu) chi(Sigma)
Rational chi_orb(const OrbifoldGeometry& g);

// tau(M) - (1/3)(1 - 1/nu^2) [Sigma]^2
Rational tau_orb(const OrbifoldGeometry& g);

// (1/2)(15 chi(M) - 29 tau(M)) - 4 chi(Sigma) + 4 [Sigma]^2
Rational index_K(const OrbifoldGeometry& g);

// Euler number of the normal bundle averaged over the local cyclic group:
// [Sigma]^2 / nu.
Rational satake_normal_euler(const OrbifoldGeometry& g);

// Necessary conditions 2 chi(M) +- 3 tau(M) >= (1 - 1/nu)(2 chi(Sigma) +-
// (1 + 1/nu) [Sigma]^2), evaluated exactly for both sign choices.
std::pair<bool, bool> einstein_obstruction(const OrbifoldGeometry& g);

// True iff omega_pairing < 0 and blowups >= c1_term_square / 3, the
// Seiberg-Witten exclusion threshold for Einstein edge-cone metrics.
bool seiberg_witten_excluded(const Rational& c1_term_square, const Rational& omega_pairing,
                             long long blowups);

// Pairwise connected sum (M1 # M2, Sigma1 # Sigma2); both surfaces are taken
// nonempty and connected, and the cone orders must agree.
OrbifoldGeometry connected_sum(const OrbifoldGeometry& g1, const OrbifoldGeometry& g2);

struct InvariantReport {
  Rational chi_orb;
  Rational tau_orb;
  Rational index_K;
  Rational satake_normal_euler;
  bool einstein_plus_ok = false;
  bool einstein_minus_ok = false;
  // Data warning, not an error: false when index_K is a half integer.
  bool index_K_integral = true;

  bool operator==(const InvariantReport&) const = default;
};

InvariantReport invariant_report(const OrbifoldGeometry& g);

}  // namespace braidforge
