#include "braidforge/orbifold.hpp"

#include <string>

#include "braidforge/error.hpp"

namespace braidforge {

void validate(const OrbifoldGeometry& g) {
  if (g.cone_order < 2) {
    throw InputError("cone order must be at least 2, got " + std::to_string(g.cone_order));
  }
  if (g.sigma_orientable && (g.euler_Sigma > 2 || g.euler_Sigma % 2 != 0)) {
    throw InputError("an orientable closed surface has even Euler characteristic at most 2");
  }
}

Rational chi_orb(const OrbifoldGeometry& g) {
  validate(g);
  return g.euler_M - Rational(g.euler_Sigma * (g.cone_order - 1), g.cone_order);
}

Rational tau_orb(const OrbifoldGeometry& g) {
  validate(g);
  long long nu2 = static_cast<long long>(g.cone_order) * g.cone_order;
  return g.signature_M - Rational(g.self_intersection * (nu2 - 1), 3 * nu2);
}

Rational index_K(const OrbifoldGeometry& g) {
  validate(g);
  return Rational(15 * g.euler_M - 29 * g.signature_M, 2) - 4 * g.euler_Sigma +
         4 * g.self_intersection;
}

Rational satake_normal_euler(const OrbifoldGeometry& g) {
  validate(g);
  return Rational(g.self_intersection, g.cone_order);
}

std::pair<bool, bool> einstein_obstruction(const OrbifoldGeometry& g) {
  validate(g);
  const Rational cone_factor = Rational(g.cone_order - 1, g.cone_order);
  const Rational normal_factor = Rational(g.cone_order + 1, g.cone_order);
  auto holds = [&](int sign) {
    Rational lhs = 2 * g.euler_M + sign * 3 * g.signature_M;
    Rational rhs = cone_factor * (2 * g.euler_Sigma + sign * normal_factor * g.self_intersection);
    return lhs >= rhs;
  };
  return {holds(+1), holds(-1)};
}

bool seiberg_witten_excluded(const Rational& c1_term_square, const Rational& omega_pairing,
                             long long blowups) {
  if (blowups < 0) {
    throw InputError("blowup count must be nonnegative, got " + std::to_string(blowups));
  }
  return omega_pairing < 0 && Rational(blowups) >= c1_term_square / 3;
}

OrbifoldGeometry connected_sum(const OrbifoldGeometry& g1, const OrbifoldGeometry& g2) {
  validate(g1);
  validate(g2);
  if (g1.cone_order != g2.cone_order) {
    throw InputError("connected sum needs equal cone orders, got " +
                     std::to_string(g1.cone_order) + " and " + std::to_string(g2.cone_order));
  }
  return OrbifoldGeometry{g1.euler_M + g2.euler_M - 2,
                          g1.signature_M + g2.signature_M,
                          g1.euler_Sigma + g2.euler_Sigma - 2,
                          g1.self_intersection + g2.self_intersection,
                          g1.cone_order,
                          g1.sigma_orientable && g2.sigma_orientable};
}

InvariantReport invariant_report(const OrbifoldGeometry& g) {
  validate(g);
  InvariantReport report;
  report.chi_orb = chi_orb(g);
  report.tau_orb = tau_orb(g);
  report.index_K = index_K(g);
  report.satake_normal_euler = satake_normal_euler(g);
  std::tie(report.einstein_plus_ok, report.einstein_minus_ok) = einstein_obstruction(g);
  report.index_K_integral = denominator(report.index_K) == 1;
  return report;
}

}  // namespace braidforge
