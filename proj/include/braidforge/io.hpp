#pragma once

#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "braidforge/braid.hpp"
#include "braidforge/orbifold.hpp"
#include "braidforge/presentation.hpp"
#include "braidforge/surface.hpp"

namespace braidforge {

// Braid-word text format: whitespace-separated signed generator indices,
// e.g. "1 2 -1". Zero and out-of-range indices are rejected.
BraidWord parse_braid_word(const std::string& text, int strand_count);
std::string format_braid_word(const BraidWord& w);

// Presentation file: first line the generator count, then one relator per
// line as signed indices. Blank lines are skipped.
GroupPresentation parse_presentation(std::istream& in);
std::string format_presentation(const GroupPresentation& p);

// Braid-system file: first line "degree m", then one band generator per line
// as "conjugator-word | index sign" (the conjugator may be empty).
BraidSystem parse_braid_system(std::istream& in);
std::string format_braid_system(const BraidSystem& bs);

// Geometry JSON object with keys euler_M, signature_M, euler_Sigma,
// self_intersection, cone_order (integers) and sigma_orientable (bool).
OrbifoldGeometry parse_geometry_json(const std::string& text);

// Matrix JSON: an array of rows, each row an array of [re, im] pairs.
Eigen::MatrixXcd parse_matrix_json(const std::string& text);

// Angle grammar: "<c>", "pi", "<c>pi", "pi/<d>", "<c>pi/<d>", "<c>/<d>" with
// real c and nonzero real d, e.g. "2pi/5". Returns radians.
double parse_angle(const std::string& text);

// "p/q", or just "p" for integers.
std::string format_rational(const Rational& r);

}  // namespace braidforge
