#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidforge/braid.hpp"
#include "braidforge/cli.hpp"
#include "braidforge/compile.hpp"
#include "braidforge/error.hpp"
#include "braidforge/io.hpp"
#include "braidforge/orbifold.hpp"
#include "braidforge/presentation.hpp"
#include "braidforge/surface.hpp"
#include "braidforge/tl.hpp"

namespace py = pybind11;
using namespace braidforge;

namespace {

BraidWord word_from_text(const std::string& text, int strands) {
  return parse_braid_word(text, strands);
}

OrbifoldGeometry geometry_from_dict(const py::dict& d) {
  OrbifoldGeometry g;
  g.euler_M = d["euler_M"].cast<int>();
  g.signature_M = d["signature_M"].cast<int>();
  g.euler_Sigma = d["euler_Sigma"].cast<int>();
  g.self_intersection = d["self_intersection"].cast<int>();
  g.cone_order = d["cone_order"].cast<int>();
  g.sigma_orientable = d["sigma_orientable"].cast<bool>();
  validate(g);
  return g;
}

py::dict geometry_to_dict(const OrbifoldGeometry& g) {
  py::dict d;
  d["euler_M"] = g.euler_M;
  d["signature_M"] = g.signature_M;
  d["euler_Sigma"] = g.euler_Sigma;
  d["self_intersection"] = g.self_intersection;
  d["cone_order"] = g.cone_order;
  d["sigma_orientable"] = g.sigma_orientable;
  return d;
}

TLParams params_from_angle(const py::object& angle) {
  double radians = 0.0;
  if (py::isinstance<py::str>(angle)) {
    radians = parse_angle(angle.cast<std::string>());
  } else {
    radians = angle.cast<double>();
  }
  return make_tl_params(std::polar(1.0, radians));
}

RepMatrices unitary_rep(int n, int p, const py::object& angle) {
  const TLParams params = params_from_angle(angle);
  return unitarize(rep_matrices(n, p, params), params);
}

SearchConfig config_from_args(int depth, double tolerance, std::uint64_t beam_width,
                              const std::string& strategy, bool dedup) {
  SearchConfig cfg;
  cfg.max_depth = depth;
  cfg.tolerance = tolerance;
  cfg.beam_width = beam_width;
  cfg.dedup_matrices = dedup;
  if (strategy == "exhaustive") {
    cfg.strategy = SearchStrategy::exhaustive;
  } else if (strategy == "mitm") {
    cfg.strategy = SearchStrategy::meet_in_middle;
  } else {
    throw InputError("unknown strategy '" + strategy + "' (expected exhaustive or mitm)");
  }
  return cfg;
}

TargetGate named_target(const std::string& name) {
  if (name == "x") return pauli_x_gate();
  if (name == "z") return pauli_z_gate();
  if (name == "h") return hadamard_gate();
  if (name == "cnot") return cnot_gate();
  throw InputError("unknown target '" + name + "' (expected x, z, h, or cnot)");
}

py::dict compile_to_dict(const CompilationResult& result) {
  py::dict d;
  d["word"] = format_braid_word(result.word);
  d["length"] = result.word.letters().size();
  d["achieved_distance"] = result.achieved_distance;
  d["nodes_explored"] = result.nodes_explored;
  d["depth_reached"] = result.depth_reached;
  return d;
}

py::dict run_compile(const TargetGate& target, int n, int p, const py::object& angle,
                     int depth, double tolerance, std::uint64_t beam_width,
                     const std::string& strategy, bool dedup) {
  const RepMatrices rm = unitary_rep(n, p, angle);
  const CompilationResult result =
      compile_gate(target, rm, config_from_args(depth, tolerance, beam_width, strategy, dedup));
  return compile_to_dict(result);
}

}  // namespace

PYBIND11_MODULE(_braidforge, m) {
  m.doc() =
      "Braid normal forms, Hurwitz orbits, orbifold invariants, "
      "Temperley-Lieb representations, and a braid gate compiler";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

  m.def(
      "braid_eq",
      [](const std::string& a, const std::string& b, int strands) {
        return words_equal(word_from_text(a, strands), word_from_text(b, strands));
      },
      py::arg("a"), py::arg("b"), py::arg("strands"),
      "Whether two braid words represent the same element, by normal form.");

  m.def(
      "braid_normal_form",
      [](const std::string& word, int strands) {
        const GarsideForm nf = garside_normal_form(word_from_text(word, strands));
        py::dict d;
        d["strands"] = nf.strand_count();
        d["delta_power"] = nf.delta_power();
        d["canonical_length"] = nf.canonical_length();
        std::vector<std::vector<int>> factors;
        for (const Permutation& f : nf.factors()) {
          std::vector<int> images;
          for (int i = 1; i <= f.size(); ++i) images.push_back(f(i));
          factors.push_back(std::move(images));
        }
        d["factors"] = factors;
        d["word"] = format_braid_word(nf.to_word());
        return d;
      },
      py::arg("word"), py::arg("strands"),
      "Left greedy normal form: delta power, canonical factors, and a representative word.");

  m.def(
      "braid_permutation",
      [](const std::string& word, int strands) {
        const Permutation p = underlying_permutation(word_from_text(word, strands));
        std::vector<int> images;
        for (int i = 1; i <= p.size(); ++i) images.push_back(p(i));
        return images;
      },
      py::arg("word"), py::arg("strands"),
      "Images of 1..n under the strand permutation of the word.");

  m.def(
      "abelianize",
      [](int generators, const std::vector<std::vector<int>>& relators) {
        const AbelianizationResult result =
            abelianization(GroupPresentation(generators, relators));
        py::dict d;
        d["free_rank"] = result.free_rank;
        std::vector<std::string> torsion;
        for (const BigInt& t : result.torsion_coefficients) torsion.push_back(t.str());
        d["torsion"] = torsion;
        return d;
      },
      py::arg("generators"), py::arg("relators"),
      "Free rank and elementary divisors of the abelianized presentation.");

  m.def(
      "is_c_group",
      [](int generators, const std::vector<std::vector<int>>& relators) {
        return validate_c_group(GroupPresentation(generators, relators));
      },
      py::arg("generators"), py::arg("relators"),
      "Whether every relator is a conjugation relation x_i^w = x_j.");

  m.def(
      "orbifold_quotient",
      [](int generators, const std::vector<std::vector<int>>& relators,
         const std::vector<std::vector<int>>& loops, const std::vector<int>& exponents) {
        const GroupPresentation q =
            orbifold_quotient(GroupPresentation(generators, relators), loops, exponents);
        py::dict d;
        d["generators"] = q.generator_count();
        d["relators"] = q.relators();
        return d;
      },
      py::arg("generators"), py::arg("relators"), py::arg("loops"), py::arg("exponents"),
      "Quotient presentation with loop^exponent relators appended.");

  m.def(
      "invariants",
      [](const py::dict& geometry) {
        const InvariantReport report = invariant_report(geometry_from_dict(geometry));
        py::dict d;
        d["chi_orb"] = format_rational(report.chi_orb);
        d["tau_orb"] = format_rational(report.tau_orb);
        d["index_K"] = format_rational(report.index_K);
        d["satake_normal_euler"] = format_rational(report.satake_normal_euler);
        d["einstein_plus_ok"] = report.einstein_plus_ok;
        d["einstein_minus_ok"] = report.einstein_minus_ok;
        d["index_K_integral"] = report.index_K_integral;
        return d;
      },
      py::arg("geometry"),
      "Orbifold Euler characteristic, signature, spin index, and obstruction flags; "
      "rationals are returned as exact 'p/q' strings.");

  m.def(
      "connected_sum",
      [](const py::dict& a, const py::dict& b) {
        return geometry_to_dict(connected_sum(geometry_from_dict(a), geometry_from_dict(b)));
      },
      py::arg("a"), py::arg("b"), "Pairwise connected sum of two embedded surface pairs.");

  m.def(
      "hurwitz_orbit",
      [](const std::string& system_text, std::uint64_t cap) {
        std::istringstream in(system_text);
        const OrbitResult orbit = hurwitz_orbit(parse_braid_system(in), cap);
        py::dict d;
        d["size"] = orbit.size;
        d["truncated"] = orbit.truncated;
        return d;
      },
      py::arg("system"), py::arg("cap") = 1000000,
      "Orbit of a braid system under Hurwitz moves, from its text form.");

  m.def(
      "standard_hurwitz_orbit",
      [](int degree, std::uint64_t cap) {
        const OrbitResult orbit = hurwitz_orbit(standard_braid_system(degree), cap);
        py::dict d;
        d["size"] = orbit.size;
        d["truncated"] = orbit.truncated;
        return d;
      },
      py::arg("degree"), py::arg("cap") = 1000000,
      "Hurwitz orbit of the standard system (sigma_1, ..., sigma_{m-1}).");

  m.def(
      "boundary_braid",
      [](const std::string& system_text) {
        std::istringstream in(system_text);
        return format_braid_word(boundary_braid(parse_braid_system(in)));
      },
      py::arg("system"), "Product of the system entries, as a braid word.");

  m.def(
      "cover_report",
      [](const std::string& system_text, int base_euler) {
        std::istringstream in(system_text);
        const CoverReport report = monodromy_report(parse_braid_system(in), base_euler);
        py::dict d;
        d["degree"] = report.degree;
        d["base_euler"] = report.base_euler;
        d["branch_count"] = report.branch_count;
        d["cover_euler"] = report.cover_euler;
        d["transitive"] = report.transitive;
        return d;
      },
      py::arg("system"), py::arg("base_euler") = 2,
      "Euler characteristic accounting for the branched cover a system encodes.");

  m.def(
      "jones_rep",
      [](int n, int p, const py::object& angle) {
        const RepMatrices rm = unitary_rep(n, p, angle);
        const TLParams params = params_from_angle(angle);
        py::dict d;
        d["strands"] = rm.strand_count;
        d["through_strands"] = rm.through_strands;
        d["dimension"] = rm.dimension;
        d["loop_value"] = params.loop_value;
        py::list sigmas;
        for (const Eigen::MatrixXcd& s : rm.sigma_images) sigmas.append(s);
        d["sigma_images"] = sigmas;
        return d;
      },
      py::arg("n") = 3, py::arg("p") = 1, py::arg("angle") = py::str("2pi/5"),
      "Unitarized link pattern representation; angle is the argument of the "
      "Kauffman parameter, as radians or a string like '2pi/5'.");

  m.def(
      "rep_of_word",
      [](const std::string& word, int n, int p, const py::object& angle) {
        const RepMatrices rm = unitary_rep(n, p, angle);
        return Eigen::MatrixXcd(rep_of_word(word_from_text(word, n), rm));
      },
      py::arg("word"), py::arg("n") = 3, py::arg("p") = 1, py::arg("angle") = py::str("2pi/5"),
      "Image of a braid word under the unitarized representation.");

  m.def(
      "projective_distance", &projective_distance, py::arg("u"), py::arg("v"),
      "min over phases of the operator norm of U - e^{i phi} V.");

  m.def(
      "compile_gate",
      [](const std::string& target, int depth, double tolerance, std::uint64_t beam_width,
         const std::string& strategy, bool dedup, int n, int p, const py::object& angle) {
        return run_compile(named_target(target), n, p, angle, depth, tolerance, beam_width,
                           strategy, dedup);
      },
      py::arg("target"), py::arg("depth") = 8, py::arg("tolerance") = 1e-6,
      py::arg("beam_width") = 0, py::arg("strategy") = "exhaustive", py::arg("dedup") = true,
      py::arg("n") = 3, py::arg("p") = 1, py::arg("angle") = py::str("2pi/5"),
      "Best braid word approximating a named gate (x, z, h, cnot).");

  m.def(
      "compile_gate",
      [](const Eigen::MatrixXcd& target, int depth, double tolerance, std::uint64_t beam_width,
         const std::string& strategy, bool dedup, int n, int p, const py::object& angle) {
        return run_compile(make_target_gate(target), n, p, angle, depth, tolerance, beam_width,
                           strategy, dedup);
      },
      py::arg("target"), py::arg("depth") = 8, py::arg("tolerance") = 1e-6,
      py::arg("beam_width") = 0, py::arg("strategy") = "exhaustive", py::arg("dedup") = true,
      py::arg("n") = 3, py::arg("p") = 1, py::arg("angle") = py::str("2pi/5"),
      "Best braid word approximating an explicit unitary matrix.");

  m.def(
      "density_probe",
      [](int samples, int depth, std::uint64_t seed, int n, int p, const py::object& angle) {
        const DensityProbeStats stats =
            density_probe(unitary_rep(n, p, angle), samples, depth, seed);
        py::dict d;
        d["depth"] = stats.depth;
        d["seed"] = stats.seed;
        d["distances"] = stats.distances;
        d["min"] = stats.min_distance;
        d["median"] = stats.median_distance;
        d["max"] = stats.max_distance;
        return d;
      },
      py::arg("samples"), py::arg("depth"), py::arg("seed") = 0, py::arg("n") = 3,
      py::arg("p") = 1, py::arg("angle") = py::str("2pi/5"),
      "Best word-ball distances to Haar-random 2x2 unitaries.");

  m.def(
      "cli",
      [](const std::vector<std::string>& argv) {
        std::ostringstream out;
        std::ostringstream err;
        const CommandOutcome outcome = run(argv, out, err);
        return py::make_tuple(outcome.exit_code, outcome.payload.dump(), out.str(), err.str());
      },
      py::arg("argv"),
      "Run the command line entry point; returns (exit_code, payload_json, stdout, stderr).");
}
