#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "braidforge/braid.hpp"
#include "braidforge/tl.hpp"

namespace braidforge {

// Distance between unitaries up to a global phase: the minimum over phases phi
// of the operator norm of U - e^{i phi} V. Computed in closed form from the
// eigenphases of U^dagger V (for dimension 2 this reduces to
// sqrt(2 - |tr(U^dagger V)|)). Throws InputError when the matrices are not
// square of equal dimension. Inputs are assumed unitary.
double projective_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

struct TargetGate {
  int dimension = 0;
  Eigen::MatrixXcd matrix;
};

// Validates that m is square and unitary to 1e-10 before wrapping it.
TargetGate make_target_gate(const Eigen::MatrixXcd& m);

TargetGate pauli_x_gate();
TargetGate pauli_z_gate();
TargetGate hadamard_gate();
TargetGate cnot_gate();

enum class SearchStrategy {
  exhaustive,
  meet_in_middle,
};

struct SearchConfig {
  int max_depth = 8;
  double tolerance = 1e-6;
  // Number of frontier states kept per level after ranking by
  // (distance to target, lexicographic word order); 0 keeps everything.
  std::uint64_t beam_width = 0;
  SearchStrategy strategy = SearchStrategy::exhaustive;
  // When true, states whose matrices coincide on a 1e-8 grid are merged and
  // only the first (shortest, lexicographically least) word is kept.
  bool dedup_matrices = true;
};

struct CompilationResult {
  BraidWord word;
  double achieved_distance = 0.0;
  std::uint64_t nodes_explored = 0;
  int depth_reached = 0;
};

// Searches words in the generators sigma_1^{+-1}..sigma_{n-1}^{+-1} for the
// best approximation of the target under the given unitarized representation.
// Level-by-level iterative deepening; the search stops after the first level
// whose best distance is within cfg.tolerance. Deterministic for a fixed
// config: ties in distance are broken by lexicographic word order (sigma_i
// before sigma_i^{-1}, lower index first), and parallel frontier expansion
// merges results in canonical order. The meet-in-the-middle strategy joins a
// forward ball of depth ceil(d/2) against suffixes of depth floor(d/2) by
// exact rounded-key matrix lookup (the beam, when set, applies to the forward
// ball only).
CompilationResult compile_gate(const TargetGate& target, const RepMatrices& rm,
                               const SearchConfig& cfg);

struct DensityProbeStats {
  int depth = 0;
  std::uint64_t seed = 0;
  std::vector<double> distances;  // one entry per sampled target, in draw order
  double min_distance = 0.0;
  double median_distance = 0.0;
  double max_distance = 0.0;
};

// Samples Haar-random 2x2 unitaries (quaternion normal deviates from a
// mt19937_64 stream seeded with `seed`) and reports the best projective
// distance to each achievable by words of length at most `depth`. Depth 0
// compares every target against the identity. Requires a unitarized
// representation of dimension 2.
DensityProbeStats density_probe(const RepMatrices& rm, int sample_count,
                                int depth, std::uint64_t seed);

}  // namespace braidforge
