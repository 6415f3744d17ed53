#include "braidforge/compile.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "braidforge/error.hpp"
#include "parallel.hpp"

namespace braidforge {

namespace {

constexpr double kUnitaryTolerance = 1e-10;
constexpr double kDedupGrid = 1e8;  // matrices are merged after rounding entries to 1e-8

bool is_unitary(const Eigen::MatrixXcd& m, double tolerance) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  Eigen::MatrixXcd defect = m.adjoint() * m;
  defect -= Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return defect.cwiseAbs().maxCoeff() <= tolerance;
}

// Frobenius inner product <u, v> = tr(u^dagger v).
std::complex<double> frobenius_inner(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  return (u.conjugate().cwiseProduct(v)).sum();
}

// min_phi ||u - e^{i phi} v|| for 2x2 unitaries equals sqrt(2 - |tr(u^dagger v)|),
// but that subtraction cancels catastrophically near zero. Close to a hit the
// optimal phase is exactly minus the phase of the trace, so the norm of the
// phase-aligned difference is evaluated directly there (error stays relative).
double distance_dim2(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  const std::complex<double> trace = frobenius_inner(u, v);
  const double slack = 2.0 - std::abs(trace);
  if (slack > 1e-6) return std::sqrt(slack);
  const std::complex<double> phase = std::polar(1.0, -std::arg(trace));
  const std::complex<double> m00 = u(0, 0) - phase * v(0, 0);
  const std::complex<double> m01 = u(0, 1) - phase * v(0, 1);
  const std::complex<double> m10 = u(1, 0) - phase * v(1, 0);
  const std::complex<double> m11 = u(1, 1) - phase * v(1, 1);
  const double f = std::norm(m00) + std::norm(m01) + std::norm(m10) + std::norm(m11);
  const double g = std::norm(m00 * m11 - m01 * m10);
  double disc = f * f - 4.0 * g;
  if (disc < 0.0) disc = 0.0;
  return std::sqrt(0.5 * (f + std::sqrt(disc)));
}

// Letters are ranked sigma_1, sigma_1^{-1}, sigma_2, sigma_2^{-1}, ...;
// word order is lexicographic on rank sequences.
BraidLetter letter_of_rank(int rank) {
  return BraidLetter{rank / 2 + 1, rank % 2 == 0 ? 1 : -1};
}

std::vector<Eigen::MatrixXcd> images_by_rank(const RepMatrices& rm) {
  std::vector<Eigen::MatrixXcd> images;
  images.reserve(2 * rm.sigma_images.size());
  for (std::size_t i = 0; i < rm.sigma_images.size(); ++i) {
    images.push_back(rm.sigma_images[i]);
    images.push_back(rm.sigma_inverse_images[i]);
  }
  return images;
}

std::string matrix_key(const Eigen::MatrixXcd& m) {
  std::string key;
  key.resize(static_cast<std::size_t>(m.size()) * 2 * sizeof(long long));
  char* out = key.data();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const std::complex<double> c = m(i, j);
      const long long re = std::llround(c.real() * kDedupGrid);
      const long long im = std::llround(c.imag() * kDedupGrid);
      std::memcpy(out, &re, sizeof re);
      out += sizeof re;
      std::memcpy(out, &im, sizeof im);
      out += sizeof im;
    }
  }
  return key;
}

struct SearchState {
  std::vector<std::int8_t> word;  // letter ranks
  Eigen::MatrixXcd m;
  double dist = 0.0;
};

// Expands every frontier state by every letter. Output is ordered by
// (frontier slot, letter rank), so the result is independent of the worker
// count and lexicographic within each level.
std::vector<SearchState> expand_level(const std::vector<SearchState>& frontier,
                                      const std::vector<Eigen::MatrixXcd>& images,
                                      const Eigen::MatrixXcd* target, int workers) {
  const std::size_t letters = images.size();
  std::vector<SearchState> out(frontier.size() * letters);
  auto expand_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const SearchState& parent = frontier[i];
      for (std::size_t r = 0; r < letters; ++r) {
        SearchState& child = out[i * letters + r];
        child.word = parent.word;
        child.word.push_back(static_cast<std::int8_t>(r));
        child.m = parent.m * images[r];
        if (target != nullptr) child.dist = projective_distance(child.m, *target);
      }
    }
  };
  if (workers <= 1 || frontier.size() < 64) {
    expand_range(0, frontier.size());
    return out;
  }
  const std::size_t chunk = (frontier.size() + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (std::size_t begin = chunk; begin < frontier.size(); begin += chunk) {
    threads.emplace_back(expand_range, begin, std::min(begin + chunk, frontier.size()));
  }
  expand_range(0, std::min(chunk, frontier.size()));
  for (auto& t : threads) t.join();
  return out;
}

void beam_prune(std::vector<SearchState>& states, std::uint64_t beam_width) {
  if (beam_width == 0 || states.size() <= beam_width) return;
  std::sort(states.begin(), states.end(), [](const SearchState& a, const SearchState& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    return a.word < b.word;
  });
  states.resize(beam_width);
}

BraidWord word_from_ranks(const std::vector<std::int8_t>& ranks, int strand_count) {
  std::vector<BraidLetter> letters;
  letters.reserve(ranks.size());
  for (std::int8_t r : ranks) letters.push_back(letter_of_rank(r));
  return BraidWord(strand_count, std::move(letters));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller pair of independent standard normal deviates.
std::pair<double, double> gaussian_pair(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1], keeps the log finite
  const double u2 = uniform01(rng);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

// Haar-distributed element of SU(2): a uniform point on the unit quaternions.
Eigen::MatrixXcd haar_unitary_2(std::mt19937_64& rng) {
  while (true) {
    const auto [x0, x1] = gaussian_pair(rng);
    const auto [x2, x3] = gaussian_pair(rng);
    const double norm = std::sqrt(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3);
    if (norm < 1e-8) continue;
    const std::complex<double> a(x0 / norm, x1 / norm);
    const std::complex<double> b(x2 / norm, x3 / norm);
    Eigen::MatrixXcd u(2, 2);
    u << a, b, -std::conj(b), std::conj(a);
    return u;
  }
}

void validate_compile_inputs(const TargetGate& target, const RepMatrices& rm) {
  if (target.dimension <= 0 || target.matrix.rows() != target.dimension ||
      target.matrix.cols() != target.dimension) {
    throw InputError("target gate matrix does not match its declared dimension");
  }
  if (!is_unitary(target.matrix, kUnitaryTolerance)) {
    throw InputError("target gate is not unitary");
  }
  if (!rm.unitary) {
    throw InputError("representation must be unitarized before compilation");
  }
  if (rm.dimension != target.dimension) {
    throw InputError("target dimension does not match representation dimension");
  }
}

}  // namespace

double projective_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows() || u.rows() == 0) {
    throw InputError("projective distance requires square matrices of equal dimension");
  }
  const Eigen::Index d = u.rows();
  if (d == 2) return distance_dim2(u, v);
  Eigen::MatrixXcd w = u.adjoint() * v;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(w, false);
  if (solver.info() != Eigen::Success) {
    throw DomainError("eigenvalue computation failed in projective distance");
  }
  std::vector<double> phases(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const std::complex<double> lambda = solver.eigenvalues()(i);
    phases[i] = std::atan2(lambda.imag(), lambda.real());
  }
  std::sort(phases.begin(), phases.end());
  // The optimal phase centers the eigenphases inside their minimal enclosing
  // arc, whose length is 2 pi minus the largest gap between neighbours.
  double largest_gap = phases.front() + 2.0 * std::numbers::pi - phases.back();
  for (std::size_t i = 1; i < phases.size(); ++i) {
    largest_gap = std::max(largest_gap, phases[i] - phases[i - 1]);
  }
  const double arc = 2.0 * std::numbers::pi - largest_gap;
  return 2.0 * std::sin(arc / 4.0);
}

TargetGate make_target_gate(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InputError("target gate must be a nonempty square matrix");
  }
  if (!is_unitary(m, kUnitaryTolerance)) {
    throw InputError("target gate is not unitary");
  }
  return TargetGate{static_cast<int>(m.rows()), m};
}

TargetGate pauli_x_gate() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return TargetGate{2, m};
}

TargetGate pauli_z_gate() {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 0, 0, -1;
  return TargetGate{2, m};
}

TargetGate hadamard_gate() {
  const double s = 1.0 / std::numbers::sqrt2;
  Eigen::MatrixXcd m(2, 2);
  m << s, s, s, -s;
  return TargetGate{2, m};
}

TargetGate cnot_gate() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return TargetGate{4, m};
}

CompilationResult compile_gate(const TargetGate& target, const RepMatrices& rm,
                               const SearchConfig& cfg) {
  validate_compile_inputs(target, rm);
  if (cfg.max_depth < 1) throw InputError("max_depth must be at least 1");
  if (!(cfg.tolerance > 0.0)) throw InputError("tolerance must be positive");

  const Eigen::MatrixXcd& t = target.matrix;
  const std::vector<Eigen::MatrixXcd> images = images_by_rank(rm);
  const int workers = parallel_workers();

  CompilationResult result;
  result.nodes_explored = 1;

  SearchState root{{}, Eigen::MatrixXcd::Identity(rm.dimension, rm.dimension), 0.0};
  root.dist = projective_distance(root.m, t);

  std::vector<std::int8_t> best_word;
  double best_dist = root.dist;
  auto consider = [&](const std::vector<std::int8_t>& word, double dist) {
    if (dist < best_dist || (dist == best_dist && word < best_word)) {
      best_dist = dist;
      best_word = word;
    }
  };

  const bool done_at_root = best_dist <= cfg.tolerance || images.empty();
  if (!done_at_root && cfg.strategy == SearchStrategy::exhaustive) {
    std::vector<SearchState> frontier{root};
    std::unordered_set<std::string> visited;
    if (cfg.dedup_matrices) visited.insert(matrix_key(root.m));
    for (int level = 1; level <= cfg.max_depth && !frontier.empty(); ++level) {
      std::vector<SearchState> candidates = expand_level(frontier, images, &t, workers);
      result.nodes_explored += candidates.size();
      std::vector<SearchState> next;
      next.reserve(candidates.size());
      for (SearchState& c : candidates) {
        if (cfg.dedup_matrices && !visited.insert(matrix_key(c.m)).second) continue;
        consider(c.word, c.dist);
        next.push_back(std::move(c));
      }
      beam_prune(next, cfg.beam_width);
      frontier = std::move(next);
      result.depth_reached = level;
      if (best_dist <= cfg.tolerance) break;
    }
  } else if (!done_at_root) {
    // Meet in the middle: exhaust a forward ball, then look suffix states up
    // against it by rounded matrix key. A hit at forward word u and suffix
    // word v means rep(u) * rep(v) matches the target on the rounding grid.
    const int forward_depth = (cfg.max_depth + 1) / 2;
    const int suffix_depth = cfg.max_depth / 2;

    std::vector<SearchState> ball{root};
    std::unordered_map<std::string, std::size_t> first_of;
    first_of.emplace(matrix_key(root.m), 0);

    std::vector<SearchState> frontier{root};
    for (int level = 1; level <= forward_depth && !frontier.empty(); ++level) {
      std::vector<SearchState> candidates = expand_level(frontier, images, &t, workers);
      result.nodes_explored += candidates.size();
      std::vector<SearchState> next;
      next.reserve(candidates.size());
      for (SearchState& c : candidates) {
        const auto [it, inserted] = first_of.emplace(matrix_key(c.m), ball.size());
        if (inserted) ball.push_back(c);
        if (cfg.dedup_matrices && !inserted) continue;
        consider(c.word, c.dist);
        next.push_back(std::move(c));
      }
      beam_prune(next, cfg.beam_width);
      frontier = std::move(next);
      result.depth_reached = level;
      if (best_dist <= cfg.tolerance) break;
    }

    if (best_dist > cfg.tolerance && suffix_depth > 0) {
      const int forward_levels = result.depth_reached;
      std::vector<SearchState> suffixes{
          SearchState{{}, Eigen::MatrixXcd::Identity(rm.dimension, rm.dimension), 0.0}};
      std::unordered_set<std::string> seen;
      if (cfg.dedup_matrices) seen.insert(matrix_key(suffixes.front().m));
      for (int level = 1; level <= suffix_depth && !suffixes.empty(); ++level) {
        std::vector<SearchState> candidates = expand_level(suffixes, images, nullptr, workers);
        result.nodes_explored += candidates.size();
        std::vector<SearchState> next;
        next.reserve(candidates.size());
        for (SearchState& c : candidates) {
          if (cfg.dedup_matrices && !seen.insert(matrix_key(c.m)).second) continue;
          const Eigen::MatrixXcd wanted = t * c.m.adjoint();
          const auto it = first_of.find(matrix_key(wanted));
          if (it != first_of.end()) {
            const SearchState& u = ball[it->second];
            std::vector<std::int8_t> joined = u.word;
            joined.insert(joined.end(), c.word.begin(), c.word.end());
            consider(joined, projective_distance(u.m * c.m, t));
          }
          next.push_back(std::move(c));
        }
        suffixes = std::move(next);
        result.depth_reached = forward_levels + level;
        if (best_dist <= cfg.tolerance) break;
      }
    }
  }

  result.achieved_distance = best_dist;
  result.word = word_from_ranks(best_word, rm.strand_count);
  return result;
}

DensityProbeStats density_probe(const RepMatrices& rm, int sample_count, int depth,
                                std::uint64_t seed) {
  if (!rm.unitary) throw InputError("representation must be unitarized before probing");
  if (rm.dimension != 2) throw InputError("probe restricted to d=2");
  if (sample_count < 1) throw InputError("sample_count must be at least 1");
  if (depth < 0) throw InputError("depth must be nonnegative");

  std::mt19937_64 rng(seed);
  std::vector<Eigen::MatrixXcd> targets;
  targets.reserve(sample_count);
  for (int i = 0; i < sample_count; ++i) targets.push_back(haar_unitary_2(rng));

  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(2, 2);
  std::vector<double> best(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k) {
    best[k] = projective_distance(identity, targets[k]);
  }

  // One deduplicated ball enumeration serves every target; only the running
  // minima survive a level, so memory stays proportional to the frontier.
  const std::vector<Eigen::MatrixXcd> images = images_by_rank(rm);
  if (depth > 0 && !images.empty()) {
    const int workers = parallel_workers();
    std::vector<SearchState> frontier{SearchState{{}, identity, 0.0}};
    std::unordered_set<std::string> visited{matrix_key(identity)};
    for (int level = 1; level <= depth && !frontier.empty(); ++level) {
      std::vector<SearchState> candidates = expand_level(frontier, images, nullptr, workers);
      std::vector<SearchState> next;
      next.reserve(candidates.size());
      for (SearchState& c : candidates) {
        if (!visited.insert(matrix_key(c.m)).second) continue;
        for (std::size_t k = 0; k < targets.size(); ++k) {
          const double dist = distance_dim2(c.m, targets[k]);
          if (dist < best[k]) best[k] = dist;
        }
        next.push_back(std::move(c));
      }
      frontier = std::move(next);
    }
  }

  DensityProbeStats stats;
  stats.depth = depth;
  stats.seed = seed;
  stats.distances = best;
  std::vector<double> sorted = best;
  std::sort(sorted.begin(), sorted.end());
  stats.min_distance = sorted.front();
  stats.max_distance = sorted.back();
  const std::size_t n = sorted.size();
  stats.median_distance =
      n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  return stats;
}

}  // namespace braidforge
