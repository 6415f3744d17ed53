#pragma once

#include <Eigen/Dense>
#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/error.hpp"
#include "braidforge/laurent.hpp"

namespace braidforge {

// Noncrossing perfect matching of 2n points: top points 1..n left to right,
// bottom points n+1..2n below them.
class PlanarDiagram {
 public:
  explicit PlanarDiagram(std::vector<int> pairing);  // pairing[i-1] = partner of i

  static PlanarDiagram identity(int n);
  // Diagram of the algebra generator e_i: top points i, i+1 joined, bottom
  // points n+i, n+i+1 joined, all other strands vertical.
  static PlanarDiagram cap_cup(int n, int i);

  int point_count() const { return static_cast<int>(pairing_.size()); }
  int strand_count() const { return point_count() / 2; }
  int partner(int point) const { return pairing_[point - 1]; }
  const std::vector<int>& pairing() const { return pairing_; }

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
  friend auto operator<=>(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  std::vector<int> pairing_;
};

// Glues the bottom of x to the top of y; returns the composite diagram and
// the number of closed loops that formed.
std::pair<PlanarDiagram, int> compose_diagrams(const PlanarDiagram& x, const PlanarDiagram& y);

template <typename Coeff>
struct TLCoeffTraits;

template <>
struct TLCoeffTraits<std::complex<double>> {
  static std::complex<double> one() { return {1.0, 0.0}; }
  // Absorbs floating-point residue from coefficients that cancel exactly.
  static bool is_zero(const std::complex<double>& c) { return std::abs(c) <= 1e-12; }
};

template <>
struct TLCoeffTraits<LaurentPoly> {
  static LaurentPoly one() { return LaurentPoly(1); }
  static bool is_zero(const LaurentPoly& c) { return c.is_zero(); }
};

// Formal linear combination of diagrams on a fixed strand count; terms with
// zero coefficient are pruned as they arise.
template <typename Coeff>
class TLElementT {
 public:
  explicit TLElementT(int strand_count) : strand_count_(strand_count) {}

  static TLElementT identity(int n) {
    return from_diagram(PlanarDiagram::identity(n), TLCoeffTraits<Coeff>::one());
  }
  static TLElementT from_diagram(const PlanarDiagram& d, const Coeff& c) {
    TLElementT out(d.strand_count());
    out.add_term(d, c);
    return out;
  }

  int strand_count() const { return strand_count_; }
  const std::map<PlanarDiagram, Coeff>& terms() const { return terms_; }

  void add_term(const PlanarDiagram& d, const Coeff& c) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      if (!TLCoeffTraits<Coeff>::is_zero(c)) terms_.emplace(d, c);
      return;
    }
    it->second = it->second + c;
    if (TLCoeffTraits<Coeff>::is_zero(it->second)) terms_.erase(it);
  }

  TLElementT& operator+=(const TLElementT& other) {
    for (const auto& [d, c] : other.terms_) add_term(d, c);
    return *this;
  }
  friend TLElementT operator+(TLElementT a, const TLElementT& b) { return a += b; }

  TLElementT scaled(const Coeff& factor) const {
    TLElementT out(strand_count_);
    for (const auto& [d, c] : terms_) out.add_term(d, c * factor);
    return out;
  }

  friend bool operator==(const TLElementT&, const TLElementT&) = default;

 private:
  int strand_count_;
  std::map<PlanarDiagram, Coeff> terms_;
};

using TLElement = TLElementT<std::complex<double>>;
using SymbolicTLElement = TLElementT<LaurentPoly>;

struct TLParams {
  std::complex<double> a_value;
  double loop_value = 0.0;  // -A^2 - A^-2, real on the unit circle
};

// Validates |a_value| = 1 within 1e-12 and derives the loop value.
TLParams make_tl_params(std::complex<double> a_value);

template <typename Coeff>
TLElementT<Coeff> tl_multiply(const TLElementT<Coeff>& x, const TLElementT<Coeff>& y,
                              const Coeff& delta) {
  if (x.strand_count() != y.strand_count()) {
    throw InputError("cannot multiply elements on different strand counts");
  }
  TLElementT<Coeff> out(x.strand_count());
  for (const auto& [dx, cx] : x.terms()) {
    for (const auto& [dy, cy] : y.terms()) {
      auto [d, loops] = compose_diagrams(dx, dy);
      Coeff c = cx * cy;
      for (int k = 0; k < loops; ++k) c = c * delta;
      out.add_term(d, c);
    }
  }
  return out;
}

TLElement tl_multiply(const TLElement& x, const TLElement& y, const TLParams& params);

// Bracket image of a braid generator: sigma_i -> A + A^-1 e_i for sign +1,
// with A and A^-1 swapped for the inverse.
TLElement kauffman_sigma(int i, int n, const TLParams& params, int sign);
SymbolicTLElement kauffman_sigma_symbolic(int i, int n, int sign);
LaurentPoly symbolic_loop_value();  // -A^2 - A^-2 with A kept symbolic

// Largest coefficient difference between two elements, over the union of
// their diagrams.
double max_term_difference(const TLElement& a, const TLElement& b);

// Noncrossing half-diagram on n points: cups plus through-strands, where no
// cup encloses a through-strand. partner(i) is 0 on a through-strand.
class LinkPattern {
 public:
  explicit LinkPattern(std::vector<int> partners);

  int point_count() const { return static_cast<int>(partners_.size()); }
  int partner(int point) const { return partners_[point - 1]; }
  int through_strands() const;
  const std::vector<int>& partners() const { return partners_; }

  friend bool operator==(const LinkPattern&, const LinkPattern&) = default;
  friend auto operator<=>(const LinkPattern&, const LinkPattern&) = default;

 private:
  std::vector<int> partners_;
};

// All link patterns on n points with exactly p through-strands, in a fixed
// deterministic order. Requires 0 <= p <= n and n - p even.
std::vector<LinkPattern> link_pattern_module(int n, int p);

// Matrix of the element acting on the link-pattern basis; diagrams that
// reduce the number of through-strands act as zero.
Eigen::MatrixXcd module_matrix(const TLElement& element, int p, const TLParams& params);

// Pairing table of the link-pattern basis: each entry closes one pattern
// against another and evaluates loops, with turnbacks giving zero.
Eigen::MatrixXd gram_matrix(int n, int p, const TLParams& params);

struct RepMatrices {
  int strand_count = 0;
  int through_strands = 0;
  int dimension = 0;
  std::vector<Eigen::MatrixXcd> sigma_images;          // images of sigma_1..sigma_{n-1}
  std::vector<Eigen::MatrixXcd> sigma_inverse_images;  // matching inverses
  bool unitary = false;
};

RepMatrices rep_matrices(int n, int p, const TLParams& params);

// Conjugates by the inverse square root of the Gram matrix. Throws
// DomainError("not unitarizable at this parameter") when the form is not
// positive definite.
RepMatrices unitarize(const RepMatrices& rm, const TLParams& params);

// Ordered product of generator images over the letters of w.
Eigen::MatrixXcd rep_of_word(const BraidWord& w, const RepMatrices& rm);

}  // namespace braidforge
