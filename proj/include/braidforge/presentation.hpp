#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "braidforge/braid.hpp"

namespace braidforge {

using BigInt = boost::multiprecision::cpp_int;

// Finite presentation with generators x_1..x_g. A relator is a word in the
// generators, stored as signed indices: +i for x_i, -i for x_i^{-1}.
class GroupPresentation {
 public:
  GroupPresentation(int generator_count, std::vector<std::vector<int>> relators);

  int generator_count() const { return generator_count_; }
  const std::vector<std::vector<int>>& relators() const { return relators_; }

 private:
  int generator_count_;
  std::vector<std::vector<int>> relators_;
};

// True iff every relator is literally the four-letter conjugation
// x_a x_b x_a^{-1} x_c^{-1}.
bool validate_c_group(const GroupPresentation& p);

struct AbelianizationResult {
  int free_rank = 0;
  // Nonunit elementary divisors, each dividing the next.
  std::vector<BigInt> torsion_coefficients;

  bool operator==(const AbelianizationResult&) const = default;
};

// Smith normal form of the relator exponent-sum matrix, computed with exact
// integer arithmetic.
AbelianizationResult abelianization(const GroupPresentation& p);

// Quotient by the normal closure of loop_j^{exponent_j}: appends each loop
// word repeated exponent_j times as a new relator. Exponents must be >= 2.
GroupPresentation orbifold_quotient(const GroupPresentation& p,
                                    const std::vector<std::vector<int>>& loops,
                                    const std::vector<int>& exponents);

// Wreath product C_nu wr S_n (or Z wr S_n when the base is infinite cyclic).
// base_order is 0 exactly when infinite_base is set; 1 encodes a trivial base.
struct WreathGroupSpec {
  long long base_order = 1;
  int copies = 1;
  bool infinite_base = false;
  std::string homotopy_note;

  // nu^n * n!. Throws DomainError when the base is infinite cyclic.
  BigInt order() const;
};

// Braid group of n points in a space with cyclic fundamental group: the base
// of the wreath product is that cyclic group. Throws DomainError when the
// abelianization is not cyclic, since only cyclic bases are supported.
WreathGroupSpec configuration_braid_group(const AbelianizationResult& pi1, int copies);

struct WreathElement {
  std::vector<long long> labels;
  Permutation perm;

  bool operator==(const WreathElement&) const = default;
};

// Semidirect-product law: result labels are labels_a[i] + labels_b[perm_a(i)]
// reduced mod the base order (no reduction for an infinite base), and the
// permutation is perm_a followed by perm_b.
WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b,
                              const WreathGroupSpec& spec);

}  // namespace braidforge
