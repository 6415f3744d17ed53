#include "braidforge/presentation.hpp"

#include <algorithm>
#include <utility>

#include "braidforge/error.hpp"

namespace braidforge {

namespace {

void check_letters(const std::vector<int>& word, int generator_count, const char* what) {
  for (int letter : word) {
    if (letter == 0 || letter > generator_count || letter < -generator_count) {
      throw InputError(std::string(what) + " letter " + std::to_string(letter) +
                       " does not reference a generator in range 1.." +
                       std::to_string(generator_count));
    }
  }
}

using Matrix = std::vector<std::vector<BigInt>>;

// Diagonalizes m in place by unimodular row and column operations and returns
// the positive diagonal entries.
std::vector<BigInt> diagonalize(Matrix m) {
  using boost::multiprecision::abs;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<BigInt> diagonal;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        while (m[i][t] != 0) {
          BigInt q = m[i][t] / m[t][t];
          for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
          if (m[i][t] != 0) std::swap(m[i], m[t]);
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        while (m[t][j] != 0) {
          BigInt q = m[t][j] / m[t][t];
          for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
          if (m[t][j] != 0) {
            for (int i = t; i < rows; ++i) std::swap(m[i][j], m[i][t]);
            dirty = true;
          }
        }
      }
    }
    diagonal.push_back(abs(m[t][t]));
  }
  return diagonal;
}

// Restores the divisibility chain d_1 | d_2 | ... on a positive diagonal by
// replacing adjacent violating pairs with (gcd, lcm).
void enforce_divisibility(std::vector<BigInt>& d) {
  using boost::multiprecision::gcd;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i + 1] % d[i] != 0) {
        BigInt g = gcd(d[i], d[i + 1]);
        BigInt l = d[i] / g * d[i + 1];
        d[i] = g;
        d[i + 1] = l;
        changed = true;
      }
    }
  }
}

}  // namespace

GroupPresentation::GroupPresentation(int generator_count, std::vector<std::vector<int>> relators)
    : generator_count_(generator_count), relators_(std::move(relators)) {
  if (generator_count_ < 0) throw InputError("generator count must be nonnegative");
  for (const std::vector<int>& relator : relators_) {
    check_letters(relator, generator_count_, "relator");
  }
}

bool validate_c_group(const GroupPresentation& p) {
  for (const std::vector<int>& r : p.relators()) {
    if (r.size() != 4) return false;
    if (r[0] <= 0 || r[1] <= 0 || r[2] >= 0 || r[3] >= 0) return false;
    if (r[2] != -r[0]) return false;
  }
  return true;
}

AbelianizationResult abelianization(const GroupPresentation& p) {
  Matrix m(p.relators().size(), std::vector<BigInt>(p.generator_count(), 0));
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    for (int letter : p.relators()[i]) {
      m[i][std::abs(letter) - 1] += letter > 0 ? 1 : -1;
    }
  }
  std::vector<BigInt> diagonal = diagonalize(std::move(m));
  enforce_divisibility(diagonal);
  AbelianizationResult result;
  result.free_rank = p.generator_count() - static_cast<int>(diagonal.size());
  for (BigInt& d : diagonal) {
    if (d > 1) result.torsion_coefficients.push_back(std::move(d));
  }
  return result;
}

GroupPresentation orbifold_quotient(const GroupPresentation& p,
                                    const std::vector<std::vector<int>>& loops,
                                    const std::vector<int>& exponents) {
  if (loops.size() != exponents.size()) {
    throw InputError("loop and exponent lists differ in length");
  }
  std::vector<std::vector<int>> relators = p.relators();
  for (std::size_t j = 0; j < loops.size(); ++j) {
    check_letters(loops[j], p.generator_count(), "loop");
    if (exponents[j] < 2) {
      throw InputError("cone exponents must be at least 2, got " +
                       std::to_string(exponents[j]));
    }
    std::vector<int> power;
    power.reserve(loops[j].size() * static_cast<std::size_t>(exponents[j]));
    for (int k = 0; k < exponents[j]; ++k) {
      power.insert(power.end(), loops[j].begin(), loops[j].end());
    }
    relators.push_back(std::move(power));
  }
  return GroupPresentation(p.generator_count(), std::move(relators));
}

BigInt WreathGroupSpec::order() const {
  if (infinite_base) throw DomainError("wreath product over an infinite base has infinite order");
  BigInt result = 1;
  for (int k = 0; k < copies; ++k) result *= base_order;
  for (int k = 2; k <= copies; ++k) result *= k;
  return result;
}

WreathGroupSpec configuration_braid_group(const AbelianizationResult& pi1, int copies) {
  if (copies < 1) throw InputError("number of points must be at least 1");
  WreathGroupSpec spec;
  spec.copies = copies;
  spec.homotopy_note =
      "For k >= 2 the k-th homotopy group of the n-point configuration space is "
      "the n-fold direct product of the k-th homotopy group of the base space; "
      "the fundamental group is the wreath product recorded here.";
  if (pi1.free_rank == 0 && pi1.torsion_coefficients.empty()) {
    spec.base_order = 1;
  } else if (pi1.free_rank == 0 && pi1.torsion_coefficients.size() == 1) {
    spec.base_order = pi1.torsion_coefficients[0].convert_to<long long>();
  } else if (pi1.free_rank == 1 && pi1.torsion_coefficients.empty()) {
    spec.base_order = 0;
    spec.infinite_base = true;
  } else {
    throw DomainError("unsupported: the fundamental group is not cyclic");
  }
  return spec;
}

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b,
                              const WreathGroupSpec& spec) {
  const int n = spec.copies;
  for (const WreathElement* e : {&a, &b}) {
    if (static_cast<int>(e->labels.size()) != n || e->perm.size() != n) {
      throw InputError("wreath element shape does not match the group");
    }
    if (!spec.infinite_base) {
      for (long long label : e->labels) {
        if (label < 0 || label >= spec.base_order) {
          throw InputError("label " + std::to_string(label) +
                           " is not a residue mod " + std::to_string(spec.base_order));
        }
      }
    }
  }
  WreathElement result{std::vector<long long>(n), compose(a.perm, b.perm)};
  for (int i = 1; i <= n; ++i) {
    long long sum = a.labels[i - 1] + b.labels[a.perm(i) - 1];
    result.labels[i - 1] = spec.infinite_base ? sum : sum % spec.base_order;
  }
  return result;
}

}  // namespace braidforge
