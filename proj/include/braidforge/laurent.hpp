#pragma once

#include <map>

namespace braidforge {

// Laurent polynomial in one variable with integer coefficients, used to keep
// Kauffman-bracket coefficients exact while checking algebra relations.
class LaurentPoly {
 public:
  LaurentPoly() = default;                // zero
  LaurentPoly(long long constant);        // NOLINT: implicit by design
  static LaurentPoly monomial(int exponent, long long coefficient = 1);

  bool is_zero() const { return coefficients_.empty(); }
  // exponent -> coefficient, zero coefficients absent
  const std::map<int, long long>& coefficients() const { return coefficients_; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, long long> coefficients_;
};

}  // namespace braidforge
