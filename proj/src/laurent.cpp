#include "braidforge/laurent.hpp"

namespace braidforge {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) coefficients_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(int exponent, long long coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.coefficients_[exponent] = coefficient;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [exp, c] : coefficients_) out.coefficients_[exp] = -c;
  return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [exp, c] : b.coefficients_) {
    long long sum = (out.coefficients_[exp] += c);
    if (sum == 0) out.coefficients_.erase(exp);
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coefficients_) {
    for (const auto& [eb, cb] : b.coefficients_) {
      long long sum = (out.coefficients_[ea + eb] += ca * cb);
      if (sum == 0) out.coefficients_.erase(ea + eb);
    }
  }
  return out;
}

}  // namespace braidforge
