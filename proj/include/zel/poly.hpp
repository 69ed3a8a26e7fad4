#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zel {

/// Polynomial in one variable q with integer coefficients.
/// Coefficients are stored densely, constant term first, with no trailing
/// zero entries (the zero polynomial has an empty coefficient vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long long constant);  // NOLINT: implicit on purpose
  explicit IntPolynomial(std::vector<long long> coeffs);

  static IntPolynomial monomial(long long coeff, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(int exponent) const;
  const std::vector<long long>& coeffs() const { return coeffs_; }

  long long eval(long long q) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(long long c, IntPolynomial p);
  bool operator==(const IntPolynomial& o) const = default;

  /// "c0 + c1*q + c2*q^2" with zero terms omitted; "0" for the zero polynomial.
  std::string str() const;

 private:
  void normalize();
  std::vector<long long> coeffs_;
};

}  // namespace zel
