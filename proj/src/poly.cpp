#include "zel/poly.hpp"

#include <sstream>

namespace zel {

IntPolynomial::IntPolynomial(long long constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial::IntPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::monomial(long long coeff, int exponent) {
  IntPolynomial p;
  if (coeff != 0) {
    p.coeffs_.assign(exponent + 1, 0);
    p.coeffs_[exponent] = coeff;
  }
  return p;
}

long long IntPolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[exponent];
}

long long IntPolynomial::eval(long long q) const {
  long long acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<long long> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(long long c, IntPolynomial p) {
  if (c == 0) return {};
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << coeffs_[i];
    } else {
      os << coeffs_[i] << "*q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace zel
