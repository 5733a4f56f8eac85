#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace klimm {

using BigInt = mpz_class;

/// Integer polynomial in q; coeffs()[d] is the coefficient of q^d.
/// The highest stored coefficient is always nonzero (zero polynomial is empty).
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  static IntPolynomial constant(long c);
  /// c * q^d
  static IntPolynomial monomial(long c, int d);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int d) const;
  const std::vector<BigInt> &coeffs() const { return coeffs_; }

  BigInt at_one() const;
  /// Keeps the terms of degree <= max_degree.
  IntPolynomial truncated(int max_degree) const;
  IntPolynomial shifted(int d) const;

  IntPolynomial &operator+=(const IntPolynomial &other);
  IntPolynomial &operator-=(const IntPolynomial &other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial &b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial &b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b);
  friend IntPolynomial operator*(const BigInt &c, const IntPolynomial &p);
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial &a, const IntPolynomial &b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Renders as "1 + q + 2q^2"; the zero polynomial is "0".
  std::string str() const;

private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

} // namespace klimm
