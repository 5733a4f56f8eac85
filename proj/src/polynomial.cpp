#include "klimm/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace klimm {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::constant(long c) { return monomial(c, 0); }

IntPolynomial IntPolynomial::monomial(long c, int d) {
  std::vector<BigInt> cs(static_cast<std::size_t>(d + 1), 0);
  cs.back() = c;
  return IntPolynomial(std::move(cs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int d) const {
  if (d < 0 || d > degree())
    return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

BigInt IntPolynomial::at_one() const {
  BigInt sum = 0;
  for (const auto &c : coeffs_)
    sum += c;
  return sum;
}

IntPolynomial IntPolynomial::truncated(int max_degree) const {
  if (max_degree < 0)
    return {};
  const auto keep = std::min(coeffs_.size(), static_cast<std::size_t>(max_degree + 1));
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(keep)));
}

IntPolynomial IntPolynomial::shifted(int d) const {
  if (is_zero())
    return {};
  std::vector<BigInt> cs(static_cast<std::size_t>(d), 0);
  cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(cs));
}

IntPolynomial &IntPolynomial::operator+=(const IntPolynomial &other) {
  if (coeffs_.size() < other.coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial &IntPolynomial::operator-=(const IntPolynomial &other) {
  if (coeffs_.size() < other.coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<BigInt> cs(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(cs));
}

IntPolynomial operator*(const BigInt &c, const IntPolynomial &p) {
  std::vector<BigInt> cs = p.coeffs_;
  for (auto &x : cs)
    x *= c;
  return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::operator-() const {
  return BigInt(-1) * *this;
}

std::string IntPolynomial::str() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const BigInt &c = coeffs_[d];
    if (c == 0)
      continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0)
        os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1)
      os << mag.get_str();
    os << 'q';
    if (d > 1)
      os << '^' << d;
  }
  return os.str();
}

} // namespace klimm
