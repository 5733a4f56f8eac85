#pragma once

// Exact rational matrices: determinants, minors, positivity tests and
// generators of k-positive inputs.

#include "klimm/grid.hpp"
#include "klimm/multiset.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace klimm {

using Rational = mpq_class;
using Rng = std::mt19937_64;

/// Dense row-major matrix of exact rationals; indices are 1-based.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>> &rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational &operator()(int i, int j) { return data_[index(i, j)]; }
  const Rational &operator()(int i, int j) const { return data_[index(i, j)]; }

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
  friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

  std::string str() const;

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * cols_ + (j - 1));
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// row denominators. The 0 x 0 determinant is 1.
Rational det(const RationalMatrix &m);

/// Determinant by Laplace expansion along the first row. Exponential; for
/// cross-checking det() on small matrices.
Rational det_cofactor(const RationalMatrix &m);

/// Rows and columns selected in the given (1-based) order.
RationalMatrix submatrix(const RationalMatrix &m, const std::vector<int> &rows,
                         const std::vector<int> &cols);

Rational minor(const RationalMatrix &m, const std::vector<int> &rows,
               const std::vector<int> &cols);

/// Entries outside the grid set to zero.
RationalMatrix restrict(const RationalMatrix &m, const LabeledGrid &grid);

/// M(R, C): entry (i, j) is m_{r_i, c_j}.
RationalMatrix repeat_submatrix(const RationalMatrix &m, const Multiset &rows,
                                const Multiset &cols);

/// M with rows I and columns J removed.
RationalMatrix delete_rows_cols(const RationalMatrix &m, const std::vector<int> &rows,
                                const std::vector<int> &cols);

/// Every minor of size at most k is strictly positive.
bool is_k_positive(const RationalMatrix &m, int k);

/// Largest k with is_k_positive(m, k), or 0.
int max_positivity_order(const RationalMatrix &m);

/// A square matrix with its positivity order computed once up front.
class CertifiedMatrix {
public:
  explicit CertifiedMatrix(RationalMatrix m)
      : matrix_(std::move(m)), order_(max_positivity_order(matrix_)) {}
  const RationalMatrix &matrix() const { return matrix_; }
  int order() const { return order_; }
  bool is_k_positive(int k) const { return k >= 1 && k <= order_; }

private:
  RationalMatrix matrix_;
  int order_;
};

/// w0 M^T w0: entry (i, j) becomes m_{n+1-j, n+1-i}.
RationalMatrix antidiagonal_transpose(const RationalMatrix &m);

/// det(M) det(M_{a,a'}^{b,b'}) - [det(M_a^b) det(M_{a'}^{b'}) - det(M_a^{b'}) det(M_{a'}^b)].
Rational lewis_carroll_residual(const RationalMatrix &m, int a, int a2, int b, int b2);

/// The 4 x 4 matrix that is 2-positive but has a negative leading 3 x 3 minor.
RationalMatrix two_positive_fixture();

/// Uniform rational num/den with |num| <= bound and 1 <= den <= bound.
Rational random_rational(Rng &rng, long bound);
RationalMatrix random_rational_matrix(int rows, int cols, Rng &rng, long bound = 1000000);

/// Product of lower-bidiagonal elementary factors along a reduced word of
/// w0, a positive diagonal, and upper-bidiagonal factors along the same word,
/// with positive rational parameters drawn from seed.
RationalMatrix gen_totally_positive(int n, std::uint64_t seed);

struct KPositiveOptions {
  int budget = 10000;
  /// Perturbation magnitude as a fraction of the smallest TP entry.
  Rational magnitude{1, 10};
};

/// A matrix that is k-positive but not (k+1)-positive, found by perturbing
/// totally positive matrices and verifying exactly. Absent if the budget runs out.
std::optional<RationalMatrix> gen_k_positive_not_higher(int n, int k, std::uint64_t seed,
                                                        const KPositiveOptions &opts = {});

/// A verified k-positive n x n matrix: exactly k-positive when the sampler
/// succeeds (or k = n), otherwise a totally positive one.
RationalMatrix gen_k_positive(int n, int k, std::uint64_t seed);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string &text);
std::string format_rational(const Rational &r);

int sign(const Rational &r);

} // namespace klimm
