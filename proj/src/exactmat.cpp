#include "klimm/exactmat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klimm {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), Rational(0)) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 1; i <= n; ++i)
    m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>> &rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  RationalMatrix m(r, c);
  for (int i = 1; i <= r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 1; j <= c; ++j)
      m(i, j) = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (int i = 1; i <= a.rows_; ++i)
    for (int k = 1; k <= a.cols_; ++k) {
      const Rational &x = a(i, k);
      if (x == 0)
        continue;
      for (int j = 1; j <= b.cols_; ++j)
        c(i, j) += x * b(k, j);
    }
  return c;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= rows_; ++i) {
    os << (i > 1 ? ", [" : "[");
    for (int j = 1; j <= cols_; ++j)
      os << (j > 1 ? ", " : "") << format_rational((*this)(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

void require_square(const RationalMatrix &m, const char *what) {
  if (!m.is_square())
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

} // namespace

Rational det(const RationalMatrix &m) {
  require_square(m, "det");
  const int n = m.rows();
  if (n == 0)
    return 1;

  // Scale each row by the lcm of its denominators.
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(n),
                                        std::vector<mpz_class>(static_cast<std::size_t>(n)));
  mpz_class scale = 1;
  for (int i = 1; i <= n; ++i) {
    mpz_class l = 1;
    for (int j = 1; j <= n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    for (int j = 1; j <= n; ++j) {
      const Rational &x = m(i, j);
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          x.get_num() * (l / x.get_den());
    }
  }

  int sgn = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::size_t pivot = k;
    while (pivot < a.size() && a[pivot][k] == 0)
      ++pivot;
    if (pivot == a.size())
      return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      for (std::size_t j = k + 1; j < a.size(); ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational result(sgn * a.back().back(), scale);
  result.canonicalize();
  return result;
}

Rational det_cofactor(const RationalMatrix &m) {
  require_square(m, "det_cofactor");
  const int n = m.rows();
  if (n == 0)
    return 1;
  if (n == 1)
    return m(1, 1);
  Rational total = 0;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 2);
  for (int j = 1; j <= n; ++j) {
    if (m(1, j) == 0)
      continue;
    std::vector<int> cols;
    for (int c = 1; c <= n; ++c)
      if (c != j)
        cols.push_back(c);
    const Rational term = m(1, j) * det_cofactor(submatrix(m, rest, cols));
    total += (j % 2 == 1) ? term : Rational(-term);
  }
  return total;
}

RationalMatrix submatrix(const RationalMatrix &m, const std::vector<int> &rows,
                         const std::vector<int> &cols) {
  RationalMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1 || rows[i] > m.rows())
      throw std::out_of_range("submatrix: row index out of range");
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] < 1 || cols[j] > m.cols())
        throw std::out_of_range("submatrix: column index out of range");
      s(static_cast<int>(i + 1), static_cast<int>(j + 1)) = m(rows[i], cols[j]);
    }
  }
  return s;
}

Rational minor(const RationalMatrix &m, const std::vector<int> &rows,
               const std::vector<int> &cols) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor: row and column sets differ in size");
  return det(submatrix(m, rows, cols));
}

RationalMatrix restrict(const RationalMatrix &m, const LabeledGrid &grid) {
  if (!m.is_square() || m.rows() != grid.size())
    throw std::invalid_argument("restrict: matrix and grid sizes differ");
  RationalMatrix r(m.rows(), m.cols());
  for (auto [i, j] : grid.cells())
    r(i, j) = m(i, j);
  return r;
}

RationalMatrix repeat_submatrix(const RationalMatrix &m, const Multiset &rows,
                                const Multiset &cols) {
  if (rows.max_label() > m.rows() || cols.max_label() > m.cols())
    throw std::out_of_range("repeat_submatrix: label exceeds matrix size");
  RationalMatrix s(rows.size(), cols.size());
  for (int i = 1; i <= rows.size(); ++i)
    for (int j = 1; j <= cols.size(); ++j)
      s(i, j) = m(rows[i], cols[j]);
  return s;
}

RationalMatrix delete_rows_cols(const RationalMatrix &m, const std::vector<int> &rows,
                                const std::vector<int> &cols) {
  std::vector<int> keep_r, keep_c;
  for (int i = 1; i <= m.rows(); ++i)
    if (std::find(rows.begin(), rows.end(), i) == rows.end())
      keep_r.push_back(i);
  for (int j = 1; j <= m.cols(); ++j)
    if (std::find(cols.begin(), cols.end(), j) == cols.end())
      keep_c.push_back(j);
  return submatrix(m, keep_r, keep_c);
}

namespace {

/// Calls f on every s-subset of [n] (increasing order); stops when f returns false.
template <class F> bool for_each_subset(int n, int s, F &&f) {
  std::vector<int> idx(static_cast<std::size_t>(s));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    if (!f(idx))
      return false;
    int i = s - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - s + i + 1)
      --i;
    if (i < 0)
      return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

bool all_minors_positive(const RationalMatrix &m, int s) {
  return for_each_subset(m.rows(), s, [&](const std::vector<int> &rows) {
    return for_each_subset(m.cols(), s, [&](const std::vector<int> &cols) {
      return minor(m, rows, cols) > 0;
    });
  });
}

} // namespace

bool is_k_positive(const RationalMatrix &m, int k) {
  require_square(m, "is_k_positive");
  if (k < 1 || k > m.rows())
    throw std::out_of_range("is_k_positive: k must lie in [1, n]");
  for (int s = 1; s <= k; ++s)
    if (!all_minors_positive(m, s))
      return false;
  return true;
}

int max_positivity_order(const RationalMatrix &m) {
  require_square(m, "max_positivity_order");
  int k = 0;
  while (k < m.rows() && all_minors_positive(m, k + 1))
    ++k;
  return k;
}

RationalMatrix antidiagonal_transpose(const RationalMatrix &m) {
  require_square(m, "antidiagonal_transpose");
  const int n = m.rows();
  RationalMatrix t(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      t(i, j) = m(n + 1 - j, n + 1 - i);
  return t;
}

Rational lewis_carroll_residual(const RationalMatrix &m, int a, int a2, int b, int b2) {
  require_square(m, "lewis_carroll_residual");
  const int n = m.rows();
  if (n < 2 || !(1 <= a && a < a2 && a2 <= n) || !(1 <= b && b < b2 && b2 <= n))
    throw std::out_of_range("lewis_carroll_residual: need 1 <= a < a' <= n and 1 <= b < b' <= n");
  const Rational lhs = det(m) * det(delete_rows_cols(m, {a, a2}, {b, b2}));
  const Rational rhs = det(delete_rows_cols(m, {a}, {b})) * det(delete_rows_cols(m, {a2}, {b2})) -
                       det(delete_rows_cols(m, {a}, {b2})) * det(delete_rows_cols(m, {a2}, {b}));
  return lhs - rhs;
}

RationalMatrix two_positive_fixture() {
  return RationalMatrix::from_rows({{22, 18, 6, 3}, {8, 7, 3, 2}, {2, 2, 1, 2}, {1, 2, 2, 6}});
}

Rational random_rational(Rng &rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  const long p = num(rng);
  const long q = den(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

RationalMatrix random_rational_matrix(int rows, int cols, Rng &rng, long bound) {
  RationalMatrix m(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      m(i, j) = random_rational(rng, bound);
  return m;
}

namespace {

/// Positive rational with log-spread magnitude in roughly [1/20, 20].
Rational positive_parameter(Rng &rng) {
  std::uniform_int_distribution<long> d(1, 20);
  const long p = d(rng);
  const long q = d(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Reduced word s_1 (s_2 s_1) (s_3 s_2 s_1) ... of the longest element.
std::vector<int> longest_reduced_word(int n) {
  std::vector<int> word;
  for (int top = 1; top < n; ++top)
    for (int i = top; i >= 1; --i)
      word.push_back(i);
  return word;
}

} // namespace

RationalMatrix gen_totally_positive(int n, std::uint64_t seed) {
  if (n < 1)
    throw std::invalid_argument("gen_totally_positive: n >= 1");
  Rng rng(seed);
  const auto word = longest_reduced_word(n);
  RationalMatrix result = RationalMatrix::identity(n);
  for (int i : word) {
    RationalMatrix lower = RationalMatrix::identity(n);
    lower(i + 1, i) = positive_parameter(rng);
    result = result * lower;
  }
  RationalMatrix diag = RationalMatrix::identity(n);
  for (int i = 1; i <= n; ++i)
    diag(i, i) = positive_parameter(rng);
  result = result * diag;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    RationalMatrix upper = RationalMatrix::identity(n);
    upper(*it, *it + 1) = positive_parameter(rng);
    result = result * upper;
  }
  return result;
}

std::optional<RationalMatrix> gen_k_positive_not_higher(int n, int k, std::uint64_t seed,
                                                        const KPositiveOptions &opts) {
  if (k < 1 || k >= n)
    throw std::out_of_range("gen_k_positive_not_higher: need 1 <= k < n");
  Rng rng(seed);
  std::uniform_int_distribution<long> offset(-1000, 1000);
  for (int trial = 0; trial < opts.budget; ++trial) {
    RationalMatrix m = gen_totally_positive(n, rng());
    Rational smallest = m(1, 1);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        smallest = std::min(smallest, m(i, j));
    const Rational eps = smallest * opts.magnitude;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        m(i, j) += eps * Rational(offset(rng)) / 1000;
    if (is_k_positive(m, k) && !is_k_positive(m, k + 1))
      return m;
  }
  return std::nullopt;
}

RationalMatrix gen_k_positive(int n, int k, std::uint64_t seed) {
  if (k < n)
    if (auto m = gen_k_positive_not_higher(n, k, seed))
      return *m;
  return gen_totally_positive(n, seed);
}

Rational parse_rational(const std::string &text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("bad rational: " + text);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational &r) { return r.get_str(); }

int sign(const Rational &r) { return sgn(r); }

} // namespace klimm
