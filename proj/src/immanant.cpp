#include "klimm/immanant.hpp"

#include <algorithm>

namespace klimm {

std::string to_string(PreconditionError::Kind kind) {
  switch (kind) {
  case PreconditionError::Kind::pattern:
    return "pattern";
  case PreconditionError::Kind::positivity:
    return "positivity";
  case PreconditionError::Kind::shape:
    return "shape";
  case PreconditionError::Kind::hypothesis:
    return "hypothesis";
  case PreconditionError::Kind::size:
    return "size";
  }
  return "?";
}

std::string to_string(ImmMethod m) {
  switch (m) {
  case ImmMethod::definition:
    return "definition";
  case ImmMethod::determinantal:
    return "determinantal";
  case ImmMethod::factored:
    return "factored";
  }
  return "?";
}

std::string to_string(ClaimStatus s) {
  switch (s) {
  case ClaimStatus::satisfied:
    return "satisfied";
  case ClaimStatus::violated:
    return "violated";
  case ClaimStatus::vacuous:
    return "vacuous";
  }
  return "?";
}

namespace {

void require_pattern_avoidance(const Permutation &v) {
  if (!avoids_1324_2143(v))
    throw PreconditionError(PreconditionError::Kind::pattern,
                            v.str() + " contains 1324 or 2143; determinantal formula invalid");
}

void require_square_of_size(const RationalMatrix &m, int n, const char *what) {
  if (!m.is_square() || m.rows() != n)
    throw PreconditionError(PreconditionError::Kind::size,
                            std::string(what) + ": matrix must be " + std::to_string(n) + " x " +
                                std::to_string(n));
}

void require_k_positive(const CertifiedMatrix &m, int k) {
  if (k > m.matrix().rows() || (k >= 1 && !m.is_k_positive(k)))
    throw PreconditionError(PreconditionError::Kind::positivity,
                            "matrix is not " + std::to_string(k) + "-positive");
}

int parity_sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

LabeledGrid labeled_graph(const Permutation &v, const Multiset &rows, const Multiset &cols) {
  return graph_of_upper_interval(v).with_labels(rows, cols);
}

} // namespace

std::vector<ImmanantTerm> kl_immanant_terms(const Permutation &v, KLCache &cache) {
  const int n = v.size();
  if (n > 7)
    throw PreconditionError(PreconditionError::Kind::size, "imm_definition limited to n <= 7");
  const Permutation w0 = Permutation::longest(n);
  const Permutation top = compose(w0, v);
  const int len_v = v.length();
  std::vector<ImmanantTerm> terms;
  for (const auto &w : all_permutations(n)) {
    const Permutation x = compose(w0, w);
    if (!bruhat_leq(x, top))
      continue;
    BigInt c = kl_at_one(x, top, cache);
    if (c == 0)
      continue;
    if ((w.length() - len_v) % 2 != 0)
      c = -c;
    terms.push_back({w, std::move(c)});
  }
  return terms;
}

Rational evaluate_terms(const std::vector<ImmanantTerm> &terms, const RationalMatrix &m) {
  Rational total = 0;
  for (const auto &t : terms) {
    Rational product = t.coefficient;
    for (int i = 1; i <= t.w.size() && product != 0; ++i)
      product *= m(i, t.w(i));
    total += product;
  }
  return total;
}

Rational imm_definition(const Permutation &v, const RationalMatrix &m, KLCache &cache) {
  require_square_of_size(m, v.size(), "imm_definition");
  return evaluate_terms(kl_immanant_terms(v, cache), m);
}

Rational imm_determinantal(const Permutation &v, const RationalMatrix &m) {
  require_pattern_avoidance(v);
  require_square_of_size(m, v.size(), "imm_determinantal");
  return parity_sign(v.length()) * det(restrict(m, graph_of_upper_interval(v)));
}

ImmanantResult dual_canonical_eval(const Permutation &v, const Multiset &rows,
                                   const Multiset &cols, const RationalMatrix &m) {
  require_pattern_avoidance(v);
  const int n = v.size();
  if (rows.size() != n || cols.size() != n)
    throw PreconditionError(PreconditionError::Kind::size, "R and C must have n entries");
  if (!m.is_square() || rows.max_label() > m.rows() || cols.max_label() > m.cols())
    throw PreconditionError(PreconditionError::Kind::size, "labels exceed the matrix size");
  const LabeledGrid graph = labeled_graph(v, rows, cols);
  ImmanantResult r;
  r.value = parity_sign(v.length()) * det(restrict(repeat_submatrix(m, rows, cols), graph));
  r.method = ImmMethod::determinantal;
  r.v = v;
  r.rows = rows;
  r.cols = cols;
  r.admissible = is_admissible(graph);
  r.largest_square = largest_square(graph);
  return r;
}

std::optional<PermutationSplit> split_permutation(const Permutation &v) {
  const int n = v.size();
  const auto split = block_antidiagonal_split(graph_of_upper_interval(v));
  if (!split)
    return std::nullopt;
  const int j = split->upper_size;
  std::vector<int> upper, lower;
  for (int i = 1; i <= j; ++i)
    upper.push_back(v(i) - (n - j));
  for (int i = j + 1; i <= n; ++i)
    lower.push_back(v(i));
  PermutationSplit out{j, Permutation(std::move(upper)), Permutation(std::move(lower))};
  if (!graph_of_upper_interval(out.upper).same_cells(split->upper_right) ||
      !graph_of_upper_interval(out.lower).same_cells(split->lower_left))
    throw std::logic_error("block split of " + v.str() + " does not match the block graphs");
  return out;
}

namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> r;
  for (int i = lo; i <= hi; ++i)
    r.push_back(i);
  return r;
}

Rational factor_recursive(const Permutation &v, const RationalMatrix &m) {
  const auto split = split_permutation(v);
  if (!split)
    return imm_determinantal(v, m);
  const int n = v.size();
  const int j = split->upper_size;
  const RationalMatrix upper = submatrix(m, range(1, j), range(n - j + 1, n));
  const RationalMatrix lower = submatrix(m, range(j + 1, n), range(1, n - j));
  return factor_recursive(split->upper, upper) * factor_recursive(split->lower, lower);
}

} // namespace

Rational factor_block_antidiagonal(const Permutation &v, const RationalMatrix &m) {
  require_pattern_avoidance(v);
  require_square_of_size(m, v.size(), "factor_block_antidiagonal");
  if (!split_permutation(v))
    throw PreconditionError(PreconditionError::Kind::shape,
                            "graph of " + v.str() + " is not block-antidiagonal");
  return factor_recursive(v, m);
}

DeletionReport deletion_det_identity(const Permutation &v, int i, const RationalMatrix &m) {
  require_pattern_avoidance(v);
  const int n = v.size();
  if (i < 1 || i > n)
    throw std::out_of_range("deletion_det_identity: index out of range");
  require_square_of_size(m, n - 1, "deletion_det_identity");

  DeletionReport r;
  r.x = delete_entry(v, i);
  const LabeledGrid graph = graph_of_upper_interval(v);
  const LabeledGrid graph_x = graph_of_upper_interval(r.x);
  const LabeledGrid deleted = delete_rows_cols(graph, {i}, {v(i)});

  LabeledGrid without_q = graph;
  for (auto [p, q] : sandwiched_only_by_position(v, i).cells())
    without_q.erase(p, q);

  const auto corners = spanning_corners(v);
  r.spanning_corner = std::find(corners.begin(), corners.end(), Cell{i, v(i)}) != corners.end();
  r.graph_minus_q = graph_x.same_cells(delete_rows_cols(without_q, {i}, {v(i)}));
  r.graph_plain = graph_x.same_cells(deleted);
  r.det_equal = det(restrict(m, graph_x)) == det(restrict(m, deleted));
  return r;
}

namespace {

int sign_of_product(const Rational &a, const Rational &b) { return sign(a) * sign(b); }

SignCheck finish_sign_check(const Rational &d, bool expected_zero, int expected_sign) {
  SignCheck c;
  c.determinant = d;
  c.expected_zero = expected_zero;
  c.holds = expected_zero ? d == 0 : sign(d) == expected_sign;
  return c;
}

void require_labels(const Multiset &rows, const Multiset &cols, int n, const RationalMatrix &m) {
  if (rows.size() != n || cols.size() != n)
    throw PreconditionError(PreconditionError::Kind::size, "R and C must have n entries");
  if (!m.is_square() || rows.max_label() > m.rows() || cols.max_label() > m.cols())
    throw PreconditionError(PreconditionError::Kind::size, "labels exceed the matrix size");
}

YoungDiagram padded(const YoungDiagram &lambda, int n) {
  YoungDiagram out = lambda;
  out.parts.resize(static_cast<std::size_t>(n), 0);
  return out;
}

} // namespace

SignCheck young_sign_check(const YoungDiagram &lambda, const Multiset &rows, const Multiset &cols,
                           const RationalMatrix &m, int k) {
  return young_sign_check(lambda, rows, cols, CertifiedMatrix(m), k);
}

SignCheck young_sign_check(const YoungDiagram &lambda, const Multiset &rows, const Multiset &cols,
                           const CertifiedMatrix &cm, int k) {
  const RationalMatrix &m = cm.matrix();
  const int n = rows.size();
  require_labels(rows, cols, n, m);
  if (lambda.rows() > n || lambda.part(1) > n)
    throw PreconditionError(PreconditionError::Kind::shape, "diagram does not fit in n x n");
  if (durfee(lambda) > k)
    throw PreconditionError(PreconditionError::Kind::shape, "Durfee square exceeds k");
  require_k_positive(cm, k);

  const LabeledGrid shape = young_grid(n, lambda).with_labels(rows, cols);
  const Rational d = det(restrict(repeat_submatrix(m, rows, cols), shape));
  const bool zero = !padded(lambda, n).contains(staircase(n)) || !is_admissible(shape);
  return finish_sign_check(d, zero, parity_sign(n * n - lambda.cells()));
}

SignCheck young_complement_sign_check(const YoungDiagram &lambda, const Multiset &rows,
                                      const Multiset &cols, const RationalMatrix &m, int k) {
  return young_complement_sign_check(lambda, rows, cols, CertifiedMatrix(m), k);
}

SignCheck young_complement_sign_check(const YoungDiagram &lambda, const Multiset &rows,
                                      const Multiset &cols, const CertifiedMatrix &cm, int k) {
  const RationalMatrix &m = cm.matrix();
  const int n = rows.size();
  require_labels(rows, cols, n, m);
  if (lambda.rows() > n || lambda.part(1) > n)
    throw PreconditionError(PreconditionError::Kind::shape, "diagram does not fit in n x n");
  const LabeledGrid shape = complement_grid(n, lambda).with_labels(rows, cols);
  if (largest_square(shape) > k)
    throw PreconditionError(PreconditionError::Kind::shape, "largest square exceeds k");
  require_k_positive(cm, k);

  const Rational d = det(restrict(repeat_submatrix(m, rows, cols), shape));
  YoungDiagram inner = staircase(n - 1);
  inner.parts.push_back(0);
  const bool zero = !inner.contains(padded(lambda, n)) || !is_admissible(shape);
  return finish_sign_check(d, zero, parity_sign(lambda.cells()));
}

bool complement_reduction_agrees(const YoungDiagram &lambda, const Multiset &rows,
                                 const Multiset &cols, const RationalMatrix &m) {
  const int n = rows.size();
  require_labels(rows, cols, n, m);
  const LabeledGrid shape = complement_grid(n, lambda);
  LabeledGrid reflected(n);
  for (auto [i, j] : shape.cells())
    reflected.insert(n + 1 - j, n + 1 - i);
  const auto nu = young_shape(reflected);
  if (!nu)
    return false;
  const int size = m.rows();
  const RationalMatrix flipped = antidiagonal_transpose(m);
  const Multiset rbar = bar(cols, size);
  const Multiset cbar = bar(rows, size);
  const Rational lhs = det(restrict(repeat_submatrix(m, rows, cols), shape));
  const Rational rhs = det(restrict(repeat_submatrix(flipped, rbar, cbar), young_grid(n, *nu)));
  const bool admissible_match =
      is_admissible(shape.with_labels(rows, cols)) ==
      is_admissible(young_grid(n, *nu).with_labels(rbar, cbar));
  return lhs == rhs && admissible_match;
}

bool inversions_equal_complement_boxes(const Permutation &v) {
  require_pattern_avoidance(v);
  const int n = v.size();
  const auto lambda = young_shape(graph_of_upper_interval(v));
  if (!lambda)
    throw PreconditionError(PreconditionError::Kind::shape,
                            "graph of " + v.str() + " is not a Young diagram");
  return n * n - lambda->cells() == v.length();
}

bool inversions_equal_removed_boxes(const Permutation &v) {
  require_pattern_avoidance(v);
  const auto mu = complement_young_shape(graph_of_upper_interval(v));
  if (!mu)
    throw PreconditionError(PreconditionError::Kind::shape,
                            "graph of " + v.str() + " is not a Young diagram complement");
  return mu->cells() == v.length();
}

SignTheoremResult sign_theorem_check(const Permutation &v, const Multiset &rows,
                                     const Multiset &cols, const RationalMatrix &m) {
  return sign_theorem_check(v, rows, cols, CertifiedMatrix(m));
}

SignTheoremResult sign_theorem_check(const Permutation &v, const Multiset &rows,
                                     const Multiset &cols, const CertifiedMatrix &cm) {
  const RationalMatrix &m = cm.matrix();
  require_pattern_avoidance(v);
  require_labels(rows, cols, v.size(), m);
  const LabeledGrid graph = labeled_graph(v, rows, cols);
  SignTheoremResult r;
  r.k = largest_square(graph);
  require_k_positive(cm, r.k);
  r.value = parity_sign(v.length()) * det(restrict(repeat_submatrix(m, rows, cols), graph));
  r.admissible = is_admissible(graph);
  r.holds = r.admissible ? r.value > 0 : r.value == 0;
  return r;
}

bool sign_probe_applies(const Permutation &v, SignProbeReport &report) {
  const int n = v.size();
  if (!avoids_1324_2143(v)) {
    report.reason = "v contains 1324 or 2143";
    return false;
  }
  const auto boxes = bounding_boxes(v);
  if (boxes.size() < 2) {
    report.reason = "fewer than two bounding boxes";
    return false;
  }
  const auto &last = boxes.back().corners;
  if (std::find(last.begin(), last.end(), Cell{n, v(n)}) == last.end()) {
    report.reason = "last bounding box is not B(n, v_n)";
    return false;
  }
  for (auto [a, va] : boxes[boxes.size() - 2].corners) {
    if (a < n && 1 < va && va < v(n)) {
      report.a = a;
      report.d = va;
      report.b = v.inverse()(1);
      return true;
    }
  }
  report.reason = "second-to-last box has no corner (a, v_a) with a < n and 1 < v_a < v_n";
  return false;
}

SignProbeReport lewis_carroll_sign_probe(const Permutation &v, const Multiset &rows,
                                         const Multiset &cols, const RationalMatrix &m) {
  SignProbeReport report;
  if (!sign_probe_applies(v, report))
    return report;
  require_labels(rows, cols, v.size(), m);
  const RationalMatrix a_mat =
      restrict(repeat_submatrix(m, rows, cols), graph_of_upper_interval(v));
  const int a = report.a, b = report.b, d = report.d;
  auto minor_det = [&](std::vector<int> rs, std::vector<int> cs) {
    return det(delete_rows_cols(a_mat, rs, cs));
  };
  const Rational ref_l = minor_det({b}, {1});
  const Rational ref_r = minor_det({a}, {d});
  if (ref_l * ref_r == 0) {
    report.reason = "reference product det(A^1_b) det(A^d_a) is zero";
    return report;
  }
  report.hypotheses_met = true;
  report.sigma = sign_of_product(ref_l, ref_r);
  report.reference = ClaimStatus::satisfied;

  const int cross = sign_of_product(minor_det({a}, {1}), minor_det({b}, {d}));
  report.cross_term = cross == 0              ? ClaimStatus::vacuous
                      : cross == -report.sigma ? ClaimStatus::satisfied
                                               : ClaimStatus::violated;
  const int dbl = sign(minor_det({a, b}, {1, d}));
  const int want = -report.sigma * parity_sign(v.length());
  report.double_minor = dbl == 0      ? ClaimStatus::vacuous
                        : dbl == want ? ClaimStatus::satisfied
                                      : ClaimStatus::violated;
  report.double_minor_literal = dbl == 0       ? ClaimStatus::vacuous
                                : dbl == -want ? ClaimStatus::satisfied
                                               : ClaimStatus::violated;
  return report;
}

} // namespace klimm
