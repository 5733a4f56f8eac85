#pragma once

// Kazhdan-Lusztig immanants: the defining sum over S_n, the determinantal
// formula for 1324/2143-avoiding permutations, and checkable forms of the
// sign laws for the dual canonical basis elements Imm_v X(R, C).

#include "klimm/exactmat.hpp"
#include "klimm/grid.hpp"
#include "klimm/klpoly.hpp"
#include "klimm/perm.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace klimm {

/// A violated hypothesis. `kind` separates the failure classes callers report.
class PreconditionError : public std::invalid_argument {
public:
  enum class Kind { pattern, positivity, shape, hypothesis, size };
  PreconditionError(Kind kind, const std::string &what)
      : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

std::string to_string(PreconditionError::Kind kind);

enum class ImmMethod { definition, determinantal, factored };
std::string to_string(ImmMethod m);

struct ImmanantResult {
  Rational value;
  ImmMethod method = ImmMethod::determinantal;
  Permutation v;
  Multiset rows;
  Multiset cols;
  bool admissible = true;
  int largest_square = 0;
};

/// Nonzero terms of Imm_v: the signed coefficient (-1)^{l(w)-l(v)} P_{w0 w, w0 v}(1)
/// for each w with w0 w <= w0 v.
struct ImmanantTerm {
  Permutation w;
  BigInt coefficient;
};
std::vector<ImmanantTerm> kl_immanant_terms(const Permutation &v, KLCache &cache);

/// Sum of coefficient * m_{1,w(1)} ... m_{n,w(n)} over the given terms.
Rational evaluate_terms(const std::vector<ImmanantTerm> &terms, const RationalMatrix &m);

/// Imm_v(M) from the defining sum. n <= 7.
Rational imm_definition(const Permutation &v, const RationalMatrix &m, KLCache &cache);

/// (-1)^{l(v)} det(M restricted to Gamma[v, w0]); v must avoid 1324 and 2143.
Rational imm_determinantal(const Permutation &v, const RationalMatrix &m);

/// (-1)^{l(v)} det(M(R, C) restricted to Gamma[v, w0]) with admissibility
/// and largest square of the labeled graph.
ImmanantResult dual_canonical_eval(const Permutation &v, const Multiset &rows,
                                   const Multiset &cols, const RationalMatrix &m);

/// Splits v along a block-antidiagonal Gamma[v, w0]: the upper block uses
/// rows [1, j] and columns [n-j+1, n].
struct PermutationSplit {
  int upper_size = 0;
  Permutation upper;
  Permutation lower;
};
std::optional<PermutationSplit> split_permutation(const Permutation &v);

/// Imm_v(M) as the product of block immanants, recursing until no block
/// splits further. Throws PreconditionError if Gamma[v, w0] does not split.
Rational factor_block_antidiagonal(const Permutation &v, const RationalMatrix &m);

/// Outcome of comparing Gamma[x, w0], x = v with entry i deleted, against
/// Gamma[v, w0] with row i and column v_i removed.
struct DeletionReport {
  Permutation x;
  bool spanning_corner = false;
  bool det_equal = false;       // det(M|Gamma[x,w0]) == det(M|Gamma[v,w0]_i^{v_i})
  bool graph_minus_q = false;   // Gamma[x,w0] == (Gamma[v,w0] \ Q)_i^{v_i}
  bool graph_plain = false;     // Gamma[x,w0] == Gamma[v,w0]_i^{v_i}
  bool holds() const { return det_equal && graph_minus_q && (spanning_corner || graph_plain); }
};

/// M must be (n-1) x (n-1).
DeletionReport deletion_det_identity(const Permutation &v, int i, const RationalMatrix &m);

struct SignCheck {
  Rational determinant;
  bool expected_zero = false;
  bool holds = false;
};

/// Determinant of M(R, C) restricted to the Young diagram lambda: zero exactly
/// when lambda misses the staircase or is not (R, C)-admissible, otherwise
/// of sign (-1)^{|n^n / lambda|}. Requires durfee(lambda) <= k and M k-positive.
SignCheck young_sign_check(const YoungDiagram &lambda, const Multiset &rows,
                           const Multiset &cols, const RationalMatrix &m, int k);
SignCheck young_sign_check(const YoungDiagram &lambda, const Multiset &rows,
                           const Multiset &cols, const CertifiedMatrix &m, int k);

/// Same law for the skew shape n^n / lambda: zero exactly when lambda is not
/// inside (n-1, ..., 1, 0) or the shape is inadmissible, otherwise of sign
/// (-1)^{|lambda|}. Requires the largest square of n^n / lambda <= k.
SignCheck young_complement_sign_check(const YoungDiagram &lambda, const Multiset &rows,
                                      const Multiset &cols, const RationalMatrix &m, int k);
SignCheck young_complement_sign_check(const YoungDiagram &lambda, const Multiset &rows,
                                      const Multiset &cols, const CertifiedMatrix &m, int k);

/// The complement-shape determinant equals the Young-shape determinant of
/// the antidiagonal transpose w0 M^T w0 with labels (bar C, bar R).
bool complement_reduction_agrees(const YoungDiagram &lambda, const Multiset &rows,
                                 const Multiset &cols, const RationalMatrix &m);

/// For Gamma[v, w0] a Young diagram lambda: |n^n / lambda| == l(v).
bool inversions_equal_complement_boxes(const Permutation &v);
/// For Gamma[v, w0] = n^n / mu: |mu| == l(v).
bool inversions_equal_removed_boxes(const Permutation &v);

struct SignTheoremResult {
  Rational value; // (-1)^{l(v)} det(M(R,C)|Gamma[v,w0])
  bool admissible = false;
  int k = 0;
  bool holds = false;
};

/// value > 0 when admissible and value == 0 when not, for M k-positive with
/// k the largest square of Gamma[v, w0].
SignTheoremResult sign_theorem_check(const Permutation &v, const Multiset &rows,
                                     const Multiset &cols, const RationalMatrix &m);
SignTheoremResult sign_theorem_check(const Permutation &v, const Multiset &rows,
                                     const Multiset &cols, const CertifiedMatrix &m);

enum class ClaimStatus { satisfied, violated, vacuous };
std::string to_string(ClaimStatus s);

/// Signs in the Lewis Carroll expansion of det(M(R,C)|Gamma[v,w0]) on rows
/// a, b = v^{-1}(1) and columns 1, d = v_a.
struct SignProbeReport {
  bool hypotheses_met = false;
  std::string reason; // why the hypotheses failed, if they did
  int a = 0, b = 0, d = 0;
  int sigma = 0;
  ClaimStatus reference = ClaimStatus::vacuous;    // det(A^1_b) det(A^d_a) has sign sigma
  ClaimStatus cross_term = ClaimStatus::vacuous;   // det(A^1_a) det(A^d_b) has sign -sigma
  // det(A^{1,d}_{a,b}) has sign -sigma (-1)^{l(v)}, the sign the Lewis Carroll
  // identity on rows a < b forces once det(A) has sign (-1)^{l(v)}.
  ClaimStatus double_minor = ClaimStatus::vacuous;
  // The same minor against sigma (-1)^{l(v)}; reported, not enforced.
  ClaimStatus double_minor_literal = ClaimStatus::vacuous;
  bool violated() const {
    return reference == ClaimStatus::violated || cross_term == ClaimStatus::violated ||
           double_minor == ClaimStatus::violated;
  }
};

/// Checks the box hypotheses on v (last box at (n, v_n), the one before at
/// (a, v_a) with 1 < v_a < v_n) and evaluates the three sign claims.
SignProbeReport lewis_carroll_sign_probe(const Permutation &v, const Multiset &rows,
                                         const Multiset &cols, const RationalMatrix &m);

/// Box hypotheses only; fills a, b, d on success.
bool sign_probe_applies(const Permutation &v, SignProbeReport &report);

} // namespace klimm
