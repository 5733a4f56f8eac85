#include <doctest.h>

#include "klimm/immanant.hpp"
#include "oracles.hpp"

using namespace klimm;

namespace {

const Permutation v2413{2, 4, 1, 3};

Rational antidiagonal_product(const RationalMatrix &m) {
  Rational p = 1;
  for (int i = 1; i <= m.rows(); ++i)
    p *= m(i, m.rows() + 1 - i);
  return p;
}

/// Defining sum over all of S_n with no support pruning.
Rational full_sum(const Permutation &v, const RationalMatrix &m, KLCache &cache) {
  const int n = v.size();
  const auto w0 = Permutation::longest(n);
  Rational total = 0;
  for (const auto &w : all_permutations(n)) {
    Rational term = ((w.length() - v.length()) % 2 == 0 ? 1 : -1) *
                    Rational(kl_at_one(compose(w0, w), compose(w0, v), cache));
    for (int i = 1; i <= n; ++i)
      term *= m(i, w(i));
    total += term;
  }
  return total;
}

} // namespace

TEST_CASE("immanants of the fixture matrix") {
  KLCache cache;
  const auto m = two_positive_fixture();
  CHECK(imm_definition(v2413, m, cache) == 39);
  CHECK(imm_determinantal(v2413, m) == 39);
  CHECK(-oracle::leibniz_det(restrict(m, graph_of_upper_interval(v2413))) == 39);
  CHECK(imm_definition(Permutation::identity(4), m, cache) == det(m));
  CHECK(imm_determinantal(Permutation::identity(4), m) == det(m));
  CHECK(imm_definition(Permutation::longest(4), m, cache) == antidiagonal_product(m));
  CHECK(imm_determinantal(Permutation::longest(4), m) == antidiagonal_product(m));
  CHECK_THROWS_AS(imm_determinantal(Permutation::parse("1324"), m), PreconditionError);
}

TEST_CASE("term support equals the full defining sum") {
  Rng rng(2);
  for (int n = 1; n <= 4; ++n) {
    KLCache cache;
    for (const auto &v : all_permutations(n)) {
      const auto m = random_rational_matrix(n, n, rng, 100);
      REQUIRE(imm_definition(v, m, cache) == full_sum(v, m, cache));
    }
  }
}

TEST_CASE("determinantal formula on pattern-avoiding permutations") {
  Rng rng(4);
  for (int n = 1; n <= 5; ++n) {
    KLCache cache;
    for (const auto &v : all_permutations(n)) {
      if (!avoids_1324_2143(v))
        continue;
      for (int t = 0; t < 3; ++t) {
        const auto m = random_rational_matrix(n, n, rng);
        REQUIRE(imm_definition(v, m, cache) == imm_determinantal(v, m));
      }
    }
  }
}

TEST_CASE("determinantal formula fails on pattern-containing permutations") {
  KLCache cache;
  Rng rng(8);
  for (const auto *s : {"1324", "2143"}) {
    const auto v = Permutation::parse(s);
    const auto m = random_rational_matrix(4, 4, rng);
    const Rational det_form =
        (v.length() % 2 == 0 ? 1 : -1) * det(restrict(m, graph_of_upper_interval(v)));
    CHECK(det_form != imm_definition(v, m, cache));
  }
}

TEST_CASE("dual canonical evaluation") {
  const auto m = two_positive_fixture();
  const auto id = Multiset::identity(4);
  const auto r = dual_canonical_eval(v2413, id, id, m);
  CHECK(r.value == 39);
  CHECK(r.admissible);
  CHECK(r.largest_square == 2);
  const auto z = dual_canonical_eval(v2413, Multiset{1, 2, 2, 3}, Multiset{1, 2, 2, 3}, m);
  CHECK(z.value == 0);
  CHECK_FALSE(z.admissible);
  CHECK(dual_canonical_eval(Permutation::identity(2), Multiset{1, 1}, Multiset{1, 2}, m).value == 0);
  CHECK_THROWS_AS(dual_canonical_eval(v2413, Multiset{1, 2, 3, 5}, id, m), PreconditionError);
}

TEST_CASE("dual canonical evaluation matches the defining sum on M(R, C)") {
  KLCache cache;
  Rng rng(6);
  const auto labels = multichoose(4, 3);
  for (const auto &v : all_permutations(3)) {
    for (std::size_t t = 0; t < labels.size(); t += 4)
      for (std::size_t u = 0; u < labels.size(); u += 5) {
        const auto m = random_rational_matrix(4, 4, rng, 100);
        REQUIRE(dual_canonical_eval(v, labels[t], labels[u], m).value ==
                imm_definition(v, repeat_submatrix(m, labels[t], labels[u]), cache));
      }
  }
}

TEST_CASE("block factorization") {
  Rng rng(9);
  const auto v = Permutation::parse("74586132");
  const auto split = split_permutation(v);
  REQUIRE(split.has_value());
  CHECK(split->upper == Permutation::parse("41253"));
  CHECK(split->lower == Permutation::parse("132"));
  for (int t = 0; t < 3; ++t) {
    const auto m = random_rational_matrix(8, 8, rng);
    CHECK(factor_block_antidiagonal(v, m) == imm_determinantal(v, m));
  }
  const auto m4 = random_rational_matrix(4, 4, rng);
  CHECK(factor_block_antidiagonal(Permutation::longest(4), m4) == antidiagonal_product(m4));
  const auto m2 = random_rational_matrix(2, 2, rng);
  CHECK(factor_block_antidiagonal(Permutation{2, 1}, m2) == m2(1, 2) * m2(2, 1));
  CHECK_THROWS_AS(factor_block_antidiagonal(Permutation::identity(3), m2), PreconditionError);
}

TEST_CASE("deletion identity") {
  Rng rng(12);
  const auto v = Permutation::parse("62785314");
  const auto r = deletion_det_identity(v, 2, random_rational_matrix(7, 7, rng));
  CHECK(r.x == Permutation::parse("5674213"));
  CHECK(r.spanning_corner);
  CHECK(r.holds());
  for (int i = 1; i <= 4; ++i)
    CHECK(deletion_det_identity(Permutation::longest(4), i, random_rational_matrix(3, 3, rng)).holds());
  for (const auto &w : all_permutations(5)) {
    if (!avoids_1324_2143(w))
      continue;
    for (int i = 1; i <= 5; ++i)
      REQUIRE(deletion_det_identity(w, i, random_rational_matrix(4, 4, rng)).holds());
  }
}

TEST_CASE("Young-shape sign laws") {
  const auto tp = gen_totally_positive(4, 3);
  const auto id = Multiset::identity(4);
  const auto full = young_sign_check(YoungDiagram{{4, 4, 4, 4}}, id, id, tp, 4);
  CHECK(full.holds);
  CHECK(full.determinant == det(tp));
  const auto m3 = gen_totally_positive(3, 5);
  const auto id3 = Multiset::identity(3);
  const auto a = young_sign_check(YoungDiagram{{3, 3, 1}}, id3, id3, m3, 3);
  CHECK(a.holds);
  CHECK_FALSE(a.expected_zero);
  const auto b = young_sign_check(YoungDiagram{{2, 2, 2}}, id3, id3, m3, 3);
  CHECK(b.holds);
  CHECK(b.determinant == 0);
  const auto c = young_complement_sign_check(YoungDiagram{}, id, id, tp, 4);
  CHECK(c.holds);
  CHECK(c.determinant > 0);
  CHECK_THROWS_AS(young_sign_check(YoungDiagram{{4, 4, 4, 4}}, id, id, two_positive_fixture(), 4),
                  PreconditionError);
  CHECK(complement_reduction_agrees(YoungDiagram{{3, 1}}, id, id, tp));
}

TEST_CASE("inversions count boxes for Young-shaped graphs") {
  int young = 0, complement = 0;
  for (const auto &v : all_permutations(6)) {
    if (!avoids_1324_2143(v))
      continue;
    const auto g = graph_of_upper_interval(v);
    if (young_shape(g)) {
      ++young;
      REQUIRE(inversions_equal_complement_boxes(v));
    }
    if (complement_young_shape(g)) {
      ++complement;
      REQUIRE(inversions_equal_removed_boxes(v));
    }
  }
  CHECK(young > 0);
  CHECK(complement > 0);
  CHECK_THROWS_AS(inversions_equal_complement_boxes(Permutation::longest(3)), PreconditionError);
}

TEST_CASE("sign theorem on the fixture") {
  const auto m = two_positive_fixture();
  const auto id = Multiset::identity(4);
  const auto r = sign_theorem_check(v2413, id, id, m);
  CHECK(r.holds);
  CHECK(r.value == 39);
  CHECK(r.k == 2);
  const auto z = sign_theorem_check(v2413, Multiset{1, 2, 2, 3}, Multiset{1, 2, 2, 3}, m);
  CHECK(z.holds);
  CHECK_FALSE(z.admissible);
  CHECK_THROWS_AS(sign_theorem_check(Permutation::identity(4), id, id, m), PreconditionError);
}

TEST_CASE("Lewis Carroll sign probe") {
  SignProbeReport r;
  CHECK(sign_probe_applies(v2413, r));
  CHECK(r.a == 1);
  CHECK(r.b == 3);
  CHECK(r.d == 2);
  SignProbeReport none;
  CHECK_FALSE(sign_probe_applies(Permutation::identity(3), none));
  CHECK_FALSE(none.reason.empty());

  const auto id = Multiset::identity(4);
  const auto p = lewis_carroll_sign_probe(v2413, id, id, two_positive_fixture());
  CHECK(p.hypotheses_met);
  CHECK_FALSE(p.violated());
  CHECK(p.double_minor == ClaimStatus::satisfied);
  CHECK(p.double_minor_literal == ClaimStatus::violated);
}
