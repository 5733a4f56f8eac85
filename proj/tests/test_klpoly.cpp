#include <doctest.h>

#include "klimm/klpoly.hpp"

#include <cstdlib>
#include <filesystem>

using namespace klimm;

TEST_CASE("polynomial arithmetic") {
  const auto p = IntPolynomial::constant(1) + IntPolynomial::monomial(1, 1);
  CHECK(p.str() == "1 + q");
  CHECK((p * p).str() == "1 + 2q + q^2");
  CHECK((p - p).is_zero());
  CHECK((p - p).str() == "0");
  CHECK((p - p).degree() == -1);
  CHECK(p.at_one() == 2);
  CHECK((p * p).truncated(1) == p + IntPolynomial::monomial(1, 1));
  CHECK(p.shifted(2).str() == "q^2 + q^3");
}

TEST_CASE("basic KL values") {
  KLCache cache;
  CHECK(kl_polynomial(Permutation::parse("1234"), Permutation::parse("1234"), cache).str() == "1");
  CHECK(kl_polynomial(Permutation::parse("4321"), Permutation::parse("1234"), cache).is_zero());
  CHECK(kl_polynomial(Permutation::parse("1324"), Permutation::parse("3412"), cache).str() ==
        "1 + q");
  CHECK(kl_at_one(Permutation::parse("1324"), Permutation::parse("3412"), cache) == 2);
  CHECK(kl_polynomial(Permutation::parse("2143"), Permutation::parse("4231"), cache).str() ==
        "1 + q");
  CHECK_THROWS_AS(kl_polynomial(Permutation::identity(3), Permutation::identity(4), cache),
                  SizeMismatch);
}

TEST_CASE("KL invariants on S_5") {
  KLCache cache;
  cache.precompute(5);
  const auto perms = all_permutations(5);
  for (const auto &x : perms)
    for (const auto &y : perms) {
      const auto p = cache.get(x, y);
      if (!bruhat_leq(x, y)) {
        REQUIRE(p.is_zero());
        continue;
      }
      const int gap = y.length() - x.length();
      REQUIRE(p.coeff(0) == 1);
      REQUIRE(2 * p.degree() <= gap - 1 + (gap == 0 ? 1 : 0));
      for (const auto &c : p.coeffs())
        REQUIRE(c >= 0);
      if (gap <= 2)
        REQUIRE(p == IntPolynomial::constant(1));
    }
}

TEST_CASE("two KL routes agree on S_4") {
  KLCache cache;
  RPolynomialKL other(4);
  for (const auto &x : all_permutations(4))
    for (const auto &y : all_permutations(4))
      REQUIRE(other.kl_polynomial(x, y) == cache.get(x, y));
}

TEST_CASE("R-polynomial values") {
  RPolynomialKL r(3);
  // R_{e, s} = q - 1 and R_{x, x} = 1.
  CHECK(r.r_polynomial(Permutation::parse("123"), Permutation::parse("213")).str() == "-1 + q");
  CHECK(r.r_polynomial(Permutation::parse("213"), Permutation::parse("213")).str() == "1");
  CHECK(r.r_polynomial(Permutation::parse("213"), Permutation::parse("123")).is_zero());
}

TEST_CASE("cache lookups are stable and persist") {
  const auto dir = std::filesystem::temp_directory_path() / "klimm_cache_test";
  std::filesystem::remove_all(dir);
  {
    KLCacheSet set(dir);
    set.precompute(4);
    set.save();
  }
  CHECK(std::filesystem::exists(dir / "s4.json"));
  KLCacheSet reloaded(dir);
  KLCache &c4 = reloaded.for_size(4);
  const auto before = c4.entries();
  CHECK(before > 0);
  KLCache fresh;
  for (const auto &x : all_permutations(4))
    for (const auto &y : all_permutations(4))
      REQUIRE(c4.get(x, y) == fresh.get(x, y));
  CHECK(c4.entries() == before);
  CHECK(c4.stats().hits > 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache path environment override") {
  ::setenv("KLIMM_CACHE", "/tmp/from-env", 1);
  CHECK(resolve_cache_path("flag") == std::filesystem::path("/tmp/from-env"));
  ::unsetenv("KLIMM_CACHE");
  CHECK(resolve_cache_path("flag") == std::filesystem::path("flag"));
}
