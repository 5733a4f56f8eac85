#pragma once

// Kazhdan-Lusztig polynomials P_{x,y}(q) for the symmetric group.

#include "klimm/perm.hpp"
#include "klimm/polynomial.hpp"

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace klimm {

struct PermPair {
  Permutation x;
  Permutation y;
  friend bool operator==(const PermPair &, const PermPair &) = default;
};

struct PermPairHash {
  std::size_t operator()(const PermPair &p) const noexcept {
    const std::hash<Permutation> h;
    return h(p.x) * 0x9e3779b97f4a7c15ULL ^ h(p.y);
  }
};

/// Memo table for KL polynomials of one symmetric group S_n.
///
/// Columns P_{., y} are computed as a unit: once y has been visited every
/// nonzero P_{x,y} is stored, and a missing (x, y) entry means x is not
/// below y. Reads take a shared lock and computation an exclusive one, so a
/// single cache may be shared across worker threads.
class KLCache {
public:
  static constexpr int kFormatVersion = 1;

  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
  };

  KLCache() = default;
  explicit KLCache(int n) : n_(n) {}
  KLCache(const KLCache &) = delete;
  KLCache &operator=(const KLCache &) = delete;

  /// P_{x,y}; computes and memoizes the column of y on first use.
  IntPolynomial get(const Permutation &x, const Permutation &y);

  /// Fills every column of S_n.
  void precompute(int n);

  int n() const { return n_; }
  std::size_t entries() const;
  std::size_t columns() const;
  Stats stats() const { return {hits_.load(), misses_.load()}; }

  /// Writes {format_version, n, columns, entries} as JSON via temp + rename.
  void save(const std::filesystem::path &path) const;
  /// Loads a file written by save(); throws on version or size mismatch.
  void load(const std::filesystem::path &path);

private:
  void bind_size(int n);
  void compute_column(const Permutation &w);
  IntPolynomial lookup_unlocked(const Permutation &x, const Permutation &y) const;

  int n_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<PermPair, IntPolynomial, PermPairHash> table_;
  std::unordered_set<Permutation> done_;
  mutable std::shared_mutex mutex_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

/// P_{x,y}(q); zero iff x is not below y in Bruhat order.
IntPolynomial kl_polynomial(const Permutation &x, const Permutation &y, KLCache &cache);

/// P_{x,y}(1).
BigInt kl_at_one(const Permutation &x, const Permutation &y, KLCache &cache);

/// KL polynomials obtained by inverting the R-polynomial relation
/// q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w}(q) = sum_{x<y<=w} R_{x,y} P_{y,w}.
/// Shares nothing with KLCache beyond Bruhat comparison and polynomial
/// arithmetic; used as a cross-check.
class RPolynomialKL {
public:
  explicit RPolynomialKL(int n);
  IntPolynomial r_polynomial(const Permutation &x, const Permutation &w);
  IntPolynomial kl_polynomial(const Permutation &x, const Permutation &w);

private:
  int n_;
  std::vector<Permutation> elements_;
  std::unordered_map<PermPair, IntPolynomial, PermPairHash> r_memo_;
  std::unordered_map<PermPair, IntPolynomial, PermPairHash> p_memo_;
};

/// One cache per n, persisted as <dir>/s<n>.json when dir is nonempty.
class KLCacheSet {
public:
  explicit KLCacheSet(std::filesystem::path dir = {}) : dir_(std::move(dir)) {}

  /// The cache for S_n, loaded from disk on first use if a file exists.
  KLCache &for_size(int n);
  /// Fills the caches for S_1 .. S_max_n.
  void precompute(int max_n);
  /// Writes every cache that holds entries.
  void save() const;
  std::filesystem::path file_for(int n) const;

private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
  std::map<int, std::unique_ptr<KLCache>> caches_;
};

/// Resolves the cache file path: KLIMM_CACHE overrides the flag value.
std::filesystem::path resolve_cache_path(const std::filesystem::path &flag_value);

} // namespace klimm
