#pragma once

#include "klimm/suites.hpp"

#include <functional>

namespace klimm::detail {

inline int or_default(int given, int fallback) { return given > 0 ? given : fallback; }

/// Rejects max_n above the cost guard and non-positive bounds.
void check_bounds(const SuiteConfig &config);

SuiteReport merge(std::string suite, Json parameters, std::vector<CaseOutcome> outcomes);

/// Runs f on every index and merges. PreconditionErrors thrown by f count
/// against the case instead of aborting the sweep.
SuiteReport sweep(std::string suite, Json parameters, std::size_t count,
                  const std::function<void(std::size_t, CaseOutcome &)> &f, Execution exec);

std::vector<Permutation> permutations_between(int lo, int hi,
                                              const std::function<bool(const Permutation &)> &keep);

/// A certified matrix pool: pool[k] holds m x m matrices that are k-positive
/// (exactly k-positive when the sampler succeeds).
using MatrixPool = std::vector<std::vector<CertifiedMatrix>>;
MatrixPool make_pool(int m, int per_k, std::uint64_t seed, Execution exec);

/// "pool of N per k; exactly k-positive: k=1 a/N, ...".
std::string describe_pool(const MatrixPool &pool);

} // namespace klimm::detail
