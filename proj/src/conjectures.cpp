#include "klimm/suites.hpp"

#include "suite_common.hpp"

#include <optional>

namespace klimm {

namespace {

using namespace detail;

Permutation increasing(int length) { return Permutation::identity(length); }

template <class T> const T &choose(const std::vector<T> &xs, Rng &rng) {
  std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
  return xs[d(rng)];
}

int uniform(int lo, int hi, Rng &rng) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Imm_v X(R, C) vanishes at three random rational points.
bool identically_zero(const Permutation &v, const Multiset &rows, const Multiset &cols, int m,
                      KLCache &cache, Rng &rng) {
  for (int t = 0; t < 3; ++t) {
    const auto point = random_rational_matrix(m, m, rng);
    if (imm_definition(v, repeat_submatrix(point, rows, cols), cache) != 0)
      return false;
  }
  return true;
}

/// A counterexample must survive recomputation with a fresh KL cache and a
/// fresh positivity certificate before it is reported.
bool reverified(const Permutation &v, const Multiset &rows, const Multiset &cols,
                const RationalMatrix &m, int k) {
  KLCache fresh;
  return is_k_positive(m, k) && imm_definition(v, repeat_submatrix(m, rows, cols), fresh) <= 0;
}

struct Trial {
  Permutation v;
  int k = 0;
  int m = 0;
  Multiset rows, cols;
};

struct SearchSpec {
  const char *name;
  const char *alias;
  const char *hypothesis;
  bool labelled; // R, C drawn from multichoose([m], n); otherwise R = C = [n]
  /// Draws a trial, or nothing when the sampled (n, k) admits no v.
  std::optional<Trial> (*draw)(const SuiteConfig &, int max_n, int max_m, Rng &);
};

std::vector<Permutation> avoiding_increasing(int n, int k) {
  std::vector<Permutation> out;
  for (auto &v : all_permutations(n))
    if (k + 1 > n || !pattern_occurs(v, increasing(k + 1)))
      out.push_back(std::move(v));
  return out;
}

std::optional<Trial> draw_pattern(const SuiteConfig &c, int max_n, int max_m, bool labelled,
                                  Rng &rng) {
  const int n = uniform(2, max_n, rng);
  const int k = c.k > 0 ? c.k : uniform(1, n - 1, rng);
  if (k >= n)
    return std::nullopt;
  const auto candidates = avoiding_increasing(n, k);
  Trial t{choose(candidates, rng), k, n, Multiset::identity(n), Multiset::identity(n)};
  if (labelled) {
    t.m = uniform(n, std::max(n, max_m), rng);
    const auto labels = multichoose(t.m, n);
    t.rows = choose(labels, rng);
    t.cols = choose(labels, rng);
  }
  return t;
}

std::optional<Trial> draw_pattern_plain(const SuiteConfig &c, int max_n, int max_m, Rng &rng) {
  return draw_pattern(c, max_n, max_m, false, rng);
}

std::optional<Trial> draw_pattern_labelled(const SuiteConfig &c, int max_n, int max_m,
                                           Rng &rng) {
  return draw_pattern(c, max_n, max_m, true, rng);
}

std::optional<Trial> draw_sign_control(const SuiteConfig &c, int max_n, int max_m, Rng &rng) {
  const int n = uniform(1, max_n, rng);
  std::vector<Permutation> candidates;
  for (auto &v : all_permutations(n))
    if (avoids_1324_2143(v))
      candidates.push_back(std::move(v));
  Trial t;
  t.v = choose(candidates, rng);
  const int square = largest_square(graph_of_upper_interval(t.v));
  t.k = c.k > 0 ? c.k : uniform(square, n, rng);
  if (t.k < square)
    return std::nullopt;
  t.m = uniform(n, std::max(n, max_m), rng);
  t.k = std::min(t.k, t.m);
  const auto labels = multichoose(t.m, n);
  t.rows = choose(labels, rng);
  t.cols = choose(labels, rng);
  return t;
}

const SearchSpec kSearches[] = {
    {"pattern-positivity", "5.1", "v avoids 12...(k+1); Imm_v evaluated on k-positive matrices",
     false, draw_pattern_plain},
    {"sign-control", "5.2",
     "Imm_v X taken as k-positive when v avoids 1324 and 2143 and k is at least the largest "
     "square of Gamma[v, w0] (the proved sufficient condition)",
     true, draw_sign_control},
    {"pattern-dual-canonical", "5.3",
     "0 < k < n <= m, v avoids 12...(k+1), Imm_v X(R, C) not identically zero (three random "
     "evaluations)",
     true, draw_pattern_labelled},
};

SuiteReport search(const SearchSpec &spec, const SuiteConfig &c) {
  const int max_n = or_default(c.max_n, 4);
  const int max_m = std::max(max_n, or_default(c.max_m, max_n));
  const int trials = or_default(c.samples, 1000);
  if (c.k > 0 && c.k >= max_n && spec.draw != draw_sign_control)
    throw ConfigError("k must be smaller than max_n");
  KLCacheSet caches(resolve_cache_path(c.kl_cache));
  caches.precompute(max_n);

  std::vector<std::size_t> skipped(static_cast<std::size_t>(trials), 0),
      vanishing(static_cast<std::size_t>(trials), 0);
  Json params = Json{{"max_n", max_n}, {"max_m", max_m}, {"k", c.k}, {"samples", trials},
                     {"seed", c.seed}};
  auto r = sweep(
      spec.name, params, static_cast<std::size_t>(trials),
      [&](std::size_t i, CaseOutcome &o) {
        Rng rng(case_seed(c.seed, i));
        const auto trial = spec.draw(c, max_n, max_m, rng);
        if (!trial) {
          ++skipped[i];
          return;
        }
        const auto &[v, k, m, rows, cols] = *trial;
        KLCache &cache = caches.for_size(v.size());
        if (spec.labelled && identically_zero(v, rows, cols, m, cache, rng)) {
          ++vanishing[i];
          o.pass();
          return;
        }
        const auto matrix = gen_k_positive(m, k, rng());
        const Rational value = imm_definition(v, repeat_submatrix(matrix, rows, cols), cache);
        if (value > 0 || !reverified(v, rows, cols, matrix, k)) {
          if (value <= 0)
            o.notes.push_back("trial " + std::to_string(i) + ": candidate failed re-verification");
          o.pass();
          return;
        }
        Json w = witness(v, rows, cols, matrix);
        w["k"] = k;
        w["value"] = format_rational(value);
        o.fail(std::move(w));
      },
      c.execution);
  std::size_t skip = 0, vanish = 0;
  for (std::size_t i = 0; i < skipped.size(); ++i)
    skip += skipped[i], vanish += vanishing[i];
  r.notes.push_back(std::string("hypothesis: ") + spec.hypothesis);
  if (skip > 0)
    r.notes.push_back(std::to_string(skip) + " draws admitted no permutation and were skipped");
  if (spec.labelled)
    r.notes.push_back(std::to_string(vanish) + " trials were identically zero and vacuous");
  r.notes.push_back(r.counterexamples.empty()
                        ? "no counterexample found in " + std::to_string(r.cases_run) + " trials"
                        : std::to_string(r.counterexamples.size()) +
                              " re-verified counterexamples found");
  caches.save();
  return r;
}

} // namespace

std::vector<std::string> search_names() {
  std::vector<std::string> out;
  for (const auto &s : kSearches)
    out.emplace_back(s.name);
  return out;
}

std::string canonical_search(const std::string &name) {
  for (const auto &s : kSearches)
    if (name == s.name || name == s.alias)
      return s.name;
  throw ConfigError("unknown conjecture: " + name);
}

SuiteReport run_search(const std::string &name, const SuiteConfig &config) {
  check_bounds(config);
  const std::string canonical = canonical_search(name);
  for (const auto &s : kSearches)
    if (canonical == s.name)
      return search(s, config);
  throw ConfigError("unknown conjecture: " + name);
}

} // namespace klimm
