#include "klimm/suites.hpp"

#include "klimm/fixtures.hpp"
#include "suite_common.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace klimm {

Json SuiteReport::to_json() const {
  return Json{{"suite", suite},
              {"parameters", parameters},
              {"cases_run", cases_run},
              {"cases_passed", cases_passed},
              {"precondition_errors", precondition_errors},
              {"counterexamples", counterexamples},
              {"notes", notes}};
}

std::string SuiteReport::to_csv() const {
  std::ostringstream os;
  os << "suite,max_n,max_m,k,samples,seed,cases_run,cases_passed,precondition_errors,"
        "counterexamples\n";
  auto param = [&](const char *key) {
    return parameters.contains(key) ? parameters.at(key).dump() : std::string{};
  };
  os << suite << ',' << param("max_n") << ',' << param("max_m") << ',' << param("k") << ','
     << param("samples") << ',' << param("seed") << ',' << cases_run << ',' << cases_passed
     << ',' << precondition_errors << ',' << counterexamples.size() << '\n';
  return os.str();
}

Json witness(const Permutation &v, const Multiset &rows, const Multiset &cols,
             const RationalMatrix &m) {
  return Json{{"v", v.str()}, {"R", to_json(rows)}, {"C", to_json(cols)}, {"M", to_json(m)}};
}

namespace detail {

void check_bounds(const SuiteConfig &c) {
  if (c.max_n > kMaxN)
    throw ConfigError("max_n is limited to " + std::to_string(kMaxN));
  if (c.max_n < 0 || c.max_m < 0 || c.k < 0 || c.samples < 0)
    throw ConfigError("bounds must be positive");
}

SuiteReport merge(std::string suite, Json parameters, std::vector<CaseOutcome> outcomes) {
  SuiteReport r;
  r.suite = std::move(suite);
  r.parameters = std::move(parameters);
  for (auto &o : outcomes) {
    r.cases_run += o.run;
    r.cases_passed += o.passed;
    r.precondition_errors += o.precondition_errors;
    for (auto &w : o.counterexamples)
      r.counterexamples.push_back(std::move(w));
    for (auto &n : o.notes)
      r.notes.push_back(std::move(n));
  }
  return r;
}

SuiteReport sweep(std::string suite, Json parameters, std::size_t count,
                  const std::function<void(std::size_t, CaseOutcome &)> &f, Execution exec) {
  auto outcomes = map_cases<CaseOutcome>(
      count,
      [&](std::size_t i) {
        CaseOutcome o;
        try {
          f(i, o);
        } catch (const PreconditionError &e) {
          ++o.precondition_errors;
          o.notes.push_back("case " + std::to_string(i) + ": " + to_string(e.kind()) +
                            " precondition: " + e.what());
        }
        return o;
      },
      exec);
  return merge(std::move(suite), std::move(parameters), std::move(outcomes));
}

std::vector<Permutation> permutations_between(int lo, int hi,
                                              const std::function<bool(const Permutation &)> &keep) {
  std::vector<Permutation> out;
  for (int n = lo; n <= hi; ++n)
    for (auto &v : all_permutations(n))
      if (keep(v))
        out.push_back(std::move(v));
  return out;
}

MatrixPool make_pool(int m, int per_k, std::uint64_t seed, Execution exec) {
  const auto flat = map_cases<std::optional<CertifiedMatrix>>(
      static_cast<std::size_t>(m * per_k),
      [&](std::size_t i) {
        const int k = static_cast<int>(i) / per_k + 1;
        return std::optional<CertifiedMatrix>(
            CertifiedMatrix(gen_k_positive(m, k, case_seed(seed ^ 0x706f6f6cULL, i))));
      },
      exec);
  MatrixPool pool(static_cast<std::size_t>(m + 1));
  for (std::size_t i = 0; i < flat.size(); ++i)
    pool[i / static_cast<std::size_t>(per_k) + 1].push_back(*flat[i]);
  return pool;
}

std::string describe_pool(const MatrixPool &pool) {
  std::string out = "matrix pool of " + std::to_string(pool.back().size()) +
                    " per k; exactly k-positive:";
  for (std::size_t k = 1; k < pool.size(); ++k) {
    const auto exact = std::count_if(pool[k].begin(), pool[k].end(), [&](const CertifiedMatrix &m) {
      return m.order() == static_cast<int>(k);
    });
    out += " k=" + std::to_string(k) + " " + std::to_string(exact) + "/" +
           std::to_string(pool[k].size());
  }
  return out;
}

} // namespace detail

namespace {

using namespace detail;

bool any_perm(const Permutation &) { return true; }

Json base_parameters(int max_n, std::uint64_t seed) {
  return Json{{"max_n", max_n}, {"seed", seed}};
}

SuiteReport graph_characterization(const SuiteConfig &c) {
  const int max_n = or_default(c.max_n, 6);
  const auto perms = permutations_between(1, max_n, any_perm);
  return sweep(
      "graph-characterization", base_parameters(max_n, c.seed), perms.size(),
      [&](std::size_t i, CaseOutcome &o) {
        const auto &v = perms[i];
        const auto g = graph_of_upper_interval(v);
        const bool ok = g.same_cells(graph_of_interval_bruteforce(v)) &&
                        graph_of_permutation(v).is_subset_of(g) &&
                        graph_of_permutation(Permutation::longest(v.size())).is_subset_of(g);
        o.check(ok, [&] { return Json{{"v", v.str()}}; });
      },
      c.execution);
}

SuiteReport per_permutation(const std::string &name, const SuiteConfig &c,
                            const std::function<bool(const Permutation &)> &keep,
                            const std::function<bool(const Permutation &)> &property) {
  const int max_n = or_default(c.max_n, kMaxN);
  const auto perms = permutations_between(1, max_n, keep);
  auto r = sweep(
      name, base_parameters(max_n, c.seed), perms.size(),
      [&](std::size_t i, CaseOutcome &o) {
        o.check(property(perms[i]), [&] { return Json{{"v", perms[i].str()}}; });
      },
      c.execution);
  return r;
}

SuiteReport square_noninversion(const SuiteConfig &c) {
  return per_permutation("square-noninversion", c, any_perm, squares_match_noninversions);
}

SuiteReport box_cover(const SuiteConfig &c) {
  return per_permutation("box-cover", c, any_perm, boxes_cover_graph);
}

SuiteReport box_alternation(const SuiteConfig &c) {
  auto r = per_permutation(
      "box-alternation", c,
      [](const Permutation &v) { return boxes_alternate(v) != Alternation::precondition_not_met; },
      [](const Permutation &v) { return boxes_alternate(v) == Alternation::alternates; });
  r.notes.push_back("cases are the permutations avoiding 2143 whose product with w0 lies in no "
                    "maximal parabolic subgroup");
  return r;
}

Json with_samples(Json p, int samples) {
  p["samples"] = samples;
  return p;
}

SuiteReport determinantal_formula(const SuiteConfig &c) {
  const int max_n = or_default(c.max_n, 5);
  const int samples = or_default(c.samples, 3);
  KLCacheSet caches(resolve_cache_path(c.kl_cache));
  caches.precompute(max_n);
  const auto perms = permutations_between(1, max_n, avoids_1324_2143);
  auto r = sweep(
      "determinantal-formula", with_samples(base_parameters(max_n, c.seed), samples),
      perms.size(),
      [&](std::size_t i, CaseOutcome &o) {
        const auto &v = perms[i];
        KLCache &cache = caches.for_size(v.size());
        Rng rng(case_seed(c.seed, i));
        for (int s = 0; s < samples; ++s) {
          const auto m = random_rational_matrix(v.size(), v.size(), rng);
          o.check(imm_definition(v, m, cache) == imm_determinantal(v, m), [&] {
            const auto id = Multiset::identity(v.size());
            return witness(v, id, id, m);
          });
        }
      },
      c.execution);

  const auto containing = permutations_between(
      1, max_n, [](const Permutation &v) { return !avoids_1324_2143(v); });
  std::size_t differs = 0;
  Rng rng(case_seed(c.seed, perms.size()));
  for (const auto &v : containing) {
    const auto m = random_rational_matrix(v.size(), v.size(), rng);
    const Rational det_form =
        (v.length() % 2 == 0 ? 1 : -1) * det(restrict(m, graph_of_upper_interval(v)));
    if (det_form != imm_definition(v, m, caches.for_size(v.size())))
      ++differs;
  }
  r.notes.push_back("determinant form differs from the defining sum for " +
                    std::to_string(differs) + " of " + std::to_string(containing.size()) +
                    " permutations containing 1324 or 2143");
  caches.save();
  return r;
}

SuiteReport lewis_carroll(const SuiteConfig &c) {
  const int samples = or_default(c.samples, 200);
  return sweep(
      "lewis-carroll", Json{{"samples", samples}, {"seed", c.seed}},
      static_cast<std::size_t>(samples),
      [&](std::size_t i, CaseOutcome &o) {
        const int n = 2 + static_cast<int>(i % 5);
        Rng rng(case_seed(c.seed, i));
        const auto m = random_rational_matrix(n, n, rng);
        for (int a = 1; a <= n; ++a)
          for (int a2 = a + 1; a2 <= n; ++a2)
            for (int b = 1; b <= n; ++b)
              for (int b2 = b + 1; b2 <= n; ++b2)
                o.check(lewis_carroll_residual(m, a, a2, b, b2) == 0, [&] {
                  return Json{{"rows", {a, a2}}, {"cols", {b, b2}}, {"M", to_json(m)}};
                });
      },
      c.execution);
}

SuiteReport block_factorization(const SuiteConfig &c) {
  const int max_n = or_default(c.max_n, 6);
  const int samples = or_default(c.samples, 3);
  KLCacheSet caches(resolve_cache_path(c.kl_cache));
  caches.precompute(max_n);
  const auto perms = permutations_between(1, max_n, [](const Permutation &v) {
    return avoids_1324_2143(v) && split_permutation(v).has_value();
  });
  auto r = sweep(
      "block-factorization", with_samples(base_parameters(max_n, c.seed), samples),
      perms.size(),
      [&](std::size_t i, CaseOutcome &o) {
        const auto &v = perms[i];
        Rng rng(case_seed(c.seed, i));
        for (int s = 0; s < samples; ++s) {
          const auto m = random_rational_matrix(v.size(), v.size(), rng);
          const Rational product = factor_block_antidiagonal(v, m);
          o.check(product == imm_definition(v, m, caches.for_size(v.size())) &&
                      product == imm_determinantal(v, m),
                  [&] {
                    const auto id = Multiset::identity(v.size());
                    return witness(v, id, id, m);
                  });
        }
      },
      c.execution);
  caches.save();
  return r;
}

SuiteReport deletion(const SuiteConfig &c) {
  const int max_n = or_default(c.max_n, 5);
  const int samples = or_default(c.samples, 3);
  std::vector<std::pair<Permutation, int>> cases;
  for (const auto &v : permutations_between(2, max_n, avoids_1324_2143))
    for (int i = 1; i <= v.size(); ++i)
      cases.emplace_back(v, i);
  return sweep(
      "deletion", with_samples(base_parameters(max_n, c.seed), samples), cases.size(),
      [&](std::size_t idx, CaseOutcome &o) {
        const auto &[v, i] = cases[idx];
        Rng rng(case_seed(c.seed, idx));
        for (int s = 0; s < samples; ++s) {
          const auto m = random_rational_matrix(v.size() - 1, v.size() - 1, rng);
          const auto rep = deletion_det_identity(v, i, m);
          o.check(rep.holds(), [&] {
            return Json{{"v", v.str()},
                        {"i", i},
                        {"det_equal", rep.det_equal},
                        {"graph_minus_q", rep.graph_minus_q},
                        {"graph_plain", rep.graph_plain},
                        {"spanning_corner", rep.spanning_corner},
                        {"M", to_json(m)}};
          });
        }
      },
      c.execution);
}

struct LabelSpace {
  int n = 0, m = 0;
  std::vector<Multiset> labels;
};

LabelSpace label_space(int n, int m) {
  if (m < n)
    throw ConfigError("max_m must be at least max_n");
  return {n, m, multichoose(m, n)};
}

/// Up to `per_class` admissible and `per_class` inadmissible label pairs for
/// the grid, chosen deterministically; the identity labels come first.
std::vector<std::pair<Multiset, Multiset>> stratified_labels(const LabeledGrid &grid,
                                                             const LabelSpace &space,
                                                             int per_class, Rng &rng) {
  std::vector<std::pair<Multiset, Multiset>> adm, inadm;
  for (const auto &r : space.labels)
    for (const auto &col : space.labels)
      (is_admissible(grid.with_labels(r, col)) ? adm : inadm).emplace_back(r, col);
  std::shuffle(adm.begin(), adm.end(), rng);
  std::shuffle(inadm.begin(), inadm.end(), rng);
  std::vector<std::pair<Multiset, Multiset>> out;
  const Multiset id = Multiset::identity(space.n);
  out.emplace_back(id, id);
  for (auto *bucket : {&adm, &inadm})
    for (std::size_t i = 0; i < bucket->size() && i < static_cast<std::size_t>(per_class); ++i)
      if ((*bucket)[i] != out.front())
        out.push_back((*bucket)[i]);
  return out;
}

const CertifiedMatrix &pick(const MatrixPool &pool, int k, Rng &rng) {
  const auto &bucket = pool[static_cast<std::size_t>(k)];
  std::uniform_int_distribution<std::size_t> d(0, bucket.size() - 1);
  return bucket[d(rng)];
}

constexpr int kPoolPerK = 8;
constexpr int kLabelsPerClass = 6;

SuiteReport young(const SuiteConfig &c) {
  const int n = or_default(c.max_n, 4);
  const int samples = or_default(c.samples, 5);
  const LabelSpace space = label_space(n, or_default(c.max_m, n));
  const auto pool = make_pool(space.m, kPoolPerK, c.seed, c.execution);
  const auto shapes = young_diagrams_in_box(n);
  const auto perms = all_permutations(n);
  Json params = with_samples(base_parameters(n, c.seed), samples);
  params["max_m"] = space.m;

  auto report = sweep(
      "young", params, shapes.size() + perms.size(),
      [&](std::size_t idx, CaseOutcome &o) {
        if (idx >= shapes.size()) {
          const auto &v = perms[idx - shapes.size()];
          if (!avoids_1324_2143(v))
            return;
          const auto g = graph_of_upper_interval(v);
          if (young_shape(g))
            o.check(inversions_equal_complement_boxes(v), [&] { return Json{{"v", v.str()}}; });
          if (complement_young_shape(g))
            o.check(inversions_equal_removed_boxes(v), [&] { return Json{{"v", v.str()}}; });
          return;
        }
        const auto &lambda = shapes[idx];
        Rng rng(case_seed(c.seed, idx));
        auto shape_witness = [&](const char *kind, const Multiset &r, const Multiset &col,
                                 const CertifiedMatrix &m, int k, const SignCheck &s) {
          Json w = witness(Permutation::identity(n), r, col, m.matrix());
          w.erase("v");
          w["shape"] = kind;
          w["lambda"] = lambda.parts;
          w["k"] = k;
          w["determinant"] = format_rational(s.determinant);
          w["expected_zero"] = s.expected_zero;
          return w;
        };

        const int k_young = std::max(1, durfee(lambda));
        for (const auto &[r, col] :
             stratified_labels(young_grid(n, lambda), space, kLabelsPerClass, rng)) {
          for (int s = 0; s < samples; ++s) {
            const auto &m = pick(pool, k_young, rng);
            const auto res = young_sign_check(lambda, r, col, m, k_young);
            o.check(res.holds, [&] { return shape_witness("young", r, col, m, k_young, res); });
          }
        }

        const int k_comp = std::max(1, largest_square(complement_grid(n, lambda)));
        for (const auto &[r, col] :
             stratified_labels(complement_grid(n, lambda), space, kLabelsPerClass, rng)) {
          for (int s = 0; s < samples; ++s) {
            const auto &m = pick(pool, k_comp, rng);
            const auto res = young_complement_sign_check(lambda, r, col, m, k_comp);
            o.check(res.holds,
                    [&] { return shape_witness("complement", r, col, m, k_comp, res); });
          }
          const auto &m = pick(pool, k_comp, rng);
          o.check(complement_reduction_agrees(lambda, r, col, m.matrix()), [&] {
            Json w = witness(Permutation::identity(n), r, col, m.matrix());
            w.erase("v");
            w["shape"] = "antidiagonal-transpose";
            w["lambda"] = lambda.parts;
            return w;
          });
        }
      },
      c.execution);
  report.notes.push_back(describe_pool(pool));
  return report;
}

SuiteReport sign_probe(const SuiteConfig &c) {
  const int max_n = or_default(c.max_n, 5);
  const int samples = or_default(c.samples, 5);
  const LabelSpace space = label_space(max_n, or_default(c.max_m, max_n));
  const auto pool = make_pool(space.m, kPoolPerK, c.seed, c.execution);
  const auto candidates = permutations_between(2, max_n, avoids_1324_2143);
  std::vector<Permutation> perms;
  for (const auto &v : candidates) {
    SignProbeReport probe;
    if (sign_probe_applies(v, probe))
      perms.push_back(v);
  }
  Json params = with_samples(base_parameters(max_n, c.seed), samples);
  params["max_m"] = space.m;

  std::vector<std::size_t> vacuous(perms.size(), 0), literal(perms.size(), 0),
      evaluated(perms.size(), 0);
  auto r = sweep(
      "sign-probe", params, perms.size(),
      [&](std::size_t idx, CaseOutcome &o) {
        const auto &v = perms[idx];
        const LabelSpace own = label_space(v.size(), space.m);
        const auto graph = graph_of_upper_interval(v);
        const int k = largest_square(graph);
        Rng rng(case_seed(c.seed, idx));
        for (const auto &[rows, cols] : stratified_labels(graph, own, kLabelsPerClass, rng)) {
          if (!is_admissible(graph.with_labels(rows, cols)))
            continue;
          for (int s = 0; s < samples; ++s) {
            const auto &m = pick(pool, k, rng);
            const auto rep = lewis_carroll_sign_probe(v, rows, cols, m.matrix());
            ++evaluated[idx];
            if (!rep.hypotheses_met) {
              ++vacuous[idx];
              o.pass();
              continue;
            }
            if (rep.double_minor_literal == ClaimStatus::violated)
              ++literal[idx];
            o.check(!rep.violated(), [&] {
              Json w = witness(v, rows, cols, m.matrix());
              w["a"] = rep.a;
              w["b"] = rep.b;
              w["d"] = rep.d;
              w["sigma"] = rep.sigma;
              w["cross_term"] = to_string(rep.cross_term);
              w["double_minor"] = to_string(rep.double_minor);
              return w;
            });
          }
        }
      },
      c.execution);
  auto total = [](const std::vector<std::size_t> &xs) {
    return std::accumulate(xs.begin(), xs.end(), std::size_t{0});
  };
  r.notes.push_back(describe_pool(pool));
  r.notes.push_back(std::to_string(perms.size()) + " of " + std::to_string(candidates.size()) +
                    " pattern-avoiding permutations meet the box hypotheses");
  r.notes.push_back(std::to_string(total(vacuous)) + " of " + std::to_string(total(evaluated)) +
                    " evaluations had a zero reference product");
  r.notes.push_back("double minor carried sign sigma (-1)^l(v) in " +
                    std::to_string(total(evaluated) - total(vacuous) - total(literal)) +
                    " evaluations and -sigma (-1)^l(v) in " + std::to_string(total(literal)));
  return r;
}

SuiteReport main_theorem(const SuiteConfig &c) {
  const int max_n = or_default(c.max_n, 4);
  const int samples = or_default(c.samples, 5);
  const LabelSpace space = label_space(max_n, or_default(c.max_m, max_n));
  KLCacheSet caches(resolve_cache_path(c.kl_cache));
  caches.precompute(max_n);
  const auto pool = make_pool(space.m, kPoolPerK, c.seed, c.execution);

  struct Case {
    Permutation v;
    Multiset rows;
  };
  std::vector<Case> cases;
  for (const auto &v : permutations_between(1, max_n, avoids_1324_2143))
    for (auto &r : multichoose(space.m, v.size()))
      cases.push_back({v, std::move(r)});
  Json params = with_samples(base_parameters(max_n, c.seed), samples);
  params["max_m"] = space.m;

  auto r = sweep(
      "main-sq", params, cases.size(),
      [&](std::size_t idx, CaseOutcome &o) {
        const auto &[v, rows] = cases[idx];
        KLCache &cache = caches.for_size(v.size());
        Rng rng(case_seed(c.seed, idx));
        for (const auto &cols : multichoose(space.m, v.size())) {
          for (int s = 0; s < samples; ++s) {
            const int k = largest_square(graph_of_upper_interval(v));
            const auto &m = pick(pool, k, rng);
            const auto res = sign_theorem_check(v, rows, cols, m);
            bool ok = res.holds;
            if (ok && s == 0)
              ok = imm_definition(v, repeat_submatrix(m.matrix(), rows, cols), cache) ==
                   res.value;
            o.check(ok, [&] {
              Json w = witness(v, rows, cols, m.matrix());
              w["k"] = res.k;
              w["value"] = format_rational(res.value);
              w["admissible"] = res.admissible;
              return w;
            });
          }
        }
      },
      c.execution);
  r.notes.push_back("every label pair in multichoose([max_m], n) is enumerated");
  r.notes.push_back(describe_pool(pool));
  caches.save();
  return r;
}

SuiteReport fixtures(const SuiteConfig &c) {
  const auto results = run_fixtures();
  return sweep(
      "fixtures", Json{{"seed", c.seed}}, results.size(),
      [&](std::size_t i, CaseOutcome &o) {
        o.check(results[i].ok,
                [&] { return Json{{"fixture", results[i].name}, {"detail", results[i].detail}}; });
      },
      Execution::serial);
}

struct SuiteEntry {
  const char *name;
  const char *alias;
  SuiteReport (*run)(const SuiteConfig &);
};

const SuiteEntry kSuites[] = {
    {"graph-characterization", "lemma-2.11", graph_characterization},
    {"square-noninversion", "lemma-2.12", square_noninversion},
    {"box-cover", "lemma-2.16", box_cover},
    {"box-alternation", "prop-2.17", box_alternation},
    {"determinantal-formula", "prop-3.1", determinantal_formula},
    {"lewis-carroll", "prop-3.2", lewis_carroll},
    {"block-factorization", "prop-4.1", block_factorization},
    {"deletion", "deletion", deletion},
    {"young", "young", young},
    {"sign-probe", "sgn-probe", sign_probe},
    {"main-sq", "main-sq", main_theorem},
    {"fixtures", "fixtures", fixtures},
};

} // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto &s : kSuites)
    out.emplace_back(s.name);
  return out;
}

std::string canonical_suite(const std::string &name) {
  for (const auto &s : kSuites)
    if (name == s.name || name == s.alias)
      return s.name;
  throw ConfigError("unknown suite: " + name);
}

SuiteReport run_suite(const std::string &name, const SuiteConfig &config) {
  check_bounds(config);
  const std::string canonical = canonical_suite(name);
  for (const auto &s : kSuites)
    if (canonical == s.name)
      return s.run(config);
  throw ConfigError("unknown suite: " + name);
}

} // namespace klimm
