// klimm: Kazhdan-Lusztig immanant calculator and verification harness.

#include "klimm/immanant.hpp"
#include "klimm/io.hpp"
#include "klimm/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace klimm;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2 };

struct Common {
  int max_n = 0;
  int max_m = 0;
  int k = 0;
  int samples = 0;
  std::uint64_t seed = 1;
  std::string kl_cache;
  std::string out;
  std::string format = "json";
  bool serial = false;

  SuiteConfig config() const {
    SuiteConfig c;
    c.max_n = max_n;
    c.max_m = max_m;
    c.k = k;
    c.samples = samples;
    c.seed = seed;
    c.kl_cache = kl_cache;
    c.execution = serial ? Execution::serial : Execution::parallel;
    return c;
  }
};

void add_sweep_flags(CLI::App *cmd, Common &c) {
  cmd->add_option("--max-n", c.max_n, "Largest permutation size (at most 7)");
  cmd->add_option("--max-m", c.max_m, "Largest label / matrix size");
  cmd->add_option("--k", c.k, "Positivity order");
  cmd->add_option("--samples", c.samples, "Samples per case, or trials for a search");
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--kl-cache", c.kl_cache, "Directory for cached KL polynomials");
  cmd->add_option("--out", c.out, "Write the report here instead of stdout");
  cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--serial", c.serial, "Run cases on one thread");
}

void emit(const std::string &text, const std::string &path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
}

int emit_report(const SuiteReport &r, const Common &c, double seconds) {
  emit(c.format == "csv" ? r.to_csv() : r.to_json().dump(2) + "\n", c.out);
  std::cerr << r.suite << ": " << r.cases_passed << "/" << r.cases_run << " passed, "
            << r.counterexamples.size() << " counterexamples, " << r.precondition_errors
            << " precondition errors (" << seconds << " s)\n";
  return r.ok() ? ok : failed;
}

template <class F> int timed_report(F &&run, const Common &c) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r = run();
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return emit_report(r, c, elapsed.count());
}

int cmd_kl(const std::string &xs, const std::string &ys, const std::string &cache_dir) {
  const auto x = Permutation::parse(xs);
  const auto y = Permutation::parse(ys);
  if (x.size() != y.size())
    throw SizeMismatch("x and y must have the same size");
  KLCacheSet caches(resolve_cache_path(cache_dir));
  const auto p = kl_polynomial(x, y, caches.for_size(x.size()));
  std::cout << p.str() << "\nP(1) = " << p.at_one().get_str() << "\n";
  caches.save();
  return ok;
}

Multiset labels_or_identity(const std::string &text, int n) {
  return text.empty() ? Multiset::identity(n) : Multiset::parse(text);
}

int cmd_imm(const std::string &vs, const std::string &rs, const std::string &cs,
            const std::string &matrix_path, const std::string &method,
            const std::string &cache_dir) {
  const auto v = Permutation::parse(vs);
  const auto rows = labels_or_identity(rs, v.size());
  const auto cols = labels_or_identity(cs, v.size());
  const auto m = read_matrix(matrix_path);
  if (!m.is_square())
    throw std::invalid_argument("matrix must be square");
  if (rows.size() != v.size() || cols.size() != v.size())
    throw std::invalid_argument("R and C need one label per row of v");
  if (rows.max_label() > m.rows() || cols.max_label() > m.rows())
    throw std::invalid_argument("labels exceed the matrix size");

  const auto graph = graph_of_upper_interval(v).with_labels(rows, cols);
  Json out = Json::array();
  std::optional<Rational> by_definition, by_det;
  if (method == "definition" || method == "both") {
    KLCacheSet caches(resolve_cache_path(cache_dir));
    ImmanantResult r{imm_definition(v, repeat_submatrix(m, rows, cols), caches.for_size(v.size())),
                     ImmMethod::definition, v, rows, cols, is_admissible(graph),
                     largest_square(graph)};
    by_definition = r.value;
    out.push_back(to_json(r));
    caches.save();
  }
  if (method == "det" || method == "both") {
    auto r = dual_canonical_eval(v, rows, cols, m);
    by_det = r.value;
    out.push_back(to_json(r));
  }
  std::cout << (out.size() == 1 ? out.front() : out).dump(2) << "\n";
  if (by_definition && by_det && *by_definition != *by_det) {
    std::cerr << "methods disagree\n";
    return failed;
  }
  return ok;
}

int cmd_graph(const std::string &vs, const std::string &format) {
  const auto v = Permutation::parse(vs);
  const auto graph = graph_of_upper_interval(v);
  const auto boxes = bounding_boxes(v);
  if (format == "json") {
    Json j = to_json(graph);
    Json crosses = Json::array();
    for (auto [i, jj] : graph_of_permutation(v).cells())
      crosses.push_back({i, jj});
    Json bj = Json::array();
    for (const auto &b : boxes) {
      Json corners = Json::array();
      for (auto [i, jj] : b.corners)
        corners.push_back({i, jj});
      bj.push_back({{"corners", corners},
                    {"rows", {b.row_lo, b.row_hi}},
                    {"cols", {b.col_lo, b.col_hi}},
                    {"color", to_string(b.color)}});
    }
    j["v"] = v.str();
    j["permutation_cells"] = crosses;
    j["bounding_boxes"] = bj;
    j["largest_square"] = largest_square(graph);
    std::cout << j.dump(2) << "\n";
    return ok;
  }
  std::cout << render_ascii(graph, &v);
  std::cout << "cells: " << graph.cell_count() << "\nlargest square: " << largest_square(graph)
            << "\nbounding boxes:\n";
  for (const auto &b : boxes) {
    std::cout << "  " << to_string(b.color) << " rows " << b.row_lo << "-" << b.row_hi
              << " cols " << b.col_lo << "-" << b.col_hi << " corners";
    for (auto [i, j] : b.corners)
      std::cout << " (" << i << "," << j << ")";
    std::cout << "\n";
  }
  return ok;
}

int cmd_gen(int n, int k, std::uint64_t seed, const std::string &out) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("need 1 <= k <= n");
  RationalMatrix m;
  if (k == n) {
    m = gen_totally_positive(n, seed);
  } else if (auto found = gen_k_positive_not_higher(n, k, seed)) {
    m = *found;
  } else if (n == 4 && k == 2) {
    m = two_positive_fixture();
  } else {
    std::cerr << "generation budget exhausted\n";
    return failed;
  }
  const int order = max_positivity_order(m);
  Json j = to_json(m);
  j["max_positivity_order"] = order;
  emit(j.dump(2) + "\n", out);
  if (!out.empty())
    std::cout << "max_positivity_order: " << order << "\n";
  return ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Kazhdan-Lusztig immanants: evaluation, sign-law checks and searches"};
  app.require_subcommand(1);

  std::string x, y, cache_dir;
  auto *kl = app.add_subcommand("kl", "Print P_{x,y}(q) and its value at q = 1");
  kl->add_option("x", x)->required();
  kl->add_option("y", y)->required();
  kl->add_option("--kl-cache", cache_dir, "Directory for cached KL polynomials");

  std::string v, rows, cols, matrix, method = "both";
  auto *imm = app.add_subcommand("imm", "Evaluate Imm_v M(R, C)");
  imm->add_option("v", v)->required();
  imm->add_option("--R", rows, "Row labels, e.g. 1,1,3");
  imm->add_option("--C", cols, "Column labels");
  imm->add_option("-m,--matrix", matrix, "Matrix JSON file")->required();
  imm->add_option("--method", method)->check(CLI::IsMember({"definition", "det", "both"}));
  imm->add_option("--kl-cache", cache_dir, "Directory for cached KL polynomials");

  std::string graph_format = "ascii";
  auto *graph = app.add_subcommand("graph", "Render Gamma[v, w0] with its bounding boxes");
  graph->add_option("v", v)->required();
  graph->add_option("--format", graph_format)->check(CLI::IsMember({"ascii", "json"}));

  Common common;
  std::string suite;
  auto *check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("suite", suite, "Suite name")->required();
  add_sweep_flags(check, common);

  std::string conjecture;
  auto *search = app.add_subcommand("search", "Randomized counterexample search");
  search->add_option("conjecture", conjecture, "Search name")->required();
  add_sweep_flags(search, common);

  int gen_n = 0, gen_k = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto *gen = app.add_subcommand("gen", "Generate a verified k-positive n x n matrix");
  gen->add_option("n", gen_n)->required();
  gen->add_option("k", gen_k)->required();
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", gen_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (kl->parsed())
      return cmd_kl(x, y, cache_dir);
    if (imm->parsed())
      return cmd_imm(v, rows, cols, matrix, method, cache_dir);
    if (graph->parsed())
      return cmd_graph(v, graph_format);
    if (check->parsed())
      return timed_report([&] { return run_suite(suite, common.config()); }, common);
    if (search->parsed())
      return timed_report([&] { return run_search(conjecture, common.config()); }, common);
    if (gen->parsed())
      return cmd_gen(gen_n, gen_k, gen_seed, gen_out);
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "suites:";
    for (const auto &s : suite_names())
      std::cerr << ' ' << s;
    std::cerr << "\nsearches:";
    for (const auto &s : search_names())
      std::cerr << ' ' << s;
    std::cerr << "\n";
    return usage;
  } catch (const PreconditionError &e) {
    std::cerr << "precondition (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return usage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
