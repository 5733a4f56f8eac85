#include "klimm/fixtures.hpp"

#include "klimm/immanant.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace klimm {

namespace {

using Check = std::function<std::string()>; // empty string on success

std::string cells_str(const std::vector<Cell> &cells) {
  std::ostringstream os;
  for (auto [i, j] : cells)
    os << '(' << i << ',' << j << ')';
  return os.str();
}

std::string ints_str(const std::vector<int> &xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << (i ? "," : "") << xs[i];
  return os.str();
}

std::string expect(bool ok, const std::string &what) { return ok ? std::string{} : what; }

const Permutation v2413{2, 4, 1, 3};

std::string pattern_avoidance() {
  return expect(!pattern_occurs(v2413, Permutation{1, 3, 2, 4}) &&
                    !pattern_occurs(v2413, Permutation{2, 1, 4, 3}),
                "2413 should avoid 1324 and 2143");
}

std::string graph_2413() {
  const auto g = graph_of_upper_interval(v2413);
  if (g.cell_count() != 12)
    return "expected 12 cells, got " + std::to_string(g.cell_count());
  for (int r : {1, 2})
    if (g.row_support(r) != std::vector<int>{2, 3, 4})
      return "row " + std::to_string(r) + " support " + ints_str(g.row_support(r));
  for (int r : {3, 4})
    if (g.row_support(r) != std::vector<int>{1, 2, 3})
      return "row " + std::to_string(r) + " support " + ints_str(g.row_support(r));
  if (g.col_support(1) != std::vector<int>{3, 4})
    return "column 1 support " + ints_str(g.col_support(1));
  const auto crosses = graph_of_permutation(v2413).cells();
  if (crosses != std::vector<Cell>{{1, 2}, {2, 4}, {3, 1}, {4, 3}})
    return "graph of 2413 is " + cells_str(crosses);
  return {};
}

std::string interval_2413() {
  std::set<Permutation> listed;
  for (auto s : {"2413", "4213", "3412", "2431", "4312", "4231", "3421"})
    listed.insert(Permutation::parse(s));
  std::set<Permutation> interval;
  LabeledGrid from_listed(4);
  for (const auto &u : all_permutations(4))
    if (bruhat_leq(v2413, u))
      interval.insert(u);
  for (const auto &u : listed)
    for (auto [i, j] : graph_of_permutation(u).cells())
      from_listed.insert(i, j);
  std::set<Permutation> expected = listed;
  expected.insert(Permutation::longest(4));
  if (interval != expected)
    return "interval above 2413 differs from the listed elements plus w0";
  return expect(from_listed.same_cells(graph_of_upper_interval(v2413)),
                "union of listed graphs differs from the interval graph");
}

std::string admissibility_2413() {
  const auto g = graph_of_upper_interval(v2413);
  const bool a = is_admissible(g.with_labels(Multiset{{1, 2, 2, 3}}, Multiset{{1, 2, 3, 3}}));
  const bool b = is_admissible(g.with_labels(Multiset{{1, 2, 2, 3}}, Multiset{{1, 2, 2, 3}}));
  return expect(a && !b, "expected (1223, 1233) admissible and (1223, 1223) not");
}

std::string restriction_2413() {
  const auto r = restrict(two_positive_fixture(), graph_of_upper_interval(v2413));
  const auto want = RationalMatrix::from_rows(
      {{0, 18, 6, 3}, {0, 7, 3, 2}, {2, 2, 1, 0}, {1, 2, 2, 0}});
  return expect(r == want, "restriction is\n" + r.str());
}

std::string repeated_rows() {
  const auto r = repeat_submatrix(two_positive_fixture(), Multiset{{1, 1, 3}}, Multiset{{2, 3, 4}});
  const auto want = RationalMatrix::from_rows({{18, 6, 3}, {18, 6, 3}, {2, 1, 2}});
  return expect(r == want, "M(R, C) is\n" + r.str());
}

std::string two_positive() {
  const auto m = two_positive_fixture();
  const auto lead = minor(m, {1, 2, 3}, {1, 2, 3});
  if (lead != -2)
    return "leading 3 x 3 minor is " + format_rational(lead);
  return expect(is_k_positive(m, 2) && !is_k_positive(m, 3) && max_positivity_order(m) == 2,
                "expected positivity order exactly 2");
}

std::string immanant_39() {
  KLCache cache;
  const auto m = two_positive_fixture();
  const auto a = imm_definition(v2413, m, cache);
  const auto b = imm_determinantal(v2413, m);
  return expect(a == 39 && b == 39,
                "definition " + format_rational(a) + ", determinantal " + format_rational(b));
}

std::string inadmissible_zero() {
  const Multiset labels{{1, 2, 2, 3}};
  const auto r = dual_canonical_eval(v2413, labels, labels, two_positive_fixture());
  if (r.value != 0 || r.admissible)
    return "value " + format_rational(r.value) + (r.admissible ? ", admissible" : "");
  return expect(sign_theorem_check(v2413, labels, labels, two_positive_fixture()).holds,
                "sign check fails on the inadmissible labels");
}

std::string figure_boxes() {
  const Permutation v{6, 10, 4, 7, 8, 9, 5, 3, 1, 2};
  const auto corners = spanning_corners(v);
  const std::vector<Cell> want{{1, 6}, {3, 4}, {6, 9}, {8, 3}, {9, 1}, {10, 2}};
  if (corners != want)
    return "spanning corners " + cells_str(corners);
  std::vector<std::string> colors;
  for (const auto &b : bounding_boxes(v))
    colors.push_back(to_string(b.color));
  if (colors != std::vector<std::string>{"blue", "red", "blue", "green", "purple"}) {
    std::string got;
    for (auto &c : colors)
      got += c + ' ';
    return "colors " + got;
  }
  return expect(boxes_alternate(v) == Alternation::precondition_not_met,
                "alternation hypotheses should fail for this word");
}

std::string figure_split() {
  const Permutation v = Permutation::parse("74586132");
  const auto split = block_antidiagonal_split(graph_of_upper_interval(v));
  if (!split)
    return "graph does not split";
  if (split->lower_size() != 3 || split->upper_size != 5)
    return "block sizes " + std::to_string(split->upper_size) + " and " +
           std::to_string(split->lower_size());
  const auto p = split_permutation(v);
  if (!p || p->upper != Permutation::parse("41253") || p->lower != Permutation::parse("132"))
    return "block permutations differ";
  Rng rng(7);
  const auto m = random_rational_matrix(8, 8, rng, 1000);
  return expect(factor_block_antidiagonal(v, m) == imm_determinantal(v, m),
                "block product differs from the direct determinant");
}

std::string figure_deletion() {
  const Permutation v = Permutation::parse("62785314");
  if (delete_entry(v, 2) != Permutation::parse("5674213"))
    return "deleting position 2 gives " + delete_entry(v, 2).str();
  Rng rng(11);
  const auto r = deletion_det_identity(v, 2, random_rational_matrix(7, 7, rng, 1000));
  return expect(r.spanning_corner && r.graph_minus_q && r.det_equal && !r.graph_plain,
                "expected the Q-region removal at a spanning corner");
}

std::string complement_reduction() {
  const auto m = two_positive_fixture();
  const Multiset id = Multiset::identity(4);
  const Multiset rows{{1, 1, 2, 4}}, cols{{2, 3, 3, 4}};
  return expect(complement_reduction_agrees(YoungDiagram{{3, 1}}, id, id, m) &&
                    complement_reduction_agrees(YoungDiagram{{2, 2, 1}}, rows, cols, m),
                "antidiagonal transpose changes the determinant");
}

} // namespace

std::vector<FixtureResult> run_fixtures() {
  const std::vector<std::pair<std::string, Check>> checks{
      {"2413 avoids 1324 and 2143", pattern_avoidance},
      {"graph of [2413, w0]: cells and supports", graph_2413},
      {"interval [2413, w0]", interval_2413},
      {"admissibility of [2413, w0]", admissibility_2413},
      {"M restricted to [2413, w0]", restriction_2413},
      {"M(R, C) with repeated rows", repeated_rows},
      {"fixture matrix is 2-positive, not 3-positive", two_positive},
      {"Imm_2413(M) = 39", immanant_39},
      {"inadmissible labels give zero", inadmissible_zero},
      {"bounding boxes of 6 10 4 7 8 9 5 3 1 2", figure_boxes},
      {"block split of 74586132", figure_split},
      {"deletion 62785314 -> 5674213", figure_deletion},
      {"complement shape via antidiagonal transpose", complement_reduction},
  };
  std::vector<FixtureResult> out;
  for (const auto &[name, check] : checks) {
    FixtureResult r{name, false, {}};
    try {
      r.detail = check();
      r.ok = r.detail.empty();
    } catch (const std::exception &e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace klimm
