#include <doctest.h>

#include "klimm/grid.hpp"
#include "oracles.hpp"

using namespace klimm;

namespace {
const Permutation v2413{2, 4, 1, 3};
}

TEST_CASE("interval graph of 2413") {
  const auto g = graph_of_upper_interval(v2413);
  CHECK(g.cell_count() == 12);
  CHECK(g.row_support(1) == std::vector<int>{2, 3, 4});
  CHECK(g.row_support(2) == std::vector<int>{2, 3, 4});
  CHECK(g.row_support(3) == std::vector<int>{1, 2, 3});
  CHECK(g.col_support(1) == std::vector<int>{3, 4});
  CHECK_FALSE(g.contains(4, 4));
  CHECK(g.row_labels() == Multiset::identity(4));
  CHECK(largest_square(g) == 2);
  CHECK(squares_match_noninversions(v2413));
}

TEST_CASE("extreme interval graphs") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(graph_of_upper_interval(Permutation::identity(n)).cell_count() == n * n);
    const auto anti = graph_of_upper_interval(Permutation::longest(n));
    CHECK(anti.same_cells(graph_of_permutation(Permutation::longest(n))));
    CHECK(largest_square(anti) == 1);
    CHECK(largest_square(LabeledGrid::full(n)) == n);
  }
  CHECK(largest_square(LabeledGrid(3)) == 0);
  CHECK(LabeledGrid(3).row_support(2).empty());
}

TEST_CASE("sandwich characterization matches the Bruhat interval") {
  for (int n = 1; n <= 5; ++n)
    for (const auto &v : all_permutations(n)) {
      const auto g = graph_of_upper_interval(v);
      REQUIRE(oracle::cell_set(g) == oracle::interval_cells(v));
      REQUIRE(g.same_cells(graph_of_interval_bruteforce(v)));
    }
  CHECK_THROWS(graph_of_interval_bruteforce(Permutation::identity(8)));
}

TEST_CASE("sandwiching") {
  CHECK(is_sandwiched({1, 3}, v2413, {1, 2}));
  for (const auto &ni : v2413.non_inversions())
    CHECK_FALSE(is_sandwiched({4, 4}, v2413, ni));
  CHECK_THROWS(is_sandwiched({1, 2}, v2413, {1, 2}));
}

TEST_CASE("largest square against brute force") {
  for (const auto &v : all_permutations(6)) {
    const auto g = graph_of_upper_interval(v);
    REQUIRE(largest_square(g) == oracle::largest_square(g));
    REQUIRE(squares_match_noninversions(v));
  }
}

TEST_CASE("admissibility") {
  const auto g = graph_of_upper_interval(v2413);
  CHECK(is_admissible(g.with_labels(Multiset{1, 2, 2, 3}, Multiset{1, 2, 3, 3})));
  CHECK_FALSE(is_admissible(g.with_labels(Multiset{1, 2, 2, 3}, Multiset{1, 2, 2, 3})));
  CHECK(is_admissible(g));
  for (const auto &v : all_permutations(4)) {
    const auto gv = graph_of_upper_interval(v);
    for (const auto &r : multichoose(3, 4))
      for (const auto &c : multichoose(3, 4)) {
        const auto lg = gv.with_labels(r, c);
        REQUIRE(is_admissible(lg) == oracle::admissible(lg));
      }
  }
}

TEST_CASE("row and column deletion") {
  const auto g = graph_of_upper_interval(v2413).with_labels(Multiset{1, 2, 2, 3},
                                                           Multiset{1, 2, 3, 3});
  CHECK(delete_rows_cols(g, {}, {}) == g);
  CHECK(delta({2}, 1) == 1);
  CHECK(delta({2}, 3) == 2);
  CHECK(delta({2}, 4) == 3);
  const auto d = delete_rows_cols(g, {2}, {3});
  CHECK(d.size() == 3);
  CHECK(d.row_labels() == Multiset{1, 2, 3});
  CHECK(d.col_labels() == Multiset{1, 2, 3});
  // Deleting {1, 3} equals deleting 1 and then the reindexed 3.
  const auto once = delete_rows_cols(g, {1, 3}, {2, 4});
  const auto twice = delete_rows_cols(delete_rows_cols(g, {1}, {2}), {delta({1}, 3)},
                                      {delta({2}, 4)});
  CHECK(once == twice);
  CHECK_THROWS(delete_rows_cols(g, {1}, {}));
}

TEST_CASE("deletion at a spanning corner removes the sandwiched-only region") {
  const auto v = Permutation::parse("62785314");
  const auto x = delete_entry(v, 2);
  auto without_q = graph_of_upper_interval(v);
  const auto q = sandwiched_only_by_position(v, 2);
  CHECK(q.cell_count() > 0);
  for (auto [i, j] : q.cells())
    without_q.erase(i, j);
  CHECK(graph_of_upper_interval(x).same_cells(delete_rows_cols(without_q, {2}, {2})));
  CHECK_FALSE(graph_of_upper_interval(x).same_cells(
      delete_rows_cols(graph_of_upper_interval(v), {2}, {2})));
}

TEST_CASE("bounding boxes") {
  const Permutation v{6, 10, 4, 7, 8, 9, 5, 3, 1, 2};
  CHECK(spanning_corners(v) ==
        std::vector<Cell>{{1, 6}, {3, 4}, {6, 9}, {8, 3}, {9, 1}, {10, 2}});
  const auto boxes = bounding_boxes(v);
  REQUIRE(boxes.size() == 5);
  CHECK(boxes[0].color == BoxColor::blue);
  CHECK(boxes[1].color == BoxColor::red);
  CHECK(boxes[2].color == BoxColor::blue);
  CHECK(boxes[3].color == BoxColor::green);
  CHECK(boxes[4].color == BoxColor::purple);
  CHECK(boxes[4].corners.size() == 2);
  CHECK(boxes_alternate(v) == Alternation::precondition_not_met);

  const auto b = box_of_corner(4, 1, 2);
  CHECK(b.row_lo == 1);
  CHECK(b.row_hi == 3);
  CHECK(b.col_lo == 2);
  CHECK(b.col_hi == 4);
  CHECK(b.color == BoxColor::blue);

  const auto anti = bounding_boxes(Permutation::longest(4));
  CHECK(anti.size() == 4);
  for (const auto &box : anti)
    CHECK(box.color == BoxColor::green);
}

TEST_CASE("boxes cover the graph and alternate") {
  for (int n = 1; n <= 6; ++n)
    for (const auto &v : all_permutations(n)) {
      REQUIRE(boxes_cover_graph(v));
      REQUIRE(boxes_alternate(v) != Alternation::fails);
    }
}

TEST_CASE("Young diagrams") {
  CHECK(durfee(YoungDiagram{{3, 3, 1}}) == 2);
  CHECK(durfee(YoungDiagram{}) == 0);
  CHECK(durfee(YoungDiagram{{4, 4, 4, 4}}) == 4);
  CHECK(young_diagrams_in_box(4).size() == 70);
  CHECK(young_shape(LabeledGrid::full(3)) == YoungDiagram{{3, 3, 3}});
  CHECK_FALSE(young_shape(graph_of_upper_interval(Permutation::longest(3))).has_value());
  CHECK_FALSE(young_shape(graph_of_upper_interval(Permutation::parse("2143"))).has_value());
  CHECK(staircase(3) == YoungDiagram{{3, 2, 1}});
  for (const auto &lambda : young_diagrams_in_box(4)) {
    REQUIRE(young_shape(young_grid(4, lambda)).value().cells() == lambda.cells());
    REQUIRE(complement_young_shape(complement_grid(4, lambda)).value().cells() == lambda.cells());
  }
}

TEST_CASE("block-antidiagonal split") {
  const auto split = block_antidiagonal_split(graph_of_upper_interval(Permutation::parse("74586132")));
  REQUIRE(split.has_value());
  CHECK(split->upper_size == 5);
  CHECK(split->lower_size() == 3);
  CHECK(split->upper_right.same_cells(graph_of_upper_interval(Permutation::parse("41253"))));
  CHECK(split->lower_left.same_cells(graph_of_upper_interval(Permutation::parse("132"))));
  CHECK_FALSE(block_antidiagonal_split(LabeledGrid::full(4)).has_value());
  const auto anti = block_antidiagonal_split(graph_of_upper_interval(Permutation::longest(4)));
  REQUIRE(anti.has_value());
  CHECK(anti->upper_size == 1);
}

TEST_CASE("ASCII rendering") {
  const std::string art = render_ascii(graph_of_upper_interval(v2413), &v2413);
  CHECK(art == ". x # #\n. # # x\nx # # .\n# # x .\n");
}
