#pragma once

// Cell sets in [n]^2 with row/column labels, and the combinatorics of the
// upper-interval graphs Gamma[v, w0].

#include "klimm/multiset.hpp"
#include "klimm/perm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace klimm {

using Cell = std::pair<int, int>; // (row, column), 1-based

/// A subset of [n]^2 together with weakly increasing row and column labels.
/// Rows are stored as bitmasks (bit j-1 set iff (i, j) is a cell), so n <= 64.
class LabeledGrid {
public:
  static constexpr int kMaxSize = 64;

  LabeledGrid() = default;
  /// Empty grid with identity labels.
  explicit LabeledGrid(int n);
  LabeledGrid(int n, Multiset row_labels, Multiset col_labels);

  static LabeledGrid full(int n);
  static LabeledGrid from_cells(int n, const std::vector<Cell> &cells);

  int size() const { return n_; }
  bool contains(int i, int j) const;
  void insert(int i, int j);
  void erase(int i, int j);

  /// Sorted (row-major) list of cells.
  std::vector<Cell> cells() const;
  int cell_count() const;
  std::uint64_t row_mask(int i) const { return rows_[static_cast<std::size_t>(i - 1)]; }

  std::vector<int> row_support(int r) const;
  std::vector<int> col_support(int c) const;

  const Multiset &row_labels() const { return row_labels_; }
  const Multiset &col_labels() const { return col_labels_; }
  /// Replaces the labels; both must have size n.
  LabeledGrid with_labels(Multiset rows, Multiset cols) const;

  /// Cell-set equality (labels ignored).
  bool same_cells(const LabeledGrid &other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }
  bool is_subset_of(const LabeledGrid &other) const;

  friend bool operator==(const LabeledGrid &, const LabeledGrid &) = default;

private:
  void check_index(int i) const;
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
  Multiset row_labels_;
  Multiset col_labels_;
};

/// Gamma(v) = {(i, v_i)}.
LabeledGrid graph_of_permutation(const Permutation &v);

/// Gamma[v, w0] as Gamma(v) plus every cell sandwiched by a non-inversion.
LabeledGrid graph_of_upper_interval(const Permutation &v);

/// Gamma[v, w0] by enumerating all u >= v; limited to n <= 7.
LabeledGrid graph_of_interval_bruteforce(const Permutation &v);

/// (i, j) lies in the rectangle spanned by (k, v_k) and (l, v_l) for ni = <k, l>.
/// Throws std::invalid_argument if (i, j) is on the graph of v.
bool is_sandwiched(Cell point, const Permutation &v, NonInversion ni);

/// Cells of Gamma[v, w0] \ Gamma(v) whose only sandwiching non-inversions
/// involve position i.
LabeledGrid sandwiched_only_by_position(const Permutation &v, int i);

/// Side of the largest contiguous s x s block fully inside the grid.
int largest_square(const LabeledGrid &grid);

/// 1 + max over non-inversions of min(j - i, v_j - v_i); 1 when there is none.
int noninversion_square_bound(const Permutation &v);

bool squares_match_noninversions(const Permutation &v);

/// No two equally labeled rows (or columns) share a support.
bool is_admissible(const LabeledGrid &grid);

/// Deletes rows I and columns J and reindexes order-preservingly; labels of
/// surviving rows and columns are kept.
LabeledGrid delete_rows_cols(const LabeledGrid &grid, const std::vector<int> &rows,
                             const std::vector<int> &cols);

/// Order-preserving reindex of [n] \ removed onto [n - |removed|].
int delta(const std::vector<int> &removed, int j);

enum class BoxColor { red, green, blue, purple };
std::string to_string(BoxColor c);

/// Maximal square B(i, v_i) with one corner on the graph of v and two on the
/// antidiagonal. A purple box carries both of its spanning corners.
struct BoundingBox {
  std::vector<Cell> corners;
  int row_lo = 0, row_hi = 0, col_lo = 0, col_hi = 0;
  BoxColor color = BoxColor::green;

  bool contains(int i, int j) const {
    return row_lo <= i && i <= row_hi && col_lo <= j && j <= col_hi;
  }
  friend bool operator==(const BoundingBox &, const BoundingBox &) = default;
};

/// The square region with corners (i, v_i) and two antidiagonal cells.
BoundingBox box_of_corner(int n, int i, int vi);

/// Bounding boxes ordered by northmost row (ties by westmost column).
std::vector<BoundingBox> bounding_boxes(const Permutation &v);
std::vector<Cell> spanning_corners(const Permutation &v);

/// Every cell of Gamma[v, w0] lies in some bounding box.
bool boxes_cover_graph(const Permutation &v);

enum class Alternation { alternates, fails, precondition_not_met };

/// Checks that the ordered bounding boxes strictly alternate blue/red with
/// no purple box. Requires v to avoid 2143 and w0 v to lie outside every
/// maximal parabolic subgroup.
Alternation boxes_alternate(const Permutation &v);

/// Partition lambda_1 >= ... >= lambda_n >= 0 fitting in an n x n box.
struct YoungDiagram {
  std::vector<int> parts;

  int rows() const { return static_cast<int>(parts.size()); }
  int part(int i) const {
    return i >= 1 && i <= rows() ? parts[static_cast<std::size_t>(i - 1)] : 0;
  }
  int cells() const;
  /// Containment of diagrams, padding the shorter with zeros.
  bool contains(const YoungDiagram &other) const;
  friend bool operator==(const YoungDiagram &, const YoungDiagram &) = default;
};

/// All partitions with at most n parts, each at most n.
std::vector<YoungDiagram> young_diagrams_in_box(int n);

int durfee(const YoungDiagram &lambda);

/// {(i, j) : j <= lambda_i}.
LabeledGrid young_grid(int n, const YoungDiagram &lambda);
/// n^n / mu = {(i, j) : j > mu_i}.
LabeledGrid complement_grid(int n, const YoungDiagram &mu);

std::optional<YoungDiagram> young_shape(const LabeledGrid &grid);
/// Returns mu with grid = n^n / mu.
std::optional<YoungDiagram> complement_young_shape(const LabeledGrid &grid);

/// The staircase (n, n-1, ..., 1).
YoungDiagram staircase(int n);

struct BlockSplit {
  int upper_size = 0; // rows [1, upper_size] use columns [n - upper_size + 1, n]
  LabeledGrid upper_right;
  LabeledGrid lower_left;
  int lower_size() const { return lower_left.size(); }
};

/// Minimal split of a block-antidiagonal grid, if any.
std::optional<BlockSplit> block_antidiagonal_split(const LabeledGrid &grid);

/// Rows top to bottom, columns left to right: 'x' on the graph of v (when
/// given), '#' other cells, '.' empty.
std::string render_ascii(const LabeledGrid &grid, const Permutation *v = nullptr);

} // namespace klimm
