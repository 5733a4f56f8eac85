#include "klimm/grid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace klimm {

namespace {

std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::uint64_t bit(int j) { return std::uint64_t{1} << (j - 1); }

} // namespace

LabeledGrid::LabeledGrid(int n)
    : LabeledGrid(n, Multiset::identity(n), Multiset::identity(n)) {}

LabeledGrid::LabeledGrid(int n, Multiset row_labels, Multiset col_labels)
    : n_(n), rows_(static_cast<std::size_t>(n), 0), row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (n < 0 || n > kMaxSize)
    throw std::invalid_argument("grid size out of range");
  if (row_labels_.size() != n || col_labels_.size() != n)
    throw std::invalid_argument("grid labels must have one entry per row/column");
}

LabeledGrid LabeledGrid::full(int n) {
  LabeledGrid g(n);
  for (auto &r : g.rows_)
    r = full_mask(n);
  return g;
}

LabeledGrid LabeledGrid::from_cells(int n, const std::vector<Cell> &cells) {
  LabeledGrid g(n);
  for (auto [i, j] : cells)
    g.insert(i, j);
  return g;
}

void LabeledGrid::check_index(int i) const {
  if (i < 1 || i > n_)
    throw std::out_of_range("grid index out of range");
}

bool LabeledGrid::contains(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    return false;
  return (rows_[static_cast<std::size_t>(i - 1)] & bit(j)) != 0;
}

void LabeledGrid::insert(int i, int j) {
  check_index(i);
  check_index(j);
  rows_[static_cast<std::size_t>(i - 1)] |= bit(j);
}

void LabeledGrid::erase(int i, int j) {
  check_index(i);
  check_index(j);
  rows_[static_cast<std::size_t>(i - 1)] &= ~bit(j);
}

std::vector<Cell> LabeledGrid::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (contains(i, j))
        out.emplace_back(i, j);
  return out;
}

int LabeledGrid::cell_count() const {
  int count = 0;
  for (auto r : rows_)
    count += std::popcount(r);
  return count;
}

std::vector<int> LabeledGrid::row_support(int r) const {
  check_index(r);
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j)
    if (contains(r, j))
      out.push_back(j);
  return out;
}

std::vector<int> LabeledGrid::col_support(int c) const {
  check_index(c);
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (contains(i, c))
      out.push_back(i);
  return out;
}

LabeledGrid LabeledGrid::with_labels(Multiset rows, Multiset cols) const {
  LabeledGrid g(n_, std::move(rows), std::move(cols));
  g.rows_ = rows_;
  return g;
}

bool LabeledGrid::is_subset_of(const LabeledGrid &other) const {
  if (n_ != other.n_)
    return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if ((rows_[i] & ~other.rows_[i]) != 0)
      return false;
  return true;
}

LabeledGrid graph_of_permutation(const Permutation &v) {
  LabeledGrid g(v.size());
  for (int i = 1; i <= v.size(); ++i)
    g.insert(i, v(i));
  return g;
}

LabeledGrid graph_of_upper_interval(const Permutation &v) {
  LabeledGrid g = graph_of_permutation(v);
  for (auto [k, l] : v.non_inversions())
    for (int i = k; i <= l; ++i)
      for (int j = v(k); j <= v(l); ++j)
        g.insert(i, j);
  return g;
}

LabeledGrid graph_of_interval_bruteforce(const Permutation &v) {
  if (v.size() > 7)
    throw std::invalid_argument("brute-force interval graph limited to n <= 7");
  LabeledGrid g(v.size());
  for (const auto &u : all_permutations(v.size()))
    if (bruhat_leq(v, u))
      for (int i = 1; i <= u.size(); ++i)
        g.insert(i, u(i));
  return g;
}

bool is_sandwiched(Cell point, const Permutation &v, NonInversion ni) {
  const auto [i, j] = point;
  if (i >= 1 && i <= v.size() && v(i) == j)
    throw std::invalid_argument("is_sandwiched: point lies on the graph of v");
  return ni.i <= i && i <= ni.j && v(ni.i) <= j && j <= v(ni.j);
}

LabeledGrid sandwiched_only_by_position(const Permutation &v, int i) {
  const int n = v.size();
  if (i < 1 || i > n)
    throw std::out_of_range("sandwiched_only_by_position: index out of range");
  const auto nis = v.non_inversions();
  LabeledGrid q(n);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (v(r) == c)
        continue;
      bool any = false, other = false;
      for (auto ni : nis) {
        if (!is_sandwiched({r, c}, v, ni))
          continue;
        any = true;
        if (ni.i != i && ni.j != i)
          other = true;
      }
      if (any && !other)
        q.insert(r, c);
    }
  }
  return q;
}

int largest_square(const LabeledGrid &grid) {
  const int n = grid.size();
  std::vector<int> prev(static_cast<std::size_t>(n + 1), 0), cur(prev);
  int best = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      if (!grid.contains(i, j)) {
        cur[uj] = 0;
        continue;
      }
      cur[uj] = 1 + std::min({prev[uj], cur[uj - 1], prev[uj - 1]});
      best = std::max(best, cur[uj]);
    }
    std::swap(prev, cur);
  }
  return best;
}

int noninversion_square_bound(const Permutation &v) {
  int best = 0;
  for (auto [i, j] : v.non_inversions())
    best = std::max(best, std::min(j - i, v(j) - v(i)));
  return best + 1;
}

bool squares_match_noninversions(const Permutation &v) {
  return largest_square(graph_of_upper_interval(v)) == noninversion_square_bound(v);
}

bool is_admissible(const LabeledGrid &grid) {
  const int n = grid.size();
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (grid.contains(i, j))
        cols[static_cast<std::size_t>(j - 1)] |= bit(i);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (grid.row_labels()[a] == grid.row_labels()[b] && grid.row_mask(a) == grid.row_mask(b))
        return false;
      if (grid.col_labels()[a] == grid.col_labels()[b] &&
          cols[static_cast<std::size_t>(a - 1)] == cols[static_cast<std::size_t>(b - 1)])
        return false;
    }
  }
  return true;
}

int delta(const std::vector<int> &removed, int j) {
  return j - static_cast<int>(std::count_if(removed.begin(), removed.end(),
                                            [j](int i) { return i < j; }));
}

LabeledGrid delete_rows_cols(const LabeledGrid &grid, const std::vector<int> &rows,
                             const std::vector<int> &cols) {
  const int n = grid.size();
  auto normalized = [n](std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (int i : idx)
      if (i < 1 || i > n)
        throw std::out_of_range("delete_rows_cols: index out of range");
    return idx;
  };
  const auto rs = normalized(rows);
  const auto cs = normalized(cols);
  if (rs.size() != cs.size())
    throw std::invalid_argument("delete_rows_cols: must delete as many rows as columns");
  const int m = n - static_cast<int>(rs.size());
  LabeledGrid out(m, grid.row_labels().without_positions(rs),
                  grid.col_labels().without_positions(cs));
  for (auto [i, j] : grid.cells()) {
    if (std::binary_search(rs.begin(), rs.end(), i) || std::binary_search(cs.begin(), cs.end(), j))
      continue;
    out.insert(delta(rs, i), delta(cs, j));
  }
  return out;
}

std::string to_string(BoxColor c) {
  switch (c) {
  case BoxColor::red:
    return "red";
  case BoxColor::green:
    return "green";
  case BoxColor::blue:
    return "blue";
  case BoxColor::purple:
    return "purple";
  }
  return "?";
}

BoundingBox box_of_corner(int n, int i, int vi) {
  BoundingBox b;
  b.corners = {{i, vi}};
  const int far_row = n - vi + 1;
  const int far_col = n - i + 1;
  b.row_lo = std::min(i, far_row);
  b.row_hi = std::max(i, far_row);
  b.col_lo = std::min(vi, far_col);
  b.col_hi = std::max(vi, far_col);
  const int s = i + vi;
  b.color = s < n + 1 ? BoxColor::blue : s > n + 1 ? BoxColor::red : BoxColor::green;
  return b;
}

namespace {

bool box_within(const BoundingBox &inner, const BoundingBox &outer) {
  return outer.row_lo <= inner.row_lo && inner.row_hi <= outer.row_hi &&
         outer.col_lo <= inner.col_lo && inner.col_hi <= outer.col_hi;
}

bool same_region(const BoundingBox &a, const BoundingBox &b) {
  return a.row_lo == b.row_lo && a.row_hi == b.row_hi && a.col_lo == b.col_lo &&
         a.col_hi == b.col_hi;
}

} // namespace

std::vector<BoundingBox> bounding_boxes(const Permutation &v) {
  const int n = v.size();
  std::vector<BoundingBox> all;
  for (int i = 1; i <= n; ++i)
    all.push_back(box_of_corner(n, i, v(i)));

  std::vector<BoundingBox> out;
  for (const auto &b : all) {
    const bool dominated = std::any_of(all.begin(), all.end(), [&](const BoundingBox &o) {
      return box_within(b, o) && !same_region(b, o);
    });
    if (dominated)
      continue;
    auto twin = std::find_if(out.begin(), out.end(),
                             [&](const BoundingBox &o) { return same_region(o, b); });
    if (twin == out.end()) {
      out.push_back(b);
    } else {
      twin->corners.push_back(b.corners.front());
      twin->color = BoxColor::purple;
    }
  }
  std::sort(out.begin(), out.end(), [](const BoundingBox &a, const BoundingBox &b) {
    return std::tie(a.row_lo, a.col_lo) < std::tie(b.row_lo, b.col_lo);
  });
  return out;
}

std::vector<Cell> spanning_corners(const Permutation &v) {
  std::vector<Cell> out;
  for (const auto &b : bounding_boxes(v))
    out.insert(out.end(), b.corners.begin(), b.corners.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool boxes_cover_graph(const Permutation &v) {
  const auto boxes = bounding_boxes(v);
  for (auto [i, j] : graph_of_upper_interval(v).cells()) {
    const bool covered = std::any_of(boxes.begin(), boxes.end(),
                                     [&](const BoundingBox &b) { return b.contains(i, j); });
    if (!covered)
      return false;
  }
  return true;
}

Alternation boxes_alternate(const Permutation &v) {
  const int n = v.size();
  if (n >= 4 && pattern_occurs(v, Permutation{2, 1, 4, 3}))
    return Alternation::precondition_not_met;
  if (is_in_maximal_parabolic(compose(Permutation::longest(n), v)))
    return Alternation::precondition_not_met;
  const auto boxes = bounding_boxes(v);
  if (boxes.size() <= 1)
    return Alternation::alternates;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const auto c = boxes[k].color;
    if (c != BoxColor::blue && c != BoxColor::red)
      return Alternation::fails;
    if (k > 0 && boxes[k - 1].color == c)
      return Alternation::fails;
  }
  return Alternation::alternates;
}

int YoungDiagram::cells() const {
  int total = 0;
  for (int p : parts)
    total += p;
  return total;
}

bool YoungDiagram::contains(const YoungDiagram &other) const {
  const int rows_needed = std::max(rows(), other.rows());
  for (int i = 1; i <= rows_needed; ++i)
    if (other.part(i) > part(i))
      return false;
  return true;
}

namespace {

void partitions_rec(int n, int row, int cap, std::vector<int> &cur,
                    std::vector<YoungDiagram> &out) {
  if (row == n) {
    out.push_back({cur});
    return;
  }
  for (int p = cap; p >= 0; --p) {
    cur.push_back(p);
    partitions_rec(n, row + 1, p, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<YoungDiagram> young_diagrams_in_box(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  partitions_rec(n, 0, n, cur, out);
  return out;
}

int durfee(const YoungDiagram &lambda) {
  int s = 0;
  while (lambda.part(s + 1) >= s + 1)
    ++s;
  return s;
}

LabeledGrid young_grid(int n, const YoungDiagram &lambda) {
  LabeledGrid g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(n, lambda.part(i)); ++j)
      g.insert(i, j);
  return g;
}

LabeledGrid complement_grid(int n, const YoungDiagram &mu) {
  LabeledGrid g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = mu.part(i) + 1; j <= n; ++j)
      g.insert(i, j);
  return g;
}

std::optional<YoungDiagram> young_shape(const LabeledGrid &grid) {
  const int n = grid.size();
  YoungDiagram lambda;
  for (int i = 1; i <= n; ++i) {
    const auto mask = grid.row_mask(i);
    const int len = std::popcount(mask);
    if (mask != full_mask(len))
      return std::nullopt;
    if (i > 1 && len > lambda.parts.back())
      return std::nullopt;
    lambda.parts.push_back(len);
  }
  return lambda;
}

std::optional<YoungDiagram> complement_young_shape(const LabeledGrid &grid) {
  const int n = grid.size();
  YoungDiagram mu;
  for (int i = 1; i <= n; ++i) {
    const auto mask = grid.row_mask(i);
    const int removed = n - std::popcount(mask);
    if (mask != (full_mask(n) & ~full_mask(removed)))
      return std::nullopt;
    if (i > 1 && removed > mu.parts.back())
      return std::nullopt;
    mu.parts.push_back(removed);
  }
  return mu;
}

YoungDiagram staircase(int n) {
  YoungDiagram s;
  for (int i = n; i >= 1; --i)
    s.parts.push_back(i);
  return s;
}

std::optional<BlockSplit> block_antidiagonal_split(const LabeledGrid &grid) {
  const int n = grid.size();
  const auto cells = grid.cells();
  for (int j = 1; j < n; ++j) {
    const bool fits = std::all_of(cells.begin(), cells.end(), [&](Cell c) {
      return c.first <= j ? c.second >= n - j + 1 : c.second <= n - j;
    });
    if (!fits)
      continue;
    const auto &rl = grid.row_labels().entries();
    const auto &cl = grid.col_labels().entries();
    auto slice = [](std::span<const int> s, int from, int count) {
      return Multiset(std::vector<int>(s.begin() + from, s.begin() + from + count));
    };
    BlockSplit split;
    split.upper_size = j;
    split.upper_right = LabeledGrid(j, slice(rl, 0, j), slice(cl, n - j, j));
    split.lower_left = LabeledGrid(n - j, slice(rl, j, n - j), slice(cl, 0, n - j));
    for (auto [r, c] : cells) {
      if (r <= j)
        split.upper_right.insert(r, c - (n - j));
      else
        split.lower_left.insert(r - j, c);
    }
    return split;
  }
  return std::nullopt;
}

std::string render_ascii(const LabeledGrid &grid, const Permutation *v) {
  std::ostringstream os;
  for (int i = 1; i <= grid.size(); ++i) {
    for (int j = 1; j <= grid.size(); ++j) {
      if (j > 1)
        os << ' ';
      if (v != nullptr && (*v)(i) == j)
        os << 'x';
      else
        os << (grid.contains(i, j) ? '#' : '.');
    }
    os << '\n';
  }
  return os.str();
}

} // namespace klimm
