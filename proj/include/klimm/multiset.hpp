#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace klimm {

/// Weakly increasing sequence of labels from [m] (an element of multichoose([m], n)).
class Multiset {
public:
  Multiset() = default;
  /// Sorts the entries; throws if any is < 1.
  explicit Multiset(std::vector<int> entries);
  Multiset(std::initializer_list<int> entries) : Multiset(std::vector<int>(entries)) {}

  static Multiset identity(int n);
  static Multiset parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  /// 1-based access to the i-th smallest label.
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> entries() const { return entries_; }
  int max_label() const { return entries_.empty() ? 0 : entries_.back(); }
  bool is_strict() const;

  /// Entries whose positions are not in `removed` (1-based, any order).
  Multiset without_positions(std::span<const int> removed) const;

  std::string str() const;

  friend bool operator==(const Multiset &, const Multiset &) = default;
  friend auto operator<=>(const Multiset &, const Multiset &) = default;

private:
  std::vector<int> entries_;
};

/// All n-element multisets of [m] in lexicographic order.
std::vector<Multiset> multichoose(int m, int n);

/// Reflection j_i -> m + 1 - j_{n+1-i}, paired with the antidiagonal transpose
/// of an m x m matrix.
Multiset bar(const Multiset &labels, int m);

} // namespace klimm
