#pragma once

// Permutations of [n] in one-line notation (1-indexed values).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klimm {

/// Thrown when two operands live in different symmetric groups.
class SizeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A non-inversion <i, j> of a permutation: i < j and v(i) < v(j).
struct NonInversion {
  int i = 0;
  int j = 0;
  friend bool operator==(const NonInversion &, const NonInversion &) = default;
  friend auto operator<=>(const NonInversion &, const NonInversion &) = default;
};

/// Immutable permutation of [n]. Positions and values are both 1-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word)
      : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);
  static Permutation longest(int n);

  /// Parses "2,4,1,3" or, for n <= 9, the compact form "2413".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// v(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  int at(int i) const;
  std::span<const int> word() const { return word_; }

  int length() const;
  std::vector<NonInversion> non_inversions() const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Compact digit string for n <= 9, comma separated otherwise.
  std::string str() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> word_;
};

/// (u o v)(i) = u(v(i)).
Permutation compose(const Permutation &u, const Permutation &v);

/// Bruhat order via the sorted-prefix (tableau) criterion.
bool bruhat_leq(const Permutation &x, const Permutation &y);

/// True iff some subsequence of v is order-isomorphic to pattern.
bool pattern_occurs(const Permutation &v, const Permutation &pattern);

/// Avoids both 1324 and 2143: the class with a determinantal immanant.
bool avoids_1324_2143(const Permutation &v);

/// Removes the entry at position i and standardizes the remaining values.
Permutation delete_entry(const Permutation &v, int i);

/// True iff w([j]) = [j] for some 1 <= j < n.
bool is_in_maximal_parabolic(const Permutation &w);

/// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Number of pairs i < j with v(i) > v(j) involving position i.
int inversions_at(const Permutation &v, int i);

/// Longest increasing subsequence length (patience sorting).
int longest_increasing_subsequence(const Permutation &v);

} // namespace klimm

template <> struct std::hash<klimm::Permutation> {
  std::size_t operator()(const klimm::Permutation &p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.word()) {
      h ^= static_cast<std::size_t>(x);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
