#include "klimm/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace klimm {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const auto n = word_.size();
  std::vector<bool> seen(n + 1, false);
  for (int x : word_) {
    if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation of [n]");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  if (n < 1)
    throw std::invalid_argument("longest element needs n >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  auto trimmed = text;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '['))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == ']'))
    trimmed.remove_suffix(1);
  if (trimmed.empty())
    throw std::invalid_argument("empty permutation");

  const bool separated =
      trimmed.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    if (trimmed.size() > 9)
      throw std::invalid_argument(
          "compact permutation form is limited to n <= 9; use commas");
    for (char c : trimmed) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("bad digit in permutation: " + std::string(text));
      w.push_back(c - '0');
    }
    return Permutation(std::move(w));
  }

  std::size_t pos = 0;
  while (pos < trimmed.size()) {
    auto end = trimmed.find_first_of(", ", pos);
    if (end == std::string_view::npos)
      end = trimmed.size();
    auto tok = trimmed.substr(pos, end - pos);
    if (!tok.empty()) {
      int value = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || p != tok.data() + tok.size())
        throw std::invalid_argument("bad entry in permutation: " + std::string(tok));
      w.push_back(value);
    }
    pos = end + 1;
  }
  return Permutation(std::move(w));
}

int Permutation::at(int i) const {
  if (i < 1 || i > size())
    throw std::out_of_range("permutation index out of range");
  return (*this)(i);
}

int Permutation::length() const {
  int count = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j])
        ++count;
  return count;
}

std::vector<NonInversion> Permutation::non_inversions() const {
  std::vector<NonInversion> out;
  const int n = size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if ((*this)(i) < (*this)(j))
        out.push_back({i, j});
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i)
    inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] != static_cast<int>(i + 1))
      return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream os;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!compact && i > 0)
      os << ',';
    os << word_[i];
  }
  return os.str();
}

Permutation compose(const Permutation &u, const Permutation &v) {
  if (u.size() != v.size())
    throw SizeMismatch("compose: permutations of different sizes");
  std::vector<int> w(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i)
    w[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(w));
}

bool bruhat_leq(const Permutation &x, const Permutation &y) {
  if (x.size() != y.size())
    throw SizeMismatch("bruhat_leq: permutations of different sizes");
  const int n = x.size();
  // Insert each prefix value into a sorted buffer and compare entrywise.
  std::vector<int> xs, ys;
  xs.reserve(static_cast<std::size_t>(n));
  ys.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), x(i)), x(i));
    ys.insert(std::upper_bound(ys.begin(), ys.end(), y(i)), y(i));
    for (std::size_t k = 0; k < xs.size(); ++k)
      if (xs[k] > ys[k])
        return false;
  }
  return true;
}

namespace {

bool pattern_search(const Permutation &v, const Permutation &p, int next_pos,
                    std::vector<int> &chosen) {
  const int k = p.size();
  const int depth = static_cast<int>(chosen.size());
  if (depth == k)
    return true;
  for (int pos = next_pos; pos <= v.size() - (k - depth - 1); ++pos) {
    const int value = v(pos);
    bool ok = true;
    for (int t = 0; t < depth && ok; ++t) {
      const bool want_less = p(t + 1) < p(depth + 1);
      const int prev = v(chosen[static_cast<std::size_t>(t)]);
      ok = want_less ? prev < value : prev > value;
    }
    if (!ok)
      continue;
    chosen.push_back(pos);
    if (pattern_search(v, p, pos + 1, chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

bool pattern_occurs(const Permutation &v, const Permutation &pattern) {
  if (pattern.size() > v.size())
    throw std::invalid_argument("pattern longer than host permutation");
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(pattern.size()));
  return pattern_search(v, pattern, 1, chosen);
}

bool avoids_1324_2143(const Permutation &v) {
  if (v.size() < 4)
    return true;
  static const Permutation p1324{1, 3, 2, 4};
  static const Permutation p2143{2, 1, 4, 3};
  return !pattern_occurs(v, p1324) && !pattern_occurs(v, p2143);
}

Permutation delete_entry(const Permutation &v, int i) {
  if (i < 1 || i > v.size())
    throw std::out_of_range("delete_entry: index out of range");
  const int removed = v(i);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(v.size() - 1));
  for (int j = 1; j <= v.size(); ++j) {
    if (j == i)
      continue;
    const int value = v(j);
    w.push_back(value > removed ? value - 1 : value);
  }
  return Permutation(std::move(w));
}

bool is_in_maximal_parabolic(const Permutation &w) {
  int prefix_max = 0;
  for (int j = 1; j < w.size(); ++j) {
    prefix_max = std::max(prefix_max, w(j));
    if (prefix_max == j)
      return true;
  }
  return false;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int inversions_at(const Permutation &v, int i) {
  int count = 0;
  for (int j = 1; j <= v.size(); ++j) {
    if (j < i && v(j) > v(i))
      ++count;
    if (j > i && v(j) < v(i))
      ++count;
  }
  return count;
}

int longest_increasing_subsequence(const Permutation &v) {
  std::vector<int> tails;
  for (int x : v.word()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

} // namespace klimm
