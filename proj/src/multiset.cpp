#include "klimm/multiset.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klimm {

Multiset::Multiset(std::vector<int> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  if (!entries_.empty() && entries_.front() < 1)
    throw std::invalid_argument("multiset labels must be positive");
}

Multiset Multiset::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Multiset(std::move(e));
}

Multiset Multiset::parse(std::string_view text) {
  std::vector<int> e;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find_first_of(", ", pos);
    if (end == std::string_view::npos)
      end = text.size();
    auto tok = text.substr(pos, end - pos);
    if (!tok.empty()) {
      int value = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || p != tok.data() + tok.size())
        throw std::invalid_argument("bad multiset entry: " + std::string(tok));
      e.push_back(value);
    }
    pos = end + 1;
  }
  return Multiset(std::move(e));
}

bool Multiset::is_strict() const {
  return std::adjacent_find(entries_.begin(), entries_.end()) == entries_.end();
}

Multiset Multiset::without_positions(std::span<const int> removed) const {
  std::vector<int> kept;
  for (int i = 1; i <= size(); ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end())
      kept.push_back((*this)[i]);
  return Multiset(std::move(kept));
}

std::string Multiset::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0)
      os << ',';
    os << entries_[i];
  }
  return os.str();
}

std::vector<Multiset> multichoose(int m, int n) {
  std::vector<Multiset> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (m < 1)
    return out;
  std::vector<int> e(static_cast<std::size_t>(n), 1);
  while (true) {
    out.emplace_back(e);
    int i = n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == m)
      --i;
    if (i < 0)
      break;
    const int next = e[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < n; ++j)
      e[static_cast<std::size_t>(j)] = next;
  }
  return out;
}

Multiset bar(const Multiset &labels, int m) {
  const int n = labels.size();
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int v = m + 1 - labels[n + 1 - i];
    if (v < 1)
      throw std::invalid_argument("bar: label exceeds matrix size");
    e[static_cast<std::size_t>(i - 1)] = v;
  }
  return Multiset(std::move(e));
}

} // namespace klimm
